#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mopareto/mopareto.hpp"

namespace mopareto::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RelationFlags {
    std::string relation = "epsilon";
    std::optional<int> k;
    std::string eps;
};

void add_relation_flags(CLI::App* cmd, RelationFlags& flags, bool eps_required) {
    cmd->add_option("--relation", flags.relation,
                    "epsilon | one-exact | two-exact | quasi-k | one-exact-quasi-k")
        ->capture_default_str();
    cmd->add_option("--k", flags.k, "number of exact components for quasi-k relations");
    auto* eps = cmd->add_option("--eps", flags.eps, "approximation slack, e.g. 1/2");
    if (eps_required) eps->required();
}

Rational flag_rational(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

RelationSpec to_spec(const RelationFlags& flags, std::size_t p) {
    RelationSpec spec;
    try {
        spec.kind = parse_relation_kind(flags.relation);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    spec.eps = flag_rational(flags.eps, "--eps");
    spec.k = flags.k;
    if (!spec.has_k() && spec.k) throw UsageError("--k only applies to quasi-k relations");
    try {
        spec.validate(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

Instance load_instance_file(const std::string& path) {
    try {
        return load_instance(read_text_file(path));
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

ApproximationSet load_set_file(const std::string& path) {
    try {
        return load_set(read_text_file(path));
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file_atomic(path, text);
    }
}

std::size_t resolve_limit(const std::optional<std::size_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MOPARETO_EXACT_LIMIT"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0') throw UsageError(std::string("MOPARETO_EXACT_LIMIT is not an integer: ") + env);
        return value;
    }
    return kDefaultExactNodeLimit;
}

std::vector<std::size_t> positions(const Instance& instance, const std::vector<std::string>& ids) {
    std::vector<std::size_t> out;
    for (const auto& id : ids) out.push_back(instance.index_of(id));
    return out;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    RelationFlags relation;
    std::string algo = "grid";
    std::string input;
    std::string output;
};

int run_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
    flag_rational(args.relation.eps, "--eps");
    const Instance instance = load_instance_file(args.input);
    const RelationSpec spec = to_spec(args.relation, instance.p());

    ApproximationSet set;
    if (args.algo == "grid") {
        set = construct_grid_approx(instance, spec);
    } else if (args.algo == "greedy-cover") {
        set = make_approximation_set(instance, greedy_cover_dominating_set(domination_digraph(instance, spec)), spec);
    } else if (args.algo == "gap") {
        if (spec.kind != RelationKind::Epsilon) throw UsageError("--algo gap computes epsilon sets only");
        if (instance.empty()) {
            set.relation = spec;
        } else {
            const GapOracle oracle = [&](const GapQuery& q) -> std::optional<Solution> {
                if (const auto x = gap_oracle(instance, q)) return instance[*x];
                return std::nullopt;
            };
            const auto found = construct_via_gap(oracle, spec.eps, derive_value_bound(instance), instance.p());
            set = make_approximation_set(instance, positions(instance, found.members), spec);
        }
    } else if (args.algo == "bi-greedy" || args.algo == "bi-dual2") {
        const bool quasi1 = spec.kind == RelationKind::QuasiK && spec.k == 1;
        if (spec.kind != RelationKind::Epsilon && !quasi1) {
            throw UsageError("--algo " + args.algo + " computes epsilon or quasi-k (k=1) sets only");
        }
        if (instance.p() != 2) throw UsageError("--algo " + args.algo + " needs a biobjective instance");
        const auto found = args.algo == "bi-greedy" ? greedy_biobjective_min(instance, spec.eps)
                                                    : dual_restrict_2approx(instance, spec.eps);
        set = make_approximation_set(instance, positions(instance, found.members), spec);
    } else {
        throw UsageError("unknown --algo '" + args.algo + "'");
    }

    emit(save_set(set), args.output, out);
    err << "compute: " << args.algo << " selected " << set.members.size() << " of " << instance.size()
        << " solutions (" << spec.describe() << ")\n";
    return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    RelationFlags relation;
    std::string input;
    std::string set;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    flag_rational(args.relation.eps, "--eps");
    const Instance instance = load_instance_file(args.input);
    const ApproximationSet set = load_set_file(args.set);
    const RelationSpec spec = to_spec(args.relation, instance.p());

    Verification result;
    try {
        result = verify_members(instance, set.members, spec);
    } catch (const std::out_of_range& e) {
        throw InputError(args.set + ": " + e.what());
    }
    if (!result.ok()) {
        out << instance.id(*result.counterexample) << "\n";
        err << "verify: '" << instance.id(*result.counterexample) << "' is not covered (" << spec.describe() << ")\n";
        return kNotCovered;
    }
    out << "ok\n";
    err << "verify: " << set.members.size() << " members cover all " << instance.size() << " solutions ("
        << spec.describe() << ")\n";
    return kOk;
}

// -------------------------------------------------------------------- min

struct MinArgs {
    RelationFlags relation;
    std::string input;
    std::string output;
    std::optional<std::size_t> limit;
};

int run_min(const MinArgs& args, std::ostream& out, std::ostream& err) {
    flag_rational(args.relation.eps, "--eps");
    const std::size_t limit = resolve_limit(args.limit);
    if (limit > kMaxExactNodeLimit) throw UsageError("--limit above " + std::to_string(kMaxExactNodeLimit));
    const Instance instance = load_instance_file(args.input);
    const RelationSpec spec = to_spec(args.relation, instance.p());

    const auto best = exact_min_dominating_set(domination_digraph(instance, spec), limit);
    out << best.size() << "\n";
    if (!args.output.empty()) emit(save_set(make_approximation_set(instance, best, spec)), args.output, out);
    err << "min: minimum " << spec.describe() << " set has " << best.size() << " members\n";
    return kOk;
}

// ------------------------------------------------------------------- lift

struct LiftArgs {
    std::string input;
    std::string set;
    std::string eps;
    std::string output;
};

int run_lift(const LiftArgs& args, std::ostream& out, std::ostream& err) {
    std::optional<Rational> eps;
    if (!args.eps.empty()) eps = flag_rational(args.eps, "--eps");
    const Instance instance = load_instance_file(args.input);
    const ApproximationSet set = load_set_file(args.set);
    const Rational slack = eps.value_or(set.relation.eps);
    if (!slack.is_positive()) throw UsageError("--eps must be positive");

    ApproximationSet lifted;
    try {
        lifted = weakly_efficient_lift(instance, set, slack);
    } catch (const std::out_of_range& e) {
        throw InputError(args.set + ": " + e.what());
    }
    emit(save_set(lifted), args.output, out);
    err << "lift: " << set.members.size() << " members lifted to " << lifted.members.size()
        << " weakly efficient members\n";
    return kOk;
}

// ------------------------------------------------------------------ stats

struct StatsArgs {
    RelationFlags relation;
    std::string input;
    std::vector<std::string> sweep;
    bool exact = false;
    bool csv = false;
    std::optional<std::size_t> limit;
};

struct StatsRow {
    std::string eps;
    std::optional<GridReport> grid;
    std::size_t max_cell_set = 0;
    std::uint64_t retained_bound = 0;
    std::size_t greedy_cover = 0;
    std::optional<std::size_t> exact_epsilon;
    std::optional<std::size_t> exact_quasi1;
    std::optional<std::size_t> exact_relation;
};

std::string optional_cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

int run_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> eps_values = args.sweep;
    if (!args.relation.eps.empty()) eps_values.insert(eps_values.begin(), args.relation.eps);
    if (eps_values.empty()) throw UsageError("stats needs --eps or --sweep");
    for (const auto& e : eps_values) flag_rational(e, "--eps");
    const std::size_t limit = resolve_limit(args.limit);
    if (args.exact && limit > kMaxExactNodeLimit) throw UsageError("--limit above " + std::to_string(kMaxExactNodeLimit));

    const Instance instance = load_instance_file(args.input);
    const std::size_t efficient = efficient_set(instance).size();
    const std::size_t weakly = weakly_efficient_set(instance).size();
    const unsigned M = instance.empty() ? 0 : derive_value_bound(instance).M;

    std::vector<StatsRow> rows;
    for (const auto& e : eps_values) {
        RelationFlags flags = args.relation;
        flags.eps = e;
        const RelationSpec spec = to_spec(flags, instance.p());
        StatsRow row;
        row.eps = spec.eps.str();
        try {
            row.grid = grid_construction(instance, spec);
            for (const auto s : row.grid->per_cell_sizes) row.max_cell_set = std::max(row.max_cell_set, s);
        } catch (const UnsupportedRelation&) {
            // grid columns stay empty
        }
        row.retained_bound = retained_cell_bound(instance.p(), spec.eps, M);
        const auto graph = domination_digraph(instance, spec);
        row.greedy_cover = greedy_cover_dominating_set(graph).size();
        if (args.exact) {
            row.exact_relation = exact_min_dominating_set(graph, limit).size();
            row.exact_epsilon =
                exact_min_dominating_set(domination_digraph(instance, RelationSpec::epsilon(spec.eps)), limit).size();
            row.exact_quasi1 =
                exact_min_dominating_set(domination_digraph(instance, RelationSpec::quasi_k(spec.eps, 1)), limit).size();
        }
        rows.push_back(std::move(row));
    }

    const std::string relation = args.relation.relation + (args.relation.k ? " k=" + std::to_string(*args.relation.k) : "");
    if (args.csv) {
        out << "eps,relation,n,nonempty_cells,retained_cells,retained_bound,diagonals,grid_size,max_cell_set,"
               "greedy_cover_size,exact_epsilon,exact_quasi1,exact_relation\n";
        for (const auto& r : rows) {
            out << r.eps << ',' << relation << ',' << instance.size() << ',';
            if (r.grid) {
                out << r.grid->nonempty_cells << ',' << r.grid->retained.size() << ',' << r.retained_bound << ','
                    << r.grid->diagonals << ',' << r.grid->set.members.size() << ',' << r.max_cell_set << ',';
            } else {
                out << ",," << r.retained_bound << ",,,,";
            }
            out << r.greedy_cover << ',' << optional_cell(r.exact_epsilon) << ',' << optional_cell(r.exact_quasi1)
                << ',' << optional_cell(r.exact_relation) << "\n";
        }
    } else {
        json doc;
        doc["n"] = instance.size();
        doc["p"] = instance.p();
        doc["M"] = M;
        doc["efficient"] = efficient;
        doc["weakly_efficient"] = weakly;
        doc["relation"] = relation;
        json list = json::array();
        for (const auto& r : rows) {
            json row;
            row["eps"] = r.eps;
            if (r.grid) {
                row["nonempty_cells"] = r.grid->nonempty_cells;
                row["retained_cells"] = r.grid->retained.size();
                row["diagonals"] = r.grid->diagonals;
                row["grid_size"] = r.grid->set.members.size();
                row["max_cell_set"] = r.max_cell_set;
                row["per_cell_sizes"] = r.grid->per_cell_sizes;
            }
            row["retained_bound"] = r.retained_bound;
            row["greedy_cover_size"] = r.greedy_cover;
            if (args.exact) {
                row["exact_epsilon"] = *r.exact_epsilon;
                row["exact_quasi1"] = *r.exact_quasi1;
                row["exact_relation"] = *r.exact_relation;
            }
            list.push_back(std::move(row));
        }
        doc["rows"] = std::move(list);
        out << doc.dump(2) << "\n";
    }
    err << "stats: " << rows.size() << " row(s) for " << instance.size() << " solutions, " << efficient
        << " efficient, " << weakly << " weakly efficient\n";
    return kOk;
}

// -------------------------------------------------------------------- gen

struct GenArgs {
    std::string eps;
    std::string delta;
    int n = 0;
    std::string base;
    std::size_t p = 0;
    std::string mode;
    std::uint64_t seed = 0;
    unsigned max_exponent = RandomInstanceOptions{}.max_exponent;
    unsigned max_denominator = RandomInstanceOptions{}.max_denominator;
    std::string output;
};

Instance generate(const std::string& family, const GenArgs& a) {
    try {
        if (family == "prop-dominated") return gen_prop_dominated(flag_rational(a.eps, "--eps"));
        if (family == "prop-one-exact") {
            const Rational delta = flag_rational(a.delta, "--delta");
            if (a.eps.empty()) return gen_prop_one_exact(a.n, delta);
            return gen_prop_one_exact(flag_rational(a.eps, "--eps"), a.n, delta);
        }
        if (family == "quasi2-gap") return gen_quasi2_gap(flag_rational(a.eps, "--eps"), a.n);
        if (family == "duplicated") {
            DuplicationMode mode;
            try {
                mode = parse_duplication_mode(a.mode);
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
            const Instance base = load_instance_file(a.base);
            try {
                return gen_duplicated(base, a.p, mode);
            } catch (const std::invalid_argument& e) {
                throw InputError(a.base + ": " + e.what());
            }
        }
        if (family == "antichain") return gen_antichain(a.n);
        if (family == "random") {
            return gen_random(static_cast<std::size_t>(a.n), a.p, a.seed, {a.max_exponent, a.max_denominator});
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown generator '" + family + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partially exact (1+eps)-approximation sets for explicit multiobjective instances", "mopareto"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* compute_cmd = app.add_subcommand("compute", "Compute an approximation set");
    add_relation_flags(compute_cmd, compute.relation, true);
    compute_cmd->add_option("--algo", compute.algo, "grid | greedy-cover | gap | bi-greedy | bi-dual2")
        ->capture_default_str();
    compute_cmd->add_option("-i,--input", compute.input, "instance file")->required();
    compute_cmd->add_option("-o,--out", compute.output, "output set file (default: stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check that a set covers an instance");
    add_relation_flags(verify_cmd, verify.relation, true);
    verify_cmd->add_option("-i,--input", verify.input, "instance file")->required();
    verify_cmd->add_option("--set", verify.set, "approximation set file")->required();

    MinArgs min;
    auto* min_cmd = app.add_subcommand("min", "Exact minimum cardinality (branch and bound)");
    add_relation_flags(min_cmd, min.relation, true);
    min_cmd->add_option("-i,--input", min.input, "instance file")->required();
    min_cmd->add_option("-o,--out", min.output, "also write a minimum set to this file");
    min_cmd->add_option("--limit", min.limit, "node limit (default 25, or MOPARETO_EXACT_LIMIT)");

    LiftArgs lift;
    auto* lift_cmd = app.add_subcommand("lift", "Replace strictly dominated members by weakly efficient ones");
    lift_cmd->add_option("-i,--input", lift.input, "instance file")->required();
    lift_cmd->add_option("--set", lift.set, "(1+eps)-approximation set file")->required();
    lift_cmd->add_option("--eps", lift.eps, "slack (default: the set file's)");
    lift_cmd->add_option("-o,--out", lift.output, "output set file (default: stdout)");

    StatsArgs stats;
    auto* stats_cmd = app.add_subcommand("stats", "Grid, efficiency and cardinality statistics");
    add_relation_flags(stats_cmd, stats.relation, false);
    stats_cmd->add_option("-i,--input", stats.input, "instance file")->required();
    stats_cmd->add_option("--sweep", stats.sweep, "additional eps values")->delimiter(',');
    stats_cmd->add_flag("--exact", stats.exact, "include exact minimum cardinalities");
    stats_cmd->add_flag("--csv", stats.csv, "emit CSV rows instead of JSON");
    stats_cmd->add_option("--limit", stats.limit, "node limit for --exact");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance family");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_option("-o,--out", gen.output, "output instance file (default: stdout)");
    auto* g_dom = gen_cmd->add_subcommand("prop-dominated", "six-solution instance with dominated minimum set");
    g_dom->add_option("--eps", gen.eps)->required();
    auto* g_one = gen_cmd->add_subcommand("prop-one-exact", "one-exact instance with n+1 minimum");
    g_one->add_option("--delta", gen.delta)->required();
    g_one->add_option("--n", gen.n)->required();
    g_one->add_option("--eps", gen.eps, "must equal (1+delta)^(2n)-1 if given");
    auto* g_gap = gen_cmd->add_subcommand("quasi2-gap", "quasi-2-exact cardinality gap instance");
    g_gap->add_option("--eps", gen.eps)->required();
    g_gap->add_option("--n", gen.n)->required();
    auto* g_dup = gen_cmd->add_subcommand("duplicated", "lift a biobjective instance by duplicating objectives");
    g_dup->add_option("--base", gen.base, "biobjective instance file")->required();
    g_dup->add_option("-p,--p", gen.p)->required();
    g_dup->add_option("--mode", gen.mode, "one-exact-quasi2 | quasi-k-over-half")->required();
    auto* g_anti = gen_cmd->add_subcommand("antichain", "biobjective antichain (i, n+1-i)");
    g_anti->add_option("--n", gen.n)->required();
    auto* g_rand = gen_cmd->add_subcommand("random", "seeded random instance");
    g_rand->add_option("--n", gen.n)->required();
    g_rand->add_option("-p,--p", gen.p)->required();
    g_rand->add_option("--seed", gen.seed)->required();
    g_rand->add_option("--max-exp", gen.max_exponent)->capture_default_str();
    g_rand->add_option("--max-den", gen.max_denominator)->capture_default_str();
    for (auto* sub : gen_cmd->get_subcommands({})) sub->add_option("-o,--out", gen.output, "output instance file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute_cmd->parsed()) return run_compute(compute, out, err);
        if (verify_cmd->parsed()) return run_verify(verify, out, err);
        if (min_cmd->parsed()) return run_min(min, out, err);
        if (lift_cmd->parsed()) return run_lift(lift, out, err);
        if (stats_cmd->parsed()) return run_stats(stats, out, err);
        if (gen_cmd->parsed()) {
            for (auto* sub : gen_cmd->get_subcommands()) {
                const Instance instance = generate(sub->get_name(), gen);
                emit(save_instance(instance), gen.output, out);
                err << "gen: " << sub->get_name() << " with " << instance.size() << " solutions, p = " << instance.p()
                    << "\n";
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        err << "malformed input: " << e.what() << "\n";
        return kBadInput;
    } catch (const SolverLimitExceeded& e) {
        err << "solver limit: " << e.what() << "\n";
        return kSolverLimit;
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << "\n";
        return kNotCovered;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}

}  // namespace mopareto::cli
