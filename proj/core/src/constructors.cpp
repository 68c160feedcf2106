#include "mopareto/constructors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mopareto/dominance.hpp"
#include "mopareto/domsets.hpp"
#include "mopareto/errors.hpp"

namespace mopareto {

namespace {

bool image_less(const Instance& instance, std::size_t a, std::size_t b) {
    const auto fa = instance.f(a);
    const auto fb = instance.f(b);
    if (std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end())) return true;
    if (std::lexicographical_compare(fb.begin(), fb.end(), fa.begin(), fa.end())) return false;
    return a < b;
}

std::vector<int> one_based(const std::vector<std::size_t>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (const auto i : indices) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<std::size_t> normalized(std::span<const std::size_t> members, std::size_t n) {
    std::vector<std::size_t> out(members.begin(), members.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && out.back() >= n) throw std::out_of_range("member position out of range");
    return out;
}

}  // namespace

Verification verify_approximation(const Instance& instance, std::span<const std::size_t> members,
                                  const RelationSpec& spec) {
    const auto sorted = normalized(members, instance.size());
    const DominanceChecker relation(instance, spec);
    Verification result;
    result.certificate.reserve(instance.size());
    for (std::size_t y = 0; y < instance.size(); ++y) {
        const auto cover = std::find_if(sorted.begin(), sorted.end(), [&](std::size_t x) { return relation(x, y); });
        if (cover == sorted.end()) {
            result.counterexample = y;
            result.certificate.clear();
            return result;
        }
        result.certificate.push_back(
            CoverEntry{instance.id(y), instance.id(*cover), one_based(exact_components(instance.f(*cover), instance.f(y)))});
    }
    return result;
}

Verification verify_members(const Instance& instance, std::span<const std::string> member_ids,
                            const RelationSpec& spec) {
    std::vector<std::size_t> members;
    members.reserve(member_ids.size());
    for (const auto& id : member_ids) members.push_back(instance.index_of(id));
    return verify_approximation(instance, members, spec);
}

std::optional<std::string> check_certificate(const Instance& instance, const ApproximationSet& set) {
    try {
        set.relation.validate(instance.p());
    } catch (const std::invalid_argument& e) {
        return std::string("invalid relation: ") + e.what();
    }
    std::set<std::string> members;
    for (const auto& m : set.members) {
        if (!instance.find(m)) return "member '" + m + "' is not in the instance";
        members.insert(m);
    }
    std::vector<char> seen(instance.size(), 0);
    for (const auto& entry : set.certificate) {
        const auto covered = instance.find(entry.covered);
        const auto by = instance.find(entry.by);
        if (!covered) return "certificate covers unknown solution '" + entry.covered + "'";
        if (!by || members.count(entry.by) == 0) return "certificate uses non-member '" + entry.by + "'";
        if (seen[*covered]) return "solution '" + entry.covered + "' covered twice";
        seen[*covered] = 1;
        if (!r_dominates(instance.f(*by), instance.f(*covered), set.relation)) {
            return "'" + entry.by + "' does not cover '" + entry.covered + "'";
        }
        for (const int i : entry.exact_indices) {
            if (i < 1 || static_cast<std::size_t>(i) > instance.p() ||
                instance.f(*by)[i - 1] > instance.f(*covered)[i - 1]) {
                return "claimed exact component " + std::to_string(i) + " of '" + entry.covered + "' is not exact";
            }
        }
    }
    for (std::size_t y = 0; y < instance.size(); ++y) {
        if (!seen[y]) return "solution '" + instance.id(y) + "' missing from certificate";
    }
    return std::nullopt;
}

ApproximationSet make_approximation_set(const Instance& instance, std::vector<std::size_t> members,
                                        const RelationSpec& spec) {
    members = normalized(members, instance.size());
    auto verification = verify_approximation(instance, members, spec);
    if (!verification.ok()) {
        throw VerificationFailed("set does not cover '" + instance.id(*verification.counterexample) + "' under " +
                                 spec.describe());
    }
    ApproximationSet set;
    set.relation = spec;
    for (const auto m : members) set.members.push_back(instance.id(m));
    set.certificate = std::move(verification.certificate);
    return set;
}

GridReport grid_construction(const Instance& instance, const RelationSpec& spec) {
    spec.validate(instance.p());
    const bool tournament = spec.kind == RelationKind::QuasiK;
    if (spec.kind != RelationKind::Epsilon && spec.kind != RelationKind::OneExact && !tournament) {
        throw UnsupportedRelation("grid construction supports epsilon, one-exact and quasi-k only, not " +
                                  std::string(to_string(spec.kind)));
    }
    if (tournament && 2 * static_cast<std::size_t>(*spec.k) - 1 > instance.p()) {
        throw UnsupportedRelation("grid construction needs k <= ceil(p/2) for quasi-k");
    }

    GridReport report;
    report.set.relation = spec;
    if (instance.empty()) return report;

    const GridBucketing grid = bucket(instance, spec.eps);
    report.nonempty_cells = grid.cells.size();
    std::set<CellIndex> diagonals;
    for (const auto& [cell, unused] : grid.cells) diagonals.insert(diagonal_of(cell));
    report.diagonals = diagonals.size();
    report.retained = filter_weakly_nondominated_cells(grid);

    std::vector<std::size_t> members;
    for (const auto& cell : report.retained) {
        const auto& points = grid.cells.at(cell);
        if (tournament) {
            const TournamentView view(instance, points, *spec.k);
            const auto picked = greedy_tournament_dominating_set(view);
            members.insert(members.end(), picked.begin(), picked.end());
            report.per_cell_sizes.push_back(picked.size());
        } else {
            // The lexicographically smallest image also has minimum f_1.
            members.push_back(*std::min_element(points.begin(), points.end(), [&](std::size_t a, std::size_t b) {
                return image_less(instance, a, b);
            }));
            report.per_cell_sizes.push_back(1);
        }
    }
    try {
        report.set = make_approximation_set(instance, std::move(members), spec);
    } catch (const VerificationFailed& e) {
        throw std::logic_error(std::string("grid construction produced an invalid set: ") + e.what());
    }
    return report;
}

ApproximationSet construct_grid_approx(const Instance& instance, const RelationSpec& spec) {
    return grid_construction(instance, spec).set;
}

ApproximationSet weakly_efficient_lift(const Instance& instance, const ApproximationSet& set, const Rational& eps) {
    std::vector<std::size_t> members;
    for (const auto& id : set.members) members.push_back(instance.index_of(id));
    const auto check = verify_approximation(instance, members, RelationSpec::epsilon(eps));
    if (!check.ok()) {
        throw VerificationFailed("lift input is not a (1+eps)-approximation set: '" +
                                 instance.id(*check.counterexample) + "' is uncovered");
    }

    const auto weakly_efficient = weakly_efficient_set(instance);
    std::vector<char> is_we(instance.size(), 0);
    for (const auto w : weakly_efficient) is_we[w] = 1;

    std::vector<std::size_t> lifted;
    for (const auto m : members) {
        if (is_we[m]) {
            lifted.push_back(m);
            continue;
        }
        std::optional<std::size_t> best;
        for (const auto w : weakly_efficient) {
            if (strictly_dominates(instance.f(w), instance.f(m)) && (!best || image_less(instance, w, *best))) best = w;
        }
        if (!best) throw std::logic_error("strictly dominated solution without weakly efficient dominator");
        lifted.push_back(*best);
    }
    return make_approximation_set(instance, std::move(lifted), RelationSpec::quasi_k(eps, 1));
}

ApproximationSet construct_via_gap(const GapOracle& oracle, const Rational& eps, ValueBound bound, std::size_t p,
                                   std::size_t max_queries) {
    if (p == 0) throw std::invalid_argument("construct_via_gap: p must be positive");
    if (!eps.is_positive()) throw std::invalid_argument("construct_via_gap: eps must be positive");
    const Rational delta = half_step_delta(eps);
    const Rational ratio = Rational(1) + delta;
    const Rational top = pow_ratio(Rational(2), static_cast<long>(bound.M));

    // ladder[t] = 2^-M (1+delta)^t for t = 0 .. T+1, with ladder[T] >= 2^M.
    std::vector<Rational> ladder{pow_ratio(Rational(2), -static_cast<long>(bound.M))};
    while (ladder.back() < top) ladder.push_back(ladder.back() * ratio);
    ladder.push_back(ladder.back() * ratio);

    std::size_t total = 1;
    for (std::size_t i = 0; i < p; ++i) {
        if (total > max_queries / ladder.size()) {
            throw SolverLimitExceeded("gap construction needs more than " + std::to_string(max_queries) + " queries");
        }
        total *= ladder.size();
    }

    std::vector<Solution> discovered;
    std::unordered_map<std::string, std::size_t> discovered_index;
    std::vector<std::vector<std::size_t>> answered;  // ladder positions of YES queries

    std::vector<std::size_t> position(p, 0);
    GapQuery query{std::vector<Rational>(p, ladder[0]), delta};
    for (std::size_t q = 0; q < total; ++q) {
        for (std::size_t i = 0; i < p; ++i) query.b[i] = ladder[position[i]];
        if (auto answer = oracle(query)) {
            if (answer->f.size() != p) throw std::invalid_argument("gap oracle returned a vector of wrong dimension");
            for (std::size_t i = 0; i < p; ++i) {
                if (!answer->f[i].is_positive()) throw std::invalid_argument("gap oracle returned a nonpositive value");
                if (answer->f[i] > query.b[i]) {
                    throw VerificationFailed("gap oracle returned '" + answer->id + "' outside the budget");
                }
            }
            const auto [it, fresh] = discovered_index.emplace(answer->id, discovered.size());
            if (fresh) {
                discovered.push_back(std::move(*answer));
            } else if (discovered[it->second].f != answer->f) {
                throw VerificationFailed("gap oracle returned inconsistent values for '" + answer->id + "'");
            }
            answered.push_back(position);
        }
        for (std::size_t i = p; i-- > 0;) {
            if (++position[i] < ladder.size()) break;
            position[i] = 0;
        }
    }

    // Greedy cover of the answered budgets: a solution covers budget b if it
    // would itself be a valid YES answer for b.
    const std::size_t n = discovered.size();
    std::vector<std::vector<std::size_t>> covers(n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t q = 0; q < answered.size(); ++q) {
            bool fits = true;
            for (std::size_t i = 0; i < p && fits; ++i) fits = discovered[s].f[i] <= ladder[answered[q][i]];
            if (fits) covers[s].push_back(q);
        }
    }
    std::vector<char> done(answered.size(), 0);
    std::size_t remaining = answered.size();
    std::vector<std::size_t> picked;
    while (remaining > 0) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t s = 0; s < n; ++s) {
            std::size_t gain = 0;
            for (const auto q : covers[s]) gain += !done[q];
            if (gain > best_gain) {
                best_gain = gain;
                best = s;
            }
        }
        for (const auto q : covers[best]) {
            if (!done[q]) {
                done[q] = 1;
                --remaining;
            }
        }
        picked.push_back(best);
    }

    const Instance found(p, std::move(discovered));
    try {
        return make_approximation_set(found, std::move(picked), RelationSpec::epsilon(eps));
    } catch (const VerificationFailed& e) {
        throw VerificationFailed(std::string("gap oracle answers are inconsistent: ") + e.what());
    }
}

}  // namespace mopareto
