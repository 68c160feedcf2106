#include "mopareto/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "mopareto/errors.hpp"

namespace mopareto {

namespace {

void require_positive(const Rational& eps, const char* what) {
    if (!eps.is_positive()) throw std::invalid_argument(std::string(what) + " must be positive");
}

std::string numbered(const char* prefix, long i) { return prefix + std::to_string(i); }

// Uniform-ish draw from [lo, hi] using the raw engine output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

}  // namespace

Instance gen_prop_dominated(const Rational& eps) {
    require_positive(eps, "eps");
    const Rational one(1);
    const Rational e = one + eps;
    const Rational half = one + eps / Rational(2);
    const Rational quarter = one + eps / Rational(4);
    return Instance(2, {
                           Solution{"x1", {one, e * e}},
                           Solution{"x2", {half, e * quarter}},
                           Solution{"x3", {e * quarter, half}},
                           Solution{"x4", {e * e, one}},
                           Solution{"x5", {e, e * half}},
                           Solution{"x6", {e * half, e}},
                       });
}

Instance gen_prop_one_exact(const Rational& eps, int n, const Rational& delta) {
    require_positive(eps, "eps");
    require_positive(delta, "delta");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const Rational one(1);
    const Rational e = one + eps;
    const Rational d = one + delta;
    if (pow_ratio(d, 2L * n) != e) {
        throw std::invalid_argument("(1+delta)^(2n) != 1+eps for delta=" + delta.str() + ", n=" + std::to_string(n) +
                                    ", eps=" + eps.str());
    }

    std::vector<Solution> solutions;
    solutions.push_back(Solution{"x0", {one, pow_ratio(e, n)}});
    for (long i = 1; i <= n; ++i) {
        const Rational base = pow_ratio(e, n - i);
        solutions.push_back(Solution{numbered("xbar", i), {Rational(3 * i), base * pow_ratio(d, i - 1)}});
        solutions.push_back(Solution{numbered("x", i), {Rational(3 * i + 1), base * pow_ratio(d, i)}});
        solutions.push_back(Solution{numbered("xtilde", i), {Rational(3 * i + 2), base / pow_ratio(d, i)}});
    }
    return Instance(2, std::move(solutions));
}

Instance gen_prop_one_exact(int n, const Rational& delta) {
    require_positive(delta, "delta");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const Rational eps = pow_ratio(Rational(1) + delta, 2L * n) - Rational(1);
    return gen_prop_one_exact(eps, n, delta);
}

Instance gen_quasi2_gap(const Rational& eps, int n) {
    require_positive(eps, "eps");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const Rational e = Rational(1) + eps;
    std::vector<Solution> solutions;
    for (long j = 0; j <= n; ++j) {
        const Rational shared = Rational(1) + Rational(n - j, n) * eps;
        solutions.push_back(Solution{numbered("x", j), {shared, shared, pow_ratio(e, 2 * j + 1)}});
    }
    return Instance(3, std::move(solutions));
}

DuplicationMode parse_duplication_mode(std::string_view name) {
    if (name == "one-exact-quasi2") return DuplicationMode::OneExactQuasi2;
    if (name == "quasi-k-over-half") return DuplicationMode::QuasiKOverHalf;
    throw ParseError("unknown duplication mode '" + std::string(name) + "'");
}

Instance gen_duplicated(const Instance& base, std::size_t p, DuplicationMode mode) {
    if (base.p() != 2) throw std::invalid_argument("duplication needs a biobjective base");
    if (p < 3) throw std::invalid_argument("duplication needs p >= 3");
    const std::size_t first_copies = mode == DuplicationMode::OneExactQuasi2 ? 1 : (p + 1) / 2;
    std::vector<Solution> solutions;
    solutions.reserve(base.size());
    for (const auto& s : base.solutions()) {
        Solution lifted{s.id, {}};
        for (std::size_t i = 0; i < p; ++i) lifted.f.push_back(i < first_copies ? s.f[0] : s.f[1]);
        solutions.push_back(std::move(lifted));
    }
    return Instance(p, std::move(solutions));
}

Instance gen_antichain(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::vector<Solution> solutions;
    for (long i = 1; i <= n; ++i) solutions.push_back(Solution{numbered("x", i), {Rational(i), Rational(n + 1 - i)}});
    return Instance(2, std::move(solutions));
}

Instance gen_random(std::size_t n, std::size_t p, std::uint64_t seed, RandomInstanceOptions options) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    if (options.max_denominator < 1) throw std::invalid_argument("max_denominator must be at least 1");
    if (options.max_exponent > 20) throw std::invalid_argument("max_exponent above 20 unsupported");

    std::mt19937_64 rng(seed);
    const std::uint64_t scale = std::uint64_t{1} << options.max_exponent;
    std::vector<Solution> solutions;
    solutions.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        Solution sol{numbered("x", static_cast<long>(s + 1)), {}};
        for (std::size_t i = 0; i < p; ++i) {
            const std::uint64_t den = draw(rng, 1, options.max_denominator);
            // num/den within [2^-m, 2^m]  <=>  ceil(den / 2^m) <= num <= den * 2^m
            const std::uint64_t lo = (den + scale - 1) / scale;
            const std::uint64_t num = draw(rng, lo, den * scale);
            sol.f.push_back(Rational::from_integers(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
        }
        solutions.push_back(std::move(sol));
    }
    return Instance(p, std::move(solutions));
}

}  // namespace mopareto
