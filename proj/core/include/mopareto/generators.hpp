#ifndef MOPARETO_GENERATORS_HPP
#define MOPARETO_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "mopareto/model.hpp"

namespace mopareto {

// Deterministic instance families. All are pure functions of their
// parameters; ids are stable so tests and files can refer to them.

/// Six biobjective solutions x1..x6 whose minimum quasi-1-exact set {x5, x6}
/// consists of strictly dominated solutions only.
Instance gen_prop_dominated(const Rational& eps);

/// 3n+1 biobjective solutions x0, then xbar<i>, x<i>, xtilde<i> for i = 1..n
/// (ascending f_1). Requires (1+delta)^{2n} = 1+eps exactly
/// (std::invalid_argument otherwise).
Instance gen_prop_one_exact(const Rational& eps, int n, const Rational& delta);
/// Same with eps derived as (1+delta)^{2n} - 1.
Instance gen_prop_one_exact(int n, const Rational& delta);

/// n+1 solutions x0..xn with f(x_j) = (1 + (n-j)/n eps, 1 + (n-j)/n eps, (1+eps)^{2j+1}).
Instance gen_quasi2_gap(const Rational& eps, int n);

enum class DuplicationMode {
    OneExactQuasi2,  // (g1, g2, ..., g2)
    QuasiKOverHalf,  // (g1 x ceil(p/2), g2 x floor(p/2))
};

DuplicationMode parse_duplication_mode(std::string_view name);  // "one-exact-quasi2" | "quasi-k-over-half"

/// Lifts a biobjective base instance to p >= 3 objectives by copying its
/// objectives; ids are kept.
Instance gen_duplicated(const Instance& base, std::size_t p, DuplicationMode mode);

/// Biobjective antichain x1..xn with f(x_i) = (i, n+1-i).
Instance gen_antichain(int n);

struct RandomInstanceOptions {
    unsigned max_exponent = 3;     // values drawn from [2^-max_exponent, 2^max_exponent]
    unsigned max_denominator = 8;  // denominators drawn from [1, max_denominator]
};

/// Seeded random instance x1..xn; the same arguments give the same instance
/// on every platform.
Instance gen_random(std::size_t n, std::size_t p, std::uint64_t seed, RandomInstanceOptions options = {});

}  // namespace mopareto

#endif  // MOPARETO_GENERATORS_HPP
