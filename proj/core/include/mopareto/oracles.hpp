#ifndef MOPARETO_ORACLES_HPP
#define MOPARETO_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mopareto/model.hpp"

namespace mopareto {

/// Gap_delta(b): return a solution with f <= b, or certify that nothing has
/// f <= b / (1+delta).
struct GapQuery {
    std::vector<Rational> b;
    Rational delta;

    /// b of length p with positive entries, delta > 0; std::invalid_argument otherwise.
    void validate(std::size_t p) const;
};

/// Exact Gap oracle over an explicit instance: the first solution (instance
/// order) with f <= b, or nullopt for NO.
std::optional<std::size_t> gap_oracle(const Instance& instance, const GapQuery& query);

/// Checks an answer (solution id, or nullopt for NO) against the definition
/// of Gap_delta(b) by exhaustive scan.
bool valid_gap_answer(const Instance& instance, const GapQuery& query, const std::optional<std::string>& answer);

/**
 * Two biobjective instances a Gap oracle with delta >= 1/l cannot tell apart:
 * first = {x1}, second = {x1, x2}, f(x1) = (1+1/l, 1+1/l), f(x2) = (1, 1).
 */
struct AdversarialPair {
    std::uint64_t l;
    Instance first;
    Instance second;
};

AdversarialPair make_adversarial_pair(std::uint64_t l);

/// "x1" if b >= f(x1) componentwise, else NO. Valid for both instances of the
/// pair. Throws PrecisionError for delta < 1/l.
std::optional<std::string> consistent_gap_answer(const AdversarialPair& pair, const GapQuery& query);

/// Constrained^i: among solutions with f_j <= bounds for all j != i (bounds
/// listed in objective order, skipping i), one minimizing f_i; ties go to the
/// lexicographically smallest image, then instance order. nullopt = INFEASIBLE.
std::optional<std::size_t> constrained_oracle(const Instance& instance, std::size_t objective,
                                              std::span<const Rational> bounds);

/// DualRestrict^i_delta: INFEASIBLE iff no solution meets the bounds;
/// otherwise an efficient x with f_i(x) <= opt_i(bounds) and
/// f_j(x) <= (1+delta) * bound_j. Ties as in constrained_oracle.
std::optional<std::size_t> dual_restrict_oracle(const Instance& instance, std::size_t objective,
                                                std::span<const Rational> bounds, const Rational& delta);

/// delta with (1+delta)^2 <= 1+eps: the exact square-root step when 1+eps is
/// a rational square, else the largest multiple of 2^-40 that fits.
Rational half_step_delta(const Rational& eps);

/// Minimum-cardinality (1+eps)-approximation set for p = 2, built greedily
/// from Constrained^2 calls. Members are weakly efficient, so the result is
/// returned (and certified) as quasi-1-exact.
ApproximationSet greedy_biobjective_min(const Instance& instance, const Rational& eps);

/// At most twice the minimum cardinality for p = 2, built from
/// DualRestrict^2 calls with a half step. Members are efficient; certified as
/// quasi-1-exact.
ApproximationSet dual_restrict_2approx(const Instance& instance, const Rational& eps);

}  // namespace mopareto

#endif  // MOPARETO_ORACLES_HPP
