#ifndef MOPARETO_CONSTRUCTORS_HPP
#define MOPARETO_CONSTRUCTORS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mopareto/grid.hpp"
#include "mopareto/model.hpp"
#include "mopareto/oracles.hpp"

namespace mopareto {

/**
 * Outcome of checking a candidate set against an instance.
 *
 * On success the certificate lists every solution of the instance (instance
 * order) with the first member (instance order) that covers it and all
 * components where that coverage is exact. On failure it is empty and
 * counterexample names the first uncovered solution.
 */
struct Verification {
    std::optional<std::size_t> counterexample;
    std::vector<CoverEntry> certificate;

    bool ok() const { return !counterexample.has_value(); }
};

Verification verify_approximation(const Instance& instance, std::span<const std::size_t> members,
                                  const RelationSpec& spec);
/// Same, by id. Throws std::out_of_range on an unknown id.
Verification verify_members(const Instance& instance, std::span<const std::string> member_ids,
                            const RelationSpec& spec);

/// Re-checks every certificate line of set against instance; returns a
/// description of the first problem, or nullopt if the certificate holds.
std::optional<std::string> check_certificate(const Instance& instance, const ApproximationSet& set);

/// Verifies members and packages them with their certificate. Throws
/// VerificationFailed if they do not cover the instance.
ApproximationSet make_approximation_set(const Instance& instance, std::vector<std::size_t> members,
                                        const RelationSpec& spec);

struct GridReport {
    ApproximationSet set;
    std::size_t nonempty_cells = 0;
    std::size_t diagonals = 0;              // distinct diagonal keys over nonempty cells
    std::vector<CellIndex> retained;        // weakly nondominated nonempty cells
    std::vector<std::size_t> per_cell_sizes;  // aligned with retained
};

/// Grid construction with per-cell representatives: the lexicographically
/// smallest image for epsilon and one-exact, a greedy tournament dominating
/// set for quasi-k with 2k-1 <= p. Other relations throw UnsupportedRelation.
GridReport grid_construction(const Instance& instance, const RelationSpec& spec);
ApproximationSet construct_grid_approx(const Instance& instance, const RelationSpec& spec);

/// Replaces each strictly dominated member by its weakly efficient strict
/// dominator with the lexicographically smallest image (then instance order).
/// The input must be a (1+eps)-approximation set (VerificationFailed
/// otherwise). The result is certified as quasi-1-exact.
ApproximationSet weakly_efficient_lift(const Instance& instance, const ApproximationSet& set, const Rational& eps);

/// A Gap oracle as seen by a generic algorithm: it hands back whole
/// solutions, or nullopt for NO.
using GapOracle = std::function<std::optional<Solution>(const GapQuery&)>;

inline constexpr std::size_t kDefaultGapQueryBudget = 1'000'000;

/**
 * (1+eps)-approximation set discovered through Gap queries alone. Queries
 * every budget vector on the per-dimension ladder 2^-M (1+delta)^t with
 * (1+delta)^2 <= 1+eps, then keeps a greedy cover of the answered budgets.
 * The certificate refers to the discovered solutions only.
 * Throws SolverLimitExceeded if the ladder needs more than max_queries queries.
 */
ApproximationSet construct_via_gap(const GapOracle& oracle, const Rational& eps, ValueBound bound, std::size_t p,
                                   std::size_t max_queries = kDefaultGapQueryBudget);

}  // namespace mopareto

#endif  // MOPARETO_CONSTRUCTORS_HPP
