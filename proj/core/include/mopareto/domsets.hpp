#ifndef MOPARETO_DOMSETS_HPP
#define MOPARETO_DOMSETS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mopareto/dominance.hpp"
#include "mopareto/model.hpp"

namespace mopareto {

inline constexpr std::size_t kDefaultExactNodeLimit = 25;
/// Hard ceiling for exact_min_dominating_set (bitset width).
inline constexpr std::size_t kMaxExactNodeLimit = 64;

/**
 * Complete digraph over a subset of an instance's solutions: each objective
 * ranks the points by ascending value, ties broken by instance order, and
 * u -> v whenever u outranks v in at least k of the p rankings. With
 * 2k-1 <= p every pair is joined in at least one direction.
 */
class TournamentView {
public:
    /// Throws std::invalid_argument if 2k-1 > p, k < 1, or a member is out of range.
    TournamentView(const Instance& instance, std::vector<std::size_t> members, int k);

    std::size_t size() const { return members_.size(); }
    int k() const { return k_; }
    /// Instance positions, sorted.
    const std::vector<std::size_t>& members() const { return members_; }
    /// Arc between local positions a -> b (always true for a == b).
    bool has_arc(std::size_t a, std::size_t b) const { return arcs_[a * size() + b] != 0; }

private:
    std::vector<std::size_t> members_;
    int k_;
    std::vector<char> arcs_;
};

/// Greedy maximum closed out-degree on the tournament view. Returns instance
/// positions (sorted); cardinality <= ceil(log2 n) + 1.
std::vector<std::size_t> greedy_tournament_dominating_set(const TournamentView& view);

/// Repeatedly takes the node covering the most uncovered nodes (ties: lowest
/// node). Returns sorted node indices; within (1 + ln n) of the optimum.
std::vector<std::size_t> greedy_cover_dominating_set(const DominationDigraph& graph);

/// Minimum dominating set by branch-and-bound on the covering formulation.
/// Throws SolverLimitExceeded if the graph has more than node_limit nodes, and
/// std::invalid_argument if node_limit exceeds kMaxExactNodeLimit.
std::vector<std::size_t> exact_min_dominating_set(const DominationDigraph& graph,
                                                  std::size_t node_limit = kDefaultExactNodeLimit);

bool is_dominating_set(const DominationDigraph& graph, std::span<const std::size_t> nodes);

}  // namespace mopareto

#endif  // MOPARETO_DOMSETS_HPP
