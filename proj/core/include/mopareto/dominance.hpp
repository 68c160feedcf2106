#ifndef MOPARETO_DOMINANCE_HPP
#define MOPARETO_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mopareto/model.hpp"

namespace mopareto {

// All predicates below read "x relates to y" with minimization in every
// objective, and throw std::invalid_argument on a dimension mismatch.

/// x R y for the relation in spec (see RelationKind).
bool r_dominates(std::span<const Rational> x, std::span<const Rational> y, const RelationSpec& spec);

/// f(x) <= f(y) componentwise.
bool weakly_dominates(std::span<const Rational> x, std::span<const Rational> y);
/// f(x) <= f(y) componentwise with at least one strict inequality.
bool dominates(std::span<const Rational> x, std::span<const Rational> y);
/// f(x) < f(y) componentwise.
bool strictly_dominates(std::span<const Rational> x, std::span<const Rational> y);

/// 0-based objectives i with f_i(x) <= f_i(y).
std::vector<std::size_t> exact_components(std::span<const Rational> x, std::span<const Rational> y);

/// Positions of solutions not dominated by any other solution.
std::vector<std::size_t> efficient_set(const Instance& instance);
/// Positions of solutions not strictly dominated by any other solution.
std::vector<std::size_t> weakly_efficient_set(const Instance& instance);

/**
 * Evaluates one relation over a fixed instance. Caches (1+eps)*f(y) for every
 * solution so that each pair test is a handful of exact comparisons.
 */
class DominanceChecker {
public:
    DominanceChecker(const Instance& instance, RelationSpec spec);

    /// Does solution x relate to solution y?
    bool operator()(std::size_t x, std::size_t y) const;

    const Instance& instance() const { return *instance_; }
    const RelationSpec& spec() const { return spec_; }

private:
    const Instance* instance_;
    RelationSpec spec_;
    std::vector<ObjectiveVector> scaled_;
};

/**
 * Directed graph on solution positions; arc (u, v) means u relates to v.
 * Every node carries a self-loop from construction on.
 */
class DominationDigraph {
public:
    explicit DominationDigraph(std::vector<std::string> ids);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(std::size_t node) const { return ids_[node]; }

    bool has_arc(std::size_t u, std::size_t v) const { return adjacency_[u * size() + v] != 0; }
    void add_arc(std::size_t u, std::size_t v);
    std::size_t arc_count() const;

    /// Closed out-neighbourhood of u: u itself plus every v with an arc u -> v.
    std::vector<std::size_t> out_neighbors(std::size_t u) const;

private:
    std::vector<std::string> ids_;
    std::vector<char> adjacency_;
};

DominationDigraph domination_digraph(const Instance& instance, const RelationSpec& spec);

}  // namespace mopareto

#endif  // MOPARETO_DOMINANCE_HPP
