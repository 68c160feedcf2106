#ifndef MOPARETO_MODEL_HPP
#define MOPARETO_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mopareto/rational.hpp"

namespace mopareto {

using ObjectiveVector = std::vector<Rational>;

struct Solution {
    std::string id;
    ObjectiveVector f;
};

/**
 * An explicitly given instance: an ordered list of identified solutions, each
 * with a p-dimensional strictly positive objective vector (all minimized).
 *
 * The list order is the tie-breaking order used by every deterministic
 * algorithm in the library ("instance order"). Solutions are referred to by
 * their position in that order.
 */
class Instance {
public:
    /// Validates: p >= 1, ids unique and nonempty, every vector of length p,
    /// every value > 0. Throws InstanceError otherwise.
    Instance(std::size_t p, std::vector<Solution> solutions);

    std::size_t p() const { return p_; }
    std::size_t size() const { return solutions_.size(); }
    bool empty() const { return solutions_.empty(); }

    const Solution& operator[](std::size_t index) const { return solutions_[index]; }
    const std::string& id(std::size_t index) const { return solutions_[index].id; }
    std::span<const Rational> f(std::size_t index) const { return solutions_[index].f; }
    const std::vector<Solution>& solutions() const { return solutions_; }

    std::optional<std::size_t> find(std::string_view id) const;
    /// Throws std::out_of_range for unknown ids.
    std::size_t index_of(std::string_view id) const;

    /// The sub-instance on the given positions, in the given order.
    Instance subset(std::span<const std::size_t> indices) const;

private:
    std::size_t p_;
    std::vector<Solution> solutions_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Smallest M >= 0 with 2^-M <= f_i(x) <= 2^M for every value of an instance.
struct ValueBound {
    unsigned M = 0;
};

/// Throws std::invalid_argument for an empty instance.
ValueBound derive_value_bound(const Instance& instance);

enum class RelationKind { Epsilon, OneExact, TwoExact, QuasiK, OneExactQuasiK };

/// "epsilon", "one-exact", "two-exact", "quasi-k", "one-exact-quasi-k".
std::string_view to_string(RelationKind kind);
/// Inverse of to_string; throws ParseError.
RelationKind parse_relation_kind(std::string_view name);

/// Which approximate-dominance relation is meant, with its parameters.
struct RelationSpec {
    RelationKind kind = RelationKind::Epsilon;
    Rational eps{1};
    std::optional<int> k;  // only for QuasiK / OneExactQuasiK

    static RelationSpec epsilon(Rational eps);
    static RelationSpec one_exact(Rational eps);
    static RelationSpec two_exact(Rational eps);
    static RelationSpec quasi_k(Rational eps, int k);
    static RelationSpec one_exact_quasi_k(Rational eps, int k);

    bool has_k() const { return kind == RelationKind::QuasiK || kind == RelationKind::OneExactQuasiK; }

    /// Checks eps > 0, k presence, 1 <= k <= p, and p >= 2 for two-exact.
    /// Throws std::invalid_argument.
    void validate(std::size_t p) const;

    std::string describe() const;

    friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

/// One line of a coverage certificate.
struct CoverEntry {
    std::string covered;
    std::string by;
    std::vector<int> exact_indices;  // 1-based objective indices with f_i(by) <= f_i(covered)

    friend bool operator==(const CoverEntry&, const CoverEntry&) = default;
};

struct ApproximationSet {
    RelationSpec relation;
    std::vector<std::string> members;
    std::vector<CoverEntry> certificate;

    friend bool operator==(const ApproximationSet&, const ApproximationSet&) = default;
};

}  // namespace mopareto

#endif  // MOPARETO_MODEL_HPP
