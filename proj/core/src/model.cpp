#include "mopareto/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "mopareto/errors.hpp"

namespace mopareto {

Instance::Instance(std::size_t p, std::vector<Solution> solutions) : p_(p), solutions_(std::move(solutions)) {
    if (p_ == 0) throw InstanceError("number of objectives must be at least 1");
    index_.reserve(solutions_.size());
    for (std::size_t i = 0; i < solutions_.size(); ++i) {
        const Solution& s = solutions_[i];
        if (s.id.empty()) throw InstanceError("empty solution id at position " + std::to_string(i));
        if (s.f.size() != p_) {
            throw InstanceError("solution '" + s.id + "' has " + std::to_string(s.f.size()) +
                                " objective values, expected " + std::to_string(p_));
        }
        for (std::size_t j = 0; j < p_; ++j) {
            if (!s.f[j].is_positive()) {
                throw InstanceError("nonpositive objective value " + s.f[j].str() + " for solution '" + s.id +
                                    "' objective " + std::to_string(j + 1));
            }
        }
        if (!index_.emplace(s.id, i).second) throw InstanceError("duplicate solution id '" + s.id + "'");
    }
}

std::optional<std::size_t> Instance::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Instance::index_of(std::string_view id) const {
    if (const auto found = find(id)) return *found;
    throw std::out_of_range("unknown solution id '" + std::string(id) + "'");
}

Instance Instance::subset(std::span<const std::size_t> indices) const {
    std::vector<Solution> picked;
    picked.reserve(indices.size());
    for (const auto i : indices) picked.push_back(solutions_.at(i));
    return Instance(p_, std::move(picked));
}

ValueBound derive_value_bound(const Instance& instance) {
    if (instance.empty()) throw std::invalid_argument("value bound of an empty instance");
    unsigned m = 0;
    for (const auto& s : instance.solutions()) {
        for (const auto& v : s.f) {
            m = std::max({m, ceil_log2(v), ceil_log2(Rational(1) / v)});
        }
    }
    return ValueBound{m};
}

std::string_view to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::Epsilon: return "epsilon";
        case RelationKind::OneExact: return "one-exact";
        case RelationKind::TwoExact: return "two-exact";
        case RelationKind::QuasiK: return "quasi-k";
        case RelationKind::OneExactQuasiK: return "one-exact-quasi-k";
    }
    return "?";
}

RelationKind parse_relation_kind(std::string_view name) {
    for (const auto kind : {RelationKind::Epsilon, RelationKind::OneExact, RelationKind::TwoExact,
                            RelationKind::QuasiK, RelationKind::OneExactQuasiK}) {
        if (to_string(kind) == name) return kind;
    }
    throw ParseError("unknown relation '" + std::string(name) + "'");
}

RelationSpec RelationSpec::epsilon(Rational eps) { return {RelationKind::Epsilon, std::move(eps), std::nullopt}; }
RelationSpec RelationSpec::one_exact(Rational eps) { return {RelationKind::OneExact, std::move(eps), std::nullopt}; }
RelationSpec RelationSpec::two_exact(Rational eps) { return {RelationKind::TwoExact, std::move(eps), std::nullopt}; }
RelationSpec RelationSpec::quasi_k(Rational eps, int k) { return {RelationKind::QuasiK, std::move(eps), k}; }
RelationSpec RelationSpec::one_exact_quasi_k(Rational eps, int k) {
    return {RelationKind::OneExactQuasiK, std::move(eps), k};
}

void RelationSpec::validate(std::size_t p) const {
    if (!eps.is_positive()) throw std::invalid_argument("eps must be positive");
    if (has_k()) {
        if (!k) throw std::invalid_argument(std::string(to_string(kind)) + " requires k");
        if (*k < 1 || static_cast<std::size_t>(*k) > p) {
            throw std::invalid_argument("k = " + std::to_string(*k) + " outside [1, " + std::to_string(p) + "]");
        }
    } else if (k) {
        throw std::invalid_argument(std::string(to_string(kind)) + " takes no k");
    }
    if (kind == RelationKind::TwoExact && p < 2) throw std::invalid_argument("two-exact requires p >= 2");
}

std::string RelationSpec::describe() const {
    std::string out(to_string(kind));
    if (k) out += " k=" + std::to_string(*k);
    out += " eps=" + eps.str();
    return out;
}

}  // namespace mopareto
