#include "mopareto/dominance.hpp"

#include <stdexcept>

namespace mopareto {

namespace {

void check_dims(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()));
    }
}

// Core test shared by the free function and the checker. scaled_y holds
// (1+eps)*y componentwise.
bool relates(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> scaled_y,
             const RelationSpec& spec) {
    std::size_t exact = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= y[i]) {
            ++exact;
        } else {
            if (x[i] > scaled_y[i]) return false;
            if (i == 0 && spec.kind != RelationKind::Epsilon && spec.kind != RelationKind::QuasiK) return false;
            if (i == 1 && spec.kind == RelationKind::TwoExact) return false;
        }
    }
    if (spec.has_k()) return exact >= static_cast<std::size_t>(*spec.k);
    return true;
}

ObjectiveVector scale(std::span<const Rational> y, const Rational& factor) {
    ObjectiveVector out;
    out.reserve(y.size());
    for (const auto& v : y) out.push_back(v * factor);
    return out;
}

}  // namespace

bool r_dominates(std::span<const Rational> x, std::span<const Rational> y, const RelationSpec& spec) {
    check_dims(x, y);
    spec.validate(x.size());
    const auto scaled = scale(y, Rational(1) + spec.eps);
    return relates(x, y, scaled, spec);
}

bool weakly_dominates(std::span<const Rational> x, std::span<const Rational> y) {
    check_dims(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
    }
    return true;
}

bool dominates(std::span<const Rational> x, std::span<const Rational> y) {
    check_dims(x, y);
    bool strict_somewhere = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
        if (x[i] < y[i]) strict_somewhere = true;
    }
    return strict_somewhere;
}

bool strictly_dominates(std::span<const Rational> x, std::span<const Rational> y) {
    check_dims(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] < y[i])) return false;
    }
    return true;
}

std::vector<std::size_t> exact_components(std::span<const Rational> x, std::span<const Rational> y) {
    check_dims(x, y);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= y[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> efficient_set(const Instance& instance) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < instance.size(); ++y) {
        bool dominated = false;
        for (std::size_t x = 0; x < instance.size() && !dominated; ++x) {
            dominated = x != y && dominates(instance.f(x), instance.f(y));
        }
        if (!dominated) out.push_back(y);
    }
    return out;
}

std::vector<std::size_t> weakly_efficient_set(const Instance& instance) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < instance.size(); ++y) {
        bool dominated = false;
        for (std::size_t x = 0; x < instance.size() && !dominated; ++x) {
            dominated = x != y && strictly_dominates(instance.f(x), instance.f(y));
        }
        if (!dominated) out.push_back(y);
    }
    return out;
}

DominanceChecker::DominanceChecker(const Instance& instance, RelationSpec spec)
    : instance_(&instance), spec_(std::move(spec)) {
    spec_.validate(instance.p());
    const Rational factor = Rational(1) + spec_.eps;
    scaled_.reserve(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) scaled_.push_back(scale(instance.f(i), factor));
}

bool DominanceChecker::operator()(std::size_t x, std::size_t y) const {
    return relates(instance_->f(x), instance_->f(y), scaled_[y], spec_);
}

DominationDigraph::DominationDigraph(std::vector<std::string> ids)
    : ids_(std::move(ids)), adjacency_(ids_.size() * ids_.size(), 0) {
    for (std::size_t u = 0; u < size(); ++u) add_arc(u, u);
}

void DominationDigraph::add_arc(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw std::out_of_range("arc endpoint out of range");
    adjacency_[u * size() + v] = 1;
}

std::size_t DominationDigraph::arc_count() const {
    std::size_t n = 0;
    for (const char a : adjacency_) n += a != 0;
    return n;
}

std::vector<std::size_t> DominationDigraph::out_neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v) {
        if (has_arc(u, v)) out.push_back(v);
    }
    return out;
}

DominationDigraph domination_digraph(const Instance& instance, const RelationSpec& spec) {
    std::vector<std::string> ids;
    ids.reserve(instance.size());
    for (const auto& s : instance.solutions()) ids.push_back(s.id);
    DominationDigraph graph(std::move(ids));
    const DominanceChecker relation(instance, spec);
    for (std::size_t u = 0; u < instance.size(); ++u) {
        for (std::size_t v = 0; v < instance.size(); ++v) {
            if (u != v && relation(u, v)) graph.add_arc(u, v);
        }
    }
    return graph;
}

}  // namespace mopareto
