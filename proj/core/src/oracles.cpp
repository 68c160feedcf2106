#include "mopareto/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "mopareto/constructors.hpp"
#include "mopareto/dominance.hpp"
#include "mopareto/errors.hpp"

namespace mopareto {

namespace {

void check_bounds(const Instance& instance, std::size_t objective, std::span<const Rational> bounds) {
    if (objective >= instance.p()) throw std::invalid_argument("objective index out of range");
    if (bounds.size() + 1 != instance.p()) {
        throw std::invalid_argument("expected " + std::to_string(instance.p() - 1) + " bounds, got " +
                                    std::to_string(bounds.size()));
    }
    for (const auto& b : bounds) {
        if (!b.is_positive()) throw std::invalid_argument("bounds must be positive");
    }
}

// Does x satisfy f_j(x) <= factor * bound_j for every j != objective?
bool within(const Instance& instance, std::size_t x, std::size_t objective, std::span<const Rational> bounds,
            const Rational& factor) {
    const auto f = instance.f(x);
    std::size_t b = 0;
    for (std::size_t j = 0; j < instance.p(); ++j) {
        if (j == objective) continue;
        if (f[j] > factor * bounds[b++]) return false;
    }
    return true;
}

// Order used to pick among admissible answers: f_objective, then full image,
// then instance order.
bool better_answer(const Instance& instance, std::size_t objective, std::size_t a, std::size_t b) {
    const auto fa = instance.f(a);
    const auto fb = instance.f(b);
    if (fa[objective] != fb[objective]) return fa[objective] < fb[objective];
    if (std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end())) return true;
    if (std::lexicographical_compare(fb.begin(), fb.end(), fa.begin(), fa.end())) return false;
    return a < b;
}

bool is_efficient(const Instance& instance, std::size_t x) {
    for (std::size_t y = 0; y < instance.size(); ++y) {
        if (y != x && dominates(instance.f(y), instance.f(x))) return false;
    }
    return true;
}

void require_biobjective(const Instance& instance, const Rational& eps) {
    if (instance.p() != 2) throw std::invalid_argument("biobjective algorithm needs p = 2");
    if (!eps.is_positive()) throw std::invalid_argument("eps must be positive");
}

// Shared greedy sweep: repeatedly take the uncovered solution with minimum
// f_1 and ask pick(t) for a solution covering it.
template <typename Pick>
ApproximationSet biobjective_sweep(const Instance& instance, const Rational& eps, Pick pick) {
    const DominanceChecker covers(instance, RelationSpec::epsilon(eps));
    std::vector<char> uncovered(instance.size(), 1);
    std::size_t remaining = instance.size();
    std::vector<std::size_t> members;
    while (remaining > 0) {
        std::optional<std::size_t> leftmost;
        for (std::size_t y = 0; y < instance.size(); ++y) {
            if (uncovered[y] && (!leftmost || instance.f(y)[0] < instance.f(*leftmost)[0])) leftmost = y;
        }
        const auto chosen = pick(instance.f(*leftmost)[0]);
        if (!chosen || !covers(*chosen, *leftmost)) throw std::logic_error("biobjective sweep made no progress");
        members.push_back(*chosen);
        for (std::size_t y = 0; y < instance.size(); ++y) {
            if (uncovered[y] && covers(*chosen, y)) {
                uncovered[y] = 0;
                --remaining;
            }
        }
    }
    return make_approximation_set(instance, std::move(members), RelationSpec::quasi_k(eps, 1));
}

}  // namespace

void GapQuery::validate(std::size_t p) const {
    if (b.size() != p) throw std::invalid_argument("gap query has wrong dimension");
    for (const auto& v : b) {
        if (!v.is_positive()) throw std::invalid_argument("gap budgets must be positive");
    }
    if (!delta.is_positive()) throw std::invalid_argument("gap delta must be positive");
}

std::optional<std::size_t> gap_oracle(const Instance& instance, const GapQuery& query) {
    query.validate(instance.p());
    for (std::size_t x = 0; x < instance.size(); ++x) {
        if (weakly_dominates(instance.f(x), query.b)) return x;
    }
    return std::nullopt;
}

bool valid_gap_answer(const Instance& instance, const GapQuery& query, const std::optional<std::string>& answer) {
    query.validate(instance.p());
    if (answer) {
        const auto x = instance.find(*answer);
        return x && weakly_dominates(instance.f(*x), query.b);
    }
    const Rational factor = Rational(1) + query.delta;
    for (std::size_t x = 0; x < instance.size(); ++x) {
        bool fits = true;
        for (std::size_t i = 0; i < instance.p() && fits; ++i) fits = instance.f(x)[i] * factor <= query.b[i];
        if (fits) return false;
    }
    return true;
}

AdversarialPair make_adversarial_pair(std::uint64_t l) {
    if (l == 0) throw std::invalid_argument("adversarial pair needs l >= 1");
    const Rational v = Rational(1) + Rational(mpq_class(1, mpz_class(std::to_string(l))));
    Instance first(2, {Solution{"x1", {v, v}}});
    Instance second(2, {Solution{"x1", {v, v}}, Solution{"x2", {Rational(1), Rational(1)}}});
    return AdversarialPair{l, std::move(first), std::move(second)};
}

std::optional<std::string> consistent_gap_answer(const AdversarialPair& pair, const GapQuery& query) {
    query.validate(2);
    const Rational threshold(mpq_class(1, mpz_class(std::to_string(pair.l))));
    if (query.delta < threshold) {
        throw PrecisionError("precision exceeds adversary regime: delta " + query.delta.str() + " < 1/" +
                             std::to_string(pair.l));
    }
    if (weakly_dominates(pair.first.f(0), query.b)) return pair.first.id(0);
    return std::nullopt;
}

std::optional<std::size_t> constrained_oracle(const Instance& instance, std::size_t objective,
                                              std::span<const Rational> bounds) {
    check_bounds(instance, objective, bounds);
    std::optional<std::size_t> best;
    for (std::size_t x = 0; x < instance.size(); ++x) {
        if (within(instance, x, objective, bounds, Rational(1)) &&
            (!best || better_answer(instance, objective, x, *best))) {
            best = x;
        }
    }
    return best;
}

std::optional<std::size_t> dual_restrict_oracle(const Instance& instance, std::size_t objective,
                                                std::span<const Rational> bounds, const Rational& delta) {
    if (!delta.is_positive()) throw std::invalid_argument("delta must be positive");
    const auto optimum = constrained_oracle(instance, objective, bounds);
    if (!optimum) return std::nullopt;
    const Rational& opt = instance.f(*optimum)[objective];
    const Rational slack = Rational(1) + delta;

    std::optional<std::size_t> best;
    for (std::size_t x = 0; x < instance.size(); ++x) {
        if (instance.f(x)[objective] <= opt && within(instance, x, objective, bounds, slack) &&
            is_efficient(instance, x) && (!best || better_answer(instance, objective, x, *best))) {
            best = x;
        }
    }
    if (!best) throw std::logic_error("dual_restrict_oracle: no efficient admissible answer");
    return best;
}

Rational half_step_delta(const Rational& eps) {
    if (!eps.is_positive()) throw std::invalid_argument("eps must be positive");
    const Rational base = Rational(1) + eps;
    const mpz_class num = base.numerator();
    const mpz_class den = base.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        return Rational::from_integers(sqrt(num), sqrt(den)) - Rational(1);
    }
    // Largest m / 2^40 with (1 + m/2^40)^2 <= 1+eps.
    const mpz_class scale = mpz_class(1) << 40;
    const mpz_class scaled = (num * scale * scale) / den;
    const mpz_class root = sqrt(scaled);
    const Rational delta = Rational::from_integers(root - scale, scale);
    if (!delta.is_positive()) throw std::domain_error("eps too small for the 2^-40 delta ladder");
    return delta;
}

ApproximationSet greedy_biobjective_min(const Instance& instance, const Rational& eps) {
    require_biobjective(instance, eps);
    const Rational stretch = Rational(1) + eps;
    return biobjective_sweep(instance, eps, [&](const Rational& t) {
        const Rational bound = stretch * t;
        // Constrained^2: minimize f_2 subject to f_1 <= (1+eps) t.
        return constrained_oracle(instance, 1, std::span<const Rational>(&bound, 1));
    });
}

ApproximationSet dual_restrict_2approx(const Instance& instance, const Rational& eps) {
    require_biobjective(instance, eps);
    const Rational delta = half_step_delta(eps);
    const Rational stretch = Rational(1) + delta;
    return biobjective_sweep(instance, eps, [&](const Rational& t) {
        const Rational bound = stretch * t;
        return dual_restrict_oracle(instance, 1, std::span<const Rational>(&bound, 1), delta);
    });
}

}  // namespace mopareto
