#include "mopareto/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mopareto {

namespace {

// Smallest t >= 0 with (1+eps)^t >= target, for target > 0.
std::uint64_t ceil_log(const Rational& ratio, const Rational& target) {
    std::uint64_t t = 0;
    Rational power(1);
    while (power < target) {
        power *= ratio;
        ++t;
    }
    return t;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

}  // namespace

std::uint64_t cell_coord(const Rational& value, const Rational& anchor, const Rational& eps) {
    if (!eps.is_positive()) throw std::invalid_argument("cell_coord: eps must be positive");
    if (!anchor.is_positive()) throw std::invalid_argument("cell_coord: anchor must be positive");
    if (value < anchor) throw std::invalid_argument("cell_coord: value below anchor");

    const Rational ratio = Rational(1) + eps;
    const Rational target = value / anchor;

    // Gallop to a bracket [lo, hi) with ratio^lo <= target < ratio^hi.
    std::uint64_t lo = 0;
    std::uint64_t hi = 1;
    while (pow_ratio(ratio, static_cast<long>(hi)) <= target) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_ratio(ratio, static_cast<long>(mid)) <= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

GridBucketing bucket(const Instance& instance, const Rational& eps) {
    if (instance.empty()) throw std::invalid_argument("bucket: empty instance");
    GridBucketing grid;
    grid.eps = eps;
    grid.lower.assign(instance.f(0).begin(), instance.f(0).end());
    for (std::size_t x = 1; x < instance.size(); ++x) {
        for (std::size_t i = 0; i < instance.p(); ++i) grid.lower[i] = std::min(grid.lower[i], instance.f(x)[i]);
    }
    for (std::size_t x = 0; x < instance.size(); ++x) {
        CellIndex cell;
        cell.coords.reserve(instance.p());
        for (std::size_t i = 0; i < instance.p(); ++i) cell.coords.push_back(cell_coord(instance.f(x)[i], grid.lower[i], eps));
        grid.cells[std::move(cell)].push_back(x);
    }
    return grid;
}

std::vector<CellIndex> filter_weakly_nondominated_cells(const GridBucketing& grid) {
    std::vector<CellIndex> kept;
    for (const auto& [cell, members] : grid.cells) {
        bool dominated = false;
        for (const auto& [other, unused] : grid.cells) {
            bool below_everywhere = true;
            for (std::size_t i = 0; i < cell.coords.size() && below_everywhere; ++i) {
                below_everywhere = other.coords[i] < cell.coords[i];
            }
            if (below_everywhere) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(cell);
    }
    return kept;
}

CellIndex diagonal_of(const CellIndex& cell) {
    if (cell.coords.empty()) return cell;
    const auto shift = *std::min_element(cell.coords.begin(), cell.coords.end());
    CellIndex key = cell;
    for (auto& c : key.coords) c -= shift;
    return key;
}

std::uint64_t retained_cell_bound(std::size_t p, const Rational& eps, unsigned M) {
    const Rational span = pow_ratio(Rational(2), 2L * static_cast<long>(M));
    const std::uint64_t per_dim = ceil_log(Rational(1) + eps, span) + 1;
    std::uint64_t bound = p;
    for (std::size_t i = 1; i < p; ++i) bound = saturating_mul(bound, per_dim);
    return bound;
}

}  // namespace mopareto
