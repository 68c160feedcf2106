#ifndef MOPARETO_GRID_HPP
#define MOPARETO_GRID_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mopareto/model.hpp"

namespace mopareto {

/// Integer coordinates of a grid cell, one per objective.
struct CellIndex {
    std::vector<std::uint64_t> coords;

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/**
 * Geometric grid with ratio (1+eps) per dimension, anchored at the
 * per-objective instance minima. Solution x lands in cell c with
 * lower_i * (1+eps)^c_i <= f_i(x) < lower_i * (1+eps)^(c_i+1).
 */
struct GridBucketing {
    Rational eps;
    std::vector<Rational> lower;
    std::map<CellIndex, std::vector<std::size_t>> cells;  // nonempty cells only, members in instance order
};

/// Largest t with anchor * (1+eps)^t <= value. Exact. Requires
/// value >= anchor > 0 and eps > 0 (std::invalid_argument otherwise).
std::uint64_t cell_coord(const Rational& value, const Rational& anchor, const Rational& eps);

/// Requires a nonempty instance.
GridBucketing bucket(const Instance& instance, const Rational& eps);

/// Nonempty cells c for which no nonempty c' has c'_i < c_i in every coordinate.
std::vector<CellIndex> filter_weakly_nondominated_cells(const GridBucketing& grid);

/// c - min_i(c_i) * (1,...,1): equal for cells on the same diagonal.
CellIndex diagonal_of(const CellIndex& cell);

/// p * (ceil(log_{1+eps}(2^{2M})) + 1)^(p-1), saturating at UINT64_MAX.
std::uint64_t retained_cell_bound(std::size_t p, const Rational& eps, unsigned M);

}  // namespace mopareto

#endif  // MOPARETO_GRID_HPP
