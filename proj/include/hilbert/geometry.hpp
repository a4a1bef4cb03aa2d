#ifndef HILBERT_GEOMETRY_HPP
#define HILBERT_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hilbert {

/// One square of the 2^n x 2^n grid, identified by its lower-left lattice
/// coordinates. Column grows rightward, row grows upward.
struct Cell {
    std::int32_t col = 0;
    std::int32_t row = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using CellList = std::vector<Cell>;

/// Point on the doubled integer lattice. Cell centers live at odd
/// coordinates, so every affine image in the construction stays integral.
struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    std::int32_t a = 1, b = 0;
    std::int32_t c = 0, d = 1;

    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

constexpr Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

constexpr Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

constexpr Vec2 operator+(const Vec2& l, const Vec2& r) { return {l.x + r.x, l.y + r.y}; }
constexpr Vec2 operator-(const Vec2& l, const Vec2& r) { return {l.x - r.x, l.y - r.y}; }
constexpr Vec2 operator*(std::int64_t s, const Vec2& v) { return {s * v.x, s * v.y}; }

constexpr Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }
constexpr int determinant(const Mat2& m) { return m.a * m.d - m.b * m.c; }

constexpr bool is_orthogonal(const Mat2& m) {
    const Mat2 p = transpose(m) * m;
    return p == Mat2{1, 0, 0, 1};
}

/// Grid side 2^n.
constexpr std::int64_t grid_side(int order) { return std::int64_t{1} << order; }

/// Number of cells 4^n.
constexpr std::int64_t cell_count(int order) { return std::int64_t{1} << (2 * order); }

/// Center of a cell on the order-n doubled lattice: (2c+1, 2r+1), side 2^(n+1).
constexpr Vec2 cell_center(Cell c, int /*order*/) {
    return {2 * std::int64_t{c.col} + 1, 2 * std::int64_t{c.row} + 1};
}

/// Inverse of cell_center. The point must have odd coordinates.
constexpr Cell center_to_cell(Vec2 p) {
    return {static_cast<std::int32_t>((p.x - 1) / 2), static_cast<std::int32_t>((p.y - 1) / 2)};
}

constexpr bool cell_in_grid(Cell c, int order) {
    return c.col >= 0 && c.row >= 0 && c.col < grid_side(order) && c.row < grid_side(order);
}

/// Edge adjacency: cells differ by one unit in exactly one coordinate.
constexpr bool cells_adjacent(Cell a, Cell b) {
    const std::int64_t dc = std::int64_t{a.col} - b.col;
    const std::int64_t dr = std::int64_t{a.row} - b.row;
    return dc * dc + dr * dr == 1;
}

inline std::ostream& operator<<(std::ostream& os, Cell c) {
    return os << '(' << c.col << ',' << c.row << ')';
}

inline std::string to_string(Cell c) {
    return '(' + std::to_string(c.col) + ',' + std::to_string(c.row) + ')';
}

}  // namespace hilbert

#endif
