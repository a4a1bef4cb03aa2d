#include "hilbert/symmetry.hpp"

#include <algorithm>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

constexpr std::array<Mat2, 8> kDihedral = {{
    {1, 0, 0, 1},    // identity
    {0, -1, 1, 0},   // rot90 (counterclockwise)
    {-1, 0, 0, -1},  // rot180
    {0, 1, -1, 0},   // rot270
    {-1, 0, 0, 1},   // mirror about the vertical axis
    {1, 0, 0, -1},   // mirror about the horizontal axis
    {0, 1, 1, 0},    // mirror about the main diagonal
    {0, -1, -1, 0},  // mirror about the anti-diagonal
}};

constexpr std::array<const char*, 8> kDihedralNames = {
    "identity", "rot90", "rot180", "rot270",
    "mirror-v", "mirror-h", "mirror-d", "mirror-a",
};

std::array<SymmetryOp, 16> make_group() {
    std::array<SymmetryOp, 16> ops{};
    for (std::size_t i = 0; i < 8; ++i) {
        ops[i] = {kDihedral[i], false};
        ops[i + 8] = {kDihedral[i], true};
    }
    return ops;
}

}  // namespace

const std::array<SymmetryOp, 16>& symmetry_group() {
    static const std::array<SymmetryOp, 16> group = make_group();
    return group;
}

SymmetryOp compose(const SymmetryOp& outer, const SymmetryOp& inner) {
    return {outer.dihedral * inner.dihedral,
            static_cast<bool>(outer.reversal ^ inner.reversal)};
}

SymmetryOp inverse(const SymmetryOp& op) { return {transpose(op.dihedral), op.reversal}; }

std::string op_name(const SymmetryOp& op) {
    for (std::size_t i = 0; i < 8; ++i) {
        if (op.dihedral == kDihedral[i]) {
            return op.reversal ? std::string(kDihedralNames[i]) + "+rev" : kDihedralNames[i];
        }
    }
    return "non-dihedral";
}

Cell transform_cell(const SymmetryOp& op, Cell c, int order) {
    // Exact about the grid center: doubled centers are odd, the center of
    // the doubled lattice is 2^n, and every dihedral matrix keeps parity.
    const std::int64_t mid = grid_side(order);
    const Vec2 p = cell_center(c, order);
    const Vec2 q = op.dihedral * Vec2{p.x - mid, p.y - mid};
    return center_to_cell({q.x + mid, q.y + mid});
}

Curve transform_curve(const SymmetryOp& op, const Curve& c) {
    Curve out;
    out.family = c.family;
    out.order = c.order;
    out.cells.reserve(c.cells.size());
    for (Cell cell : c.cells) {
        out.cells.push_back(transform_cell(op, cell, c.order));
    }
    if (op.reversal) {
        std::reverse(out.cells.begin(), out.cells.end());
    }
    return out;
}

std::optional<SymmetryOp> curves_equivalent(const Curve& a, const Curve& b) {
    if (a.order != b.order) {
        throw DomainError("cannot compare curves of orders " + std::to_string(a.order) +
                          " and " + std::to_string(b.order));
    }
    for (const SymmetryOp& op : symmetry_group()) {
        if (transform_curve(op, a).cells == b.cells) {
            return op;
        }
    }
    return std::nullopt;
}

}  // namespace hilbert
