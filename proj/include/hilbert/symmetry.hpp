#ifndef HILBERT_SYMMETRY_HPP
#define HILBERT_SYMMETRY_HPP

#include <array>
#include <optional>
#include <string>

#include "hilbert/curve.hpp"
#include "hilbert/geometry.hpp"

namespace hilbert {

/// One element of the 16-element equivalence group: a dihedral map of the
/// square (about the grid center) optionally followed by traversal reversal.
struct SymmetryOp {
    Mat2 dihedral;
    bool reversal = false;

    friend auto operator<=>(const SymmetryOp&, const SymmetryOp&) = default;
};

/// All 16 ops, the 8 plain dihedral elements first.
const std::array<SymmetryOp, 16>& symmetry_group();

/// outer after inner. Reversal commutes with the dihedral action, so flags xor.
SymmetryOp compose(const SymmetryOp& outer, const SymmetryOp& inner);

SymmetryOp inverse(const SymmetryOp& op);

std::string op_name(const SymmetryOp& op);

/// Dihedral image of a cell about the center of the order-n grid
/// (reversal does not act on single cells).
Cell transform_cell(const SymmetryOp& op, Cell c, int order);

/// Dihedral image of every cell, then sequence reversal if flagged.
Curve transform_curve(const SymmetryOp& op, const Curve& c);

/// Witness op mapping a's cell sequence exactly onto b's, if any.
/// Throws DomainError when the orders differ.
std::optional<SymmetryOp> curves_equivalent(const Curve& a, const Curve& b);

}  // namespace hilbert

#endif
