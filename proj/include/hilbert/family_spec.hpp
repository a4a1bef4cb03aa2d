#ifndef HILBERT_FAMILY_SPEC_HPP
#define HILBERT_FAMILY_SPEC_HPP

#include <array>

#include "hilbert/geometry.hpp"

namespace hilbert {

inline constexpr int kFamilyCount = 12;

/// One per-quadrant affine map: p -> (matrix * p + translation) / 2 on the
/// unit square, plus a flag for traversal reversal of the mapped block.
/// The matrix is one of the eight dihedral elements; translation entries
/// are in {0, 1, 2}.
struct QuadrantRule {
    Mat2 matrix;
    Vec2 translation;
    bool reversed = false;

    friend auto operator<=>(const QuadrantRule&, const QuadrantRule&) = default;
};

/// The four quadrant rules defining one curve family, quadrant order
/// lower-left, upper-left, upper-right, lower-right (traversal order).
struct FamilySpec {
    int family = 0;
    std::array<QuadrantRule, 4> rules;

    /// Families 0..5 use no reversal; 6..11 are built with it.
    bool proper() const { return family < 6; }
};

/// Which quadrant (0..3) the rule's image of the open unit square lands in.
/// Throws InvalidRuleError if the image is not exactly one quadrant.
int image_quadrant(const QuadrantRule& rule);

/// Throws InvalidRuleError unless the rule is orthogonal, lands in
/// `expected_quadrant`, and has translation entries in {0,1,2}.
void validate_rule(const QuadrantRule& rule, int expected_quadrant);

/// Exact image of an order-n doubled-lattice point under the rule:
/// matrix * p + translation * 2^(n+1), an order-(n+1) doubled-lattice point.
/// Throws InvalidRuleError if the image leaves the unit square.
Vec2 apply_rule_to_point(const QuadrantRule& rule, Vec2 p, int order);

/// The rule table for family k (0..11). Throws DomainError otherwise.
const FamilySpec& family_spec(int family);

/// All twelve tables.
const std::array<FamilySpec, kFamilyCount>& all_family_specs();

/// 0 for families 0..5, 5 for families 6..11: the family whose curve is the
/// building block one order down.
int building_block_family(int family);

/// Construction lineage of a family: the top-level rule set, the optional
/// single family-5 layer, and family 0 for all deeper levels.
struct Lineage {
    int outer;
    bool has_middle;  // exactly when outer >= 6; middle layer is family 5
    int inner = 0;
};

Lineage lineage(int family);

void require_valid_family(int family);
void require_valid_order(int order);

/// Largest order for which curves and words are materialized in memory.
inline constexpr int kMaxMaterializedOrder = 13;

}  // namespace hilbert

#endif
