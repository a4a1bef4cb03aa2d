#include "hilbert/family_spec.hpp"

#include <algorithm>
#include <string>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

constexpr Mat2 kId{1, 0, 0, 1};
constexpr Mat2 kRot90{0, -1, 1, 0};    // counterclockwise quarter turn
constexpr Mat2 kRot180{-1, 0, 0, -1};
constexpr Mat2 kRot270{0, 1, -1, 0};
constexpr Mat2 kMirrorV{-1, 0, 0, 1};  // about the vertical axis
constexpr Mat2 kMirrorH{1, 0, 0, -1};  // about the horizontal axis
constexpr Mat2 kMirrorD{0, 1, 1, 0};   // about the main diagonal
constexpr Mat2 kMirrorA{0, -1, -1, 0};  // about the anti-diagonal

constexpr QuadrantRule rule(Mat2 m, std::int64_t tx, std::int64_t ty, bool rev = false) {
    return {m, {tx, ty}, rev};
}

const std::array<FamilySpec, kFamilyCount> kSpecs = {{
    // family 0: the original curve
    {0, {rule(kMirrorD, 0, 0), rule(kId, 0, 1), rule(kId, 1, 1), rule(kMirrorA, 2, 1)}},
    // family 1: the closed variant entering and leaving on the bottom edge
    {1, {rule(kRot90, 1, 0), rule(kRot90, 1, 1), rule(kRot270, 1, 2), rule(kRot270, 1, 1)}},
    // family 2
    {2, {rule(kRot180, 1, 1), rule(kId, 0, 1), rule(kId, 1, 1), rule(kRot180, 2, 1)}},
    // family 3
    {3, {rule(kMirrorH, 0, 1), rule(kRot90, 1, 1), rule(kRot270, 1, 2), rule(kMirrorH, 1, 1)}},
    // family 4: shares quadrants 0-2 with family 0
    {4, {rule(kMirrorD, 0, 0), rule(kId, 0, 1), rule(kId, 1, 1), rule(kRot180, 2, 1)}},
    // family 5: the edge-midpoint building block for families 6..11
    {5, {rule(kMirrorH, 0, 1), rule(kRot90, 1, 1), rule(kRot270, 1, 2), rule(kRot270, 1, 1)}},
    // family 6
    {6, {rule(kRot180, 1, 1), rule(kMirrorV, 1, 1, true), rule(kId, 1, 1),
         rule(kMirrorH, 1, 1, true)}},
    // family 7
    {7, {rule(kRot180, 1, 1), rule(kMirrorV, 1, 1, true), rule(kId, 1, 1),
         rule(kMirrorA, 2, 1)}},
    // family 8
    {8, {rule(kRot270, 0, 1, true), rule(kMirrorV, 1, 1, true), rule(kId, 1, 1),
         rule(kMirrorA, 2, 1)}},
    // family 9
    {9, {rule(kMirrorA, 1, 1, true), rule(kRot90, 1, 1), rule(kMirrorD, 1, 1, true),
         rule(kRot270, 1, 1)}},
    // family 10
    {10, {rule(kMirrorH, 0, 1), rule(kRot90, 1, 1), rule(kMirrorD, 1, 1, true),
          rule(kRot180, 2, 1, true)}},
    // family 11
    {11, {rule(kMirrorH, 0, 1), rule(kRot90, 1, 1), rule(kMirrorD, 1, 1, true),
          rule(kRot270, 1, 1)}},
}};

}  // namespace

int image_quadrant(const QuadrantRule& rule) {
    // Image of [0,1]^2 under p -> (Mp + t)/2: M maps the unit square onto a
    // unit box with lower-left corner at the componentwise minimum of the
    // mapped corners; adding t must place that corner at (0,0), (0,1), (1,1)
    // or (1,0) -- the quadrant offsets in half units.
    const Vec2 corners[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::int64_t min_x = 0, min_y = 0;
    bool first = true;
    for (const Vec2& c : corners) {
        const Vec2 m = rule.matrix * c;
        if (first) {
            min_x = m.x;
            min_y = m.y;
            first = false;
        } else {
            min_x = std::min(min_x, m.x);
            min_y = std::min(min_y, m.y);
        }
    }
    const std::int64_t ox = min_x + rule.translation.x;
    const std::int64_t oy = min_y + rule.translation.y;
    if (ox == 0 && oy == 0) return 0;
    if (ox == 0 && oy == 1) return 1;
    if (ox == 1 && oy == 1) return 2;
    if (ox == 1 && oy == 0) return 3;
    throw InvalidRuleError("rule image is not a quadrant of the unit square (offset " +
                           std::to_string(ox) + "," + std::to_string(oy) + ")");
}

void validate_rule(const QuadrantRule& rule, int expected_quadrant) {
    if (!is_orthogonal(rule.matrix)) {
        throw InvalidRuleError("rule matrix is not orthogonal");
    }
    const int det = determinant(rule.matrix);
    if (det != 1 && det != -1) {
        throw InvalidRuleError("rule matrix determinant is not +-1");
    }
    for (std::int64_t t : {rule.translation.x, rule.translation.y}) {
        if (t < 0 || t > 2) {
            throw InvalidRuleError("rule translation entry outside {0,1,2}");
        }
    }
    if (image_quadrant(rule) != expected_quadrant) {
        throw InvalidRuleError("rule lands in quadrant " + std::to_string(image_quadrant(rule)) +
                               ", expected " + std::to_string(expected_quadrant));
    }
}

Vec2 apply_rule_to_point(const QuadrantRule& rule, Vec2 p, int order) {
    const std::int64_t scale = std::int64_t{1} << (order + 1);
    const Vec2 image = rule.matrix * p + scale * rule.translation;
    const std::int64_t fine_side = 2 * scale;  // doubled lattice of order n+1
    if (image.x <= 0 || image.y <= 0 || image.x >= fine_side || image.y >= fine_side) {
        throw InvalidRuleError("rule image leaves the unit square");
    }
    return image;
}

const FamilySpec& family_spec(int family) {
    require_valid_family(family);
    return kSpecs[static_cast<std::size_t>(family)];
}

const std::array<FamilySpec, kFamilyCount>& all_family_specs() { return kSpecs; }

int building_block_family(int family) {
    require_valid_family(family);
    return family < 6 ? 0 : 5;
}

Lineage lineage(int family) {
    require_valid_family(family);
    return {family, family >= 6, 0};
}

void require_valid_family(int family) {
    if (family < 0 || family >= kFamilyCount) {
        throw DomainError("family index " + std::to_string(family) + " outside 0..11");
    }
}

void require_valid_order(int order) {
    if (order < 1) {
        throw DomainError("order " + std::to_string(order) + " must be >= 1");
    }
}

}  // namespace hilbert
