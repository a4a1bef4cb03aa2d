#ifndef HILBERT_VERIFIER_HPP
#define HILBERT_VERIFIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/curve.hpp"
#include "hilbert/family_spec.hpp"

namespace hilbert {

/// Structured result of one check, machine-consumable: which check, on what,
/// pass/fail, and the first violation index when there is one.
struct CheckReport {
    std::string check;
    int family = -1;
    int order = 0;
    bool passed = true;
    std::optional<std::int64_t> violation_index;
    std::string detail;
};

/// Adjacency of consecutive cells (condition 1).
CheckReport check_hilbert_condition_1(const Curve& c);

/// Nesting (condition 2): cells 4j..4j+3 of the finer curve lie in the 2x2
/// refinement of cell j of the coarser curve. Same family expected.
CheckReport check_hilbert_condition_2(const Curve& fine, const Curve& coarse);

/// Length, distinctness, and coverage of the grid.
CheckReport check_space_filling(const Curve& c);

/// Entry and exit cells edge-adjacent.
bool check_closed(const Curve& c);

/// Reflecting columns about the vertical midline gives the same sequence or
/// the reversed sequence (the mirror may exchange entry and exit).
bool check_mirror_symmetric(const Curve& c);

/// Both engines agree: the affine curve's word equals the recurrence word,
/// and walking that word from the curve's entry reproduces the cells.
CheckReport cross_validate(int family, int order);

/// Families whose curves are closed, and families whose curves are mirror
/// symmetric; the membership checks below assert against these.
inline constexpr std::array<int, 4> kClosedFamilies = {1, 2, 6, 9};
inline constexpr std::array<int, 8> kMirrorFamilies = {0, 1, 2, 3, 6, 8, 9, 10};

bool family_expected_closed(int family);
bool family_expected_mirror(int family);

/// Every check for one family over orders 2..max_order (closure/mirror
/// membership at orders 2..4), built on the given rule tables so that a
/// corrupted table is caught by name.
std::vector<CheckReport> verify_family(const std::array<FamilySpec, kFamilyCount>& specs,
                                       int family, int max_order);

std::vector<CheckReport> verify_family(int family, int max_order);

/// The full suite over all twelve families.
std::vector<CheckReport> verify_all(int max_order);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace hilbert

#endif
