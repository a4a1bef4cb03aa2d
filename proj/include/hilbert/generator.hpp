#ifndef HILBERT_GENERATOR_HPP
#define HILBERT_GENERATOR_HPP

#include "hilbert/curve.hpp"
#include "hilbert/family_spec.hpp"

namespace hilbert {

/// The unique order-1 curve: (0,0) (0,1) (1,1) (1,0), entry lower-left,
/// exit lower-right.
Curve base_curve();

/// Build an order-(n+1) curve from an order-n block: map the block through
/// each quadrant rule in traversal order, reversing the mapped subsequence
/// where the rule says so, and concatenate. Junction continuity between
/// quadrants is checked, not assumed; a failure throws
/// BrokenConnectivityError naming the quadrant pair. The result is fully
/// validated.
Curve assemble_quadrants(const FamilySpec& spec, const Curve& block);

/// The order-n curve of family k. Families 0..5 stack their rules on a
/// recursively built family-0 block; families 6..11 stack theirs on a
/// single family-5 layer over family 0.
Curve generate(int family, int order);

}  // namespace hilbert

#endif
