#ifndef HILBERT_ENUMERATOR_HPP
#define HILBERT_ENUMERATOR_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/curve.hpp"
#include "hilbert/symmetry.hpp"

namespace hilbert {

/// Which building block an assembly stacks: the corner-to-corner family-0
/// block or the edge-midpoint family-5 block.
enum class BlockKind { Proper, Improper };

int block_family(BlockKind kind);

/// The eight boundary anchor points of a quadrant: its corners and edge
/// midpoints.
enum class AnchorPoint {
    BottomLeft,
    TopLeft,
    TopRight,
    BottomRight,
    LeftMid,
    TopMid,
    RightMid,
    BottomMid,
};

std::string anchor_name(AnchorPoint p);

/// An anchor with the side of the midline an endpoint cell sits on:
/// -1 (lower/left of the midpoint), +1 (upper/right), 0 for corners. The
/// side distinguishes the two chiralities a midpoint endpoint can have and
/// is stable across orders.
struct Anchor {
    AnchorPoint point;
    int side = 0;

    friend auto operator<=>(const Anchor&, const Anchor&) = default;
};

std::string anchor_label(const Anchor& a);

/// Entry-to-exit vector of one quadrant's sub-curve, in anchor terms.
struct BVector {
    Anchor entry;
    Anchor exit;

    friend auto operator<=>(const BVector&, const BVector&) = default;
};

using DiagramShape = std::array<BVector, 4>;

/// A complete four-quadrant assembly prescription: per quadrant the
/// symmetry op placing the block and the resulting boundary vector.
struct BVectorDiagram {
    BlockKind kind;
    int block_order;
    std::string label;  // first-quadrant choice 1..4 + fourth-quadrant a/b
    std::array<SymmetryOp, 4> ops;
    DiagramShape vectors;
};

/// Anchor classification of a boundary cell of the order-n grid.
/// Throws DomainError for cells not at a corner or beside an edge midpoint.
Anchor classify_anchor(Cell local, int order);

/// All complete diagrams for the block: every placement of the block in
/// quadrant 0 whose exit can connect upward, quadrants 1 and 2 forced by
/// junction continuity, and the free exit choice in quadrant 3. Yields 8
/// diagrams per block.
std::vector<BVectorDiagram> enumerate_diagrams(BlockKind kind, int block_order = 2);

/// The order-(block_order+1) curve a diagram prescribes.
Curve assemble_diagram(const BVectorDiagram& diagram);

/// Exit/entry anchors of consecutive quadrants meet at the same point of
/// the shared edge.
bool diagram_continuous(const BVectorDiagram& diagram);

/// Per-quadrant boundary vectors read off a real curve (quadrant quarters
/// checked, not assumed).
DiagramShape diagram_of_curve(const Curve& c);

/// One equivalence class of assembled curves under the 16-op group.
struct CensusClass {
    Curve representative;  // canonical: lexicographically smallest word (d<l<r<u)
    std::size_t size = 0;
    std::optional<int> matched_family;
};

struct DiagramClasses {
    std::vector<std::vector<std::size_t>> classes;  // indices into the diagram list
    std::vector<std::pair<std::size_t, std::size_t>> enantiomorphic_pairs;
};

/// Quotient of the diagrams by curve equivalence of their assemblies.
/// Classes of size two are the enantiomorphic pairs.
DiagramClasses quotient_diagrams(const std::vector<BVectorDiagram>& diagrams);

/// Group curves by equivalence; deterministic class order via canonical
/// words. Curves must share one order.
std::vector<CensusClass> quotient_curves(const std::vector<Curve>& curves);

struct BlockCensus {
    std::size_t assembly_count = 0;
    std::vector<Curve> assemblies;
    std::vector<CensusClass> classes;
};

struct CensusResult {
    int block_order = 0;
    BlockCensus proper;
    BlockCensus improper;
    std::vector<CensusClass> pooled;
};

/// Independent exhaustive search: all 16^4 symmetry placements of the
/// order-`block_order` building blocks, kept when they assemble into a
/// valid curve, deduplicated, and quotiented. block_order 2 distinguishes
/// proper from improper blocks and yields the twelve classes.
/// Throws ResourceError for block_order outside 1..3.
CensusResult brute_force_census(int block_order);

/// Canonical member of a curve's equivalence class: the transform whose
/// move word is lexicographically smallest under the letter order
/// d < l < r < u (entry cell breaks ties).
Curve canonical_representative(const Curve& c);

/// Sort/grouping key realizing the same order.
std::string canonical_key(const Curve& c);

}  // namespace hilbert

#endif
