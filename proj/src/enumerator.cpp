#include "hilbert/enumerator.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hilbert/errors.hpp"
#include "hilbert/generator.hpp"
#include "hilbert/tag_system.hpp"

namespace hilbert {

namespace {

/// A block transformed by one symmetry op, in quadrant-local coordinates.
struct Placement {
    SymmetryOp op;
    CellList cells;
    Cell entry;
    Cell exit;
};

std::vector<Placement> distinct_placements(const Curve& block) {
    std::vector<Placement> out;
    for (const SymmetryOp& op : symmetry_group()) {
        Curve placed = transform_curve(op, block);
        const bool duplicate =
            std::any_of(out.begin(), out.end(),
                        [&](const Placement& p) { return p.cells == placed.cells; });
        if (duplicate) continue;
        out.push_back({op, placed.cells, placed.cells.front(), placed.cells.back()});
    }
    return out;
}

/// Lower-left cell offset of quadrant q in the order-(m+1) grid.
Cell quadrant_offset(int q, int block_order) {
    const std::int32_t s = static_cast<std::int32_t>(grid_side(block_order));
    switch (q) {
        case 0: return {0, 0};
        case 1: return {0, s};
        case 2: return {s, s};
        default: return {s, 0};
    }
}

Cell offset_cell(Cell local, Cell offset) {
    return {local.col + offset.col, local.row + offset.row};
}

BVector bvector_of(const Placement& p, int block_order) {
    return {classify_anchor(p.entry, block_order), classify_anchor(p.exit, block_order)};
}

int letter_rank(char c) {
    // canonical letter order d < l < r < u
    switch (c) {
        case 'd': return 0;
        case 'l': return 1;
        case 'r': return 2;
        default: return 3;  // 'u'
    }
}

std::string word_rank_key(const Word& w) {
    std::string key = w;
    for (char& c : key) c = static_cast<char>('0' + letter_rank(c));
    return key;
}

}  // namespace

int block_family(BlockKind kind) { return kind == BlockKind::Proper ? 0 : 5; }

std::string anchor_name(AnchorPoint p) {
    switch (p) {
        case AnchorPoint::BottomLeft: return "bottom-left";
        case AnchorPoint::TopLeft: return "top-left";
        case AnchorPoint::TopRight: return "top-right";
        case AnchorPoint::BottomRight: return "bottom-right";
        case AnchorPoint::LeftMid: return "left-mid";
        case AnchorPoint::TopMid: return "top-mid";
        case AnchorPoint::RightMid: return "right-mid";
        default: return "bottom-mid";
    }
}

std::string anchor_label(const Anchor& a) {
    std::string s = anchor_name(a.point);
    if (a.side < 0) s += "(-)";
    if (a.side > 0) s += "(+)";
    return s;
}

Anchor classify_anchor(Cell local, int order) {
    const std::int32_t far = static_cast<std::int32_t>(grid_side(order)) - 1;
    const bool left = local.col == 0, right = local.col == far;
    const bool bottom = local.row == 0, top = local.row == far;
    if (left && bottom) return {AnchorPoint::BottomLeft, 0};
    if (left && top) return {AnchorPoint::TopLeft, 0};
    if (right && top) return {AnchorPoint::TopRight, 0};
    if (right && bottom) return {AnchorPoint::BottomRight, 0};

    const auto mid_side = [far](std::int32_t pos) -> int {
        if (2 * pos + 1 == far) return -1;  // pos == side/2 - 1
        if (2 * pos - 1 == far) return +1;  // pos == side/2
        throw DomainError("endpoint cell not at a corner or beside an edge midpoint");
    };
    if (left) return {AnchorPoint::LeftMid, mid_side(local.row)};
    if (right) return {AnchorPoint::RightMid, mid_side(local.row)};
    if (bottom) return {AnchorPoint::BottomMid, mid_side(local.col)};
    if (top) return {AnchorPoint::TopMid, mid_side(local.col)};
    throw DomainError("endpoint cell " + to_string(local) + " not on the quadrant boundary");
}

std::vector<BVectorDiagram> enumerate_diagrams(BlockKind kind, int block_order) {
    if (block_order < 1 || block_order > 3) {
        throw ResourceError("diagram enumeration supports block orders 1..3");
    }
    const Curve block = generate(block_family(kind), block_order);
    const std::vector<Placement> placements = distinct_placements(block);
    const std::int32_t far = static_cast<std::int32_t>(grid_side(block_order)) - 1;

    std::vector<BVectorDiagram> diagrams;
    int first_choice = 0;
    for (const Placement& p0 : placements) {
        // quadrant 0 must leave through its top edge to reach quadrant 1
        if (p0.exit.row != far) continue;
        ++first_choice;
        char fourth_choice = 'a';
        for (const Placement& p1 : placements) {
            // directly above quadrant 0's exit, leaving through the right edge
            if (p1.entry != Cell{p0.exit.col, 0} || p1.exit.col != far) continue;
            for (const Placement& p2 : placements) {
                // entering level with quadrant 1's exit, leaving through the bottom
                if (p2.entry != Cell{0, p1.exit.row} || p2.exit.row != 0) continue;
                for (const Placement& p3 : placements) {
                    // entering directly below quadrant 2's exit; its own exit is free
                    if (p3.entry != Cell{p2.exit.col, far}) continue;
                    BVectorDiagram d;
                    d.kind = kind;
                    d.block_order = block_order;
                    d.label = std::to_string(first_choice) + fourth_choice;
                    d.ops = {p0.op, p1.op, p2.op, p3.op};
                    d.vectors = {bvector_of(p0, block_order), bvector_of(p1, block_order),
                                 bvector_of(p2, block_order), bvector_of(p3, block_order)};
                    diagrams.push_back(std::move(d));
                    ++fourth_choice;
                }
            }
        }
    }
    return diagrams;
}

Curve assemble_diagram(const BVectorDiagram& diagram) {
    const Curve block = generate(block_family(diagram.kind), diagram.block_order);
    Curve out;
    out.family = -1;
    out.order = diagram.block_order + 1;
    out.cells.reserve(block.cells.size() * 4);
    for (int q = 0; q < 4; ++q) {
        const Curve placed = transform_curve(diagram.ops[static_cast<std::size_t>(q)], block);
        const Cell offset = quadrant_offset(q, diagram.block_order);
        for (Cell c : placed.cells) out.cells.push_back(offset_cell(c, offset));
    }
    validate_curve(out);
    return out;
}

bool diagram_continuous(const BVectorDiagram& diagram) {
    // Shared edges in traversal order: Q0 top ~ Q1 bottom, Q1 right ~ Q2
    // left, Q2 bottom ~ Q3 top. Anchors must name the same boundary point,
    // midpoint sides included.
    const auto matches = [](const Anchor& exit, AnchorPoint exit_edge_a, AnchorPoint exit_edge_b,
                            const Anchor& entry, AnchorPoint entry_edge_a,
                            AnchorPoint entry_edge_b, AnchorPoint exit_mid,
                            AnchorPoint entry_mid) {
        if (exit.point == exit_mid && entry.point == entry_mid) return exit.side == entry.side;
        return (exit.point == exit_edge_a && entry.point == entry_edge_a) ||
               (exit.point == exit_edge_b && entry.point == entry_edge_b);
    };
    using AP = AnchorPoint;
    const DiagramShape& v = diagram.vectors;
    return matches(v[0].exit, AP::TopLeft, AP::TopRight, v[1].entry, AP::BottomLeft,
                   AP::BottomRight, AP::TopMid, AP::BottomMid) &&
           matches(v[1].exit, AP::BottomRight, AP::TopRight, v[2].entry, AP::BottomLeft,
                   AP::TopLeft, AP::RightMid, AP::LeftMid) &&
           matches(v[2].exit, AP::BottomLeft, AP::BottomRight, v[3].entry, AP::TopLeft,
                   AP::TopRight, AP::BottomMid, AP::TopMid);
}

DiagramShape diagram_of_curve(const Curve& c) {
    if (c.order < 2) throw DomainError("need order >= 2 to split quadrants");
    const std::int64_t quarter = cell_count(c.order) / 4;
    if (static_cast<std::int64_t>(c.cells.size()) != 4 * quarter) {
        throw DomainError("curve has wrong cell count");
    }
    const std::int32_t s = static_cast<std::int32_t>(grid_side(c.order - 1));
    DiagramShape shape;
    for (int q = 0; q < 4; ++q) {
        const Cell offset = quadrant_offset(q, c.order - 1);
        const auto begin = c.cells.begin() + static_cast<std::ptrdiff_t>(q * quarter);
        const auto end = begin + static_cast<std::ptrdiff_t>(quarter);
        for (auto it = begin; it != end; ++it) {
            const Cell local{it->col - offset.col, it->row - offset.row};
            if (local.col < 0 || local.row < 0 || local.col >= s || local.row >= s) {
                throw DomainError("quarter " + std::to_string(q) +
                                  " does not stay inside quadrant " + std::to_string(q));
            }
        }
        const Cell entry{begin->col - offset.col, begin->row - offset.row};
        const Cell exit{(end - 1)->col - offset.col, (end - 1)->row - offset.row};
        shape[static_cast<std::size_t>(q)] = {classify_anchor(entry, c.order - 1),
                                              classify_anchor(exit, c.order - 1)};
    }
    return shape;
}

Curve canonical_representative(const Curve& c) {
    const Curve* best = nullptr;
    std::string best_key;
    std::vector<Curve> transforms;
    transforms.reserve(16);
    for (const SymmetryOp& op : symmetry_group()) {
        transforms.push_back(transform_curve(op, c));
    }
    for (const Curve& t : transforms) {
        std::string key = word_rank_key(path_to_word(t.cells)) + '|' +
                          std::to_string(t.cells.front().col) + ',' +
                          std::to_string(t.cells.front().row);
        if (!best || key < best_key) {
            best = &t;
            best_key = std::move(key);
        }
    }
    return *best;
}

std::string canonical_key(const Curve& c) {
    const Curve rep = canonical_representative(c);
    return word_rank_key(path_to_word(rep.cells)) + '|' + std::to_string(rep.cells.front().col) +
           ',' + std::to_string(rep.cells.front().row);
}

std::vector<CensusClass> quotient_curves(const std::vector<Curve>& curves) {
    std::map<std::string, CensusClass> by_key;
    for (const Curve& c : curves) {
        const std::string key = canonical_key(c);
        auto [it, inserted] = by_key.try_emplace(key);
        if (inserted) {
            it->second.representative = canonical_representative(c);
        }
        ++it->second.size;
    }
    std::vector<CensusClass> out;
    out.reserve(by_key.size());
    for (auto& [key, cls] : by_key) out.push_back(std::move(cls));
    return out;
}

DiagramClasses quotient_diagrams(const std::vector<BVectorDiagram>& diagrams) {
    DiagramClasses result;
    std::map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        by_key[canonical_key(assemble_diagram(diagrams[i]))].push_back(i);
    }
    for (auto& [key, members] : by_key) {
        if (members.size() == 2) {
            result.enantiomorphic_pairs.emplace_back(members[0], members[1]);
        }
        result.classes.push_back(std::move(members));
    }
    return result;
}

CensusResult brute_force_census(int block_order) {
    if (block_order < 1 || block_order > 3) {
        throw ResourceError("census supports block orders 1..3 (16^4 assemblies per block)");
    }
    CensusResult result;
    result.block_order = block_order;

    const auto match_family = [&](CensusClass& cls, int lo, int hi) {
        for (int k = lo; k <= hi; ++k) {
            if (curves_equivalent(cls.representative, generate(k, block_order + 1))) {
                cls.matched_family = k;
                return;
            }
        }
    };

    for (BlockKind kind : {BlockKind::Proper, BlockKind::Improper}) {
        const Curve block = generate(block_family(kind), block_order);
        const std::vector<Placement> placements = distinct_placements(block);
        std::vector<Curve> assemblies;

        for (const Placement& p0 : placements) {
            for (const Placement& p1 : placements) {
                if (!cells_adjacent(offset_cell(p0.exit, quadrant_offset(0, block_order)),
                                    offset_cell(p1.entry, quadrant_offset(1, block_order)))) {
                    continue;
                }
                for (const Placement& p2 : placements) {
                    if (!cells_adjacent(offset_cell(p1.exit, quadrant_offset(1, block_order)),
                                        offset_cell(p2.entry, quadrant_offset(2, block_order)))) {
                        continue;
                    }
                    for (const Placement& p3 : placements) {
                        if (!cells_adjacent(
                                offset_cell(p2.exit, quadrant_offset(2, block_order)),
                                offset_cell(p3.entry, quadrant_offset(3, block_order)))) {
                            continue;
                        }
                        Curve out;
                        out.family = -1;
                        out.order = block_order + 1;
                        out.cells.reserve(block.cells.size() * 4);
                        const Placement* quads[4] = {&p0, &p1, &p2, &p3};
                        for (int q = 0; q < 4; ++q) {
                            const Cell offset = quadrant_offset(q, block_order);
                            for (Cell c : quads[q]->cells) {
                                out.cells.push_back(offset_cell(c, offset));
                            }
                        }
                        if (curve_violation(out).empty()) {
                            assemblies.push_back(std::move(out));
                        }
                    }
                }
            }
        }

        // set semantics: identical assemblies collapse
        std::sort(assemblies.begin(), assemblies.end(),
                  [](const Curve& a, const Curve& b) { return a.cells < b.cells; });
        assemblies.erase(std::unique(assemblies.begin(), assemblies.end(),
                                     [](const Curve& a, const Curve& b) {
                                         return a.cells == b.cells;
                                     }),
                         assemblies.end());

        BlockCensus census;
        census.assembly_count = assemblies.size();
        census.classes = quotient_curves(assemblies);
        const int lo = kind == BlockKind::Proper ? 0 : 6;
        for (CensusClass& cls : census.classes) match_family(cls, lo, lo + 5);
        census.assemblies = std::move(assemblies);
        (kind == BlockKind::Proper ? result.proper : result.improper) = std::move(census);
    }

    std::vector<Curve> pooled = result.proper.assemblies;
    pooled.insert(pooled.end(), result.improper.assemblies.begin(),
                  result.improper.assemblies.end());
    result.pooled = quotient_curves(pooled);
    for (CensusClass& cls : result.pooled) match_family(cls, 0, kFamilyCount - 1);
    return result;
}

}  // namespace hilbert
