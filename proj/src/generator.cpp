#include "hilbert/generator.hpp"

#include <algorithm>
#include <string>

#include "hilbert/errors.hpp"

namespace hilbert {

Curve base_curve() {
    return {0, 1, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
}

Curve assemble_quadrants(const FamilySpec& spec, const Curve& block) {
    const int n = block.order;
    Curve out;
    out.family = spec.family;
    out.order = n + 1;
    out.cells.reserve(block.cells.size() * 4);

    for (int q = 0; q < 4; ++q) {
        const QuadrantRule& rule = spec.rules[static_cast<std::size_t>(q)];
        const std::size_t begin = out.cells.size();
        for (Cell c : block.cells) {
            out.cells.push_back(center_to_cell(apply_rule_to_point(rule, cell_center(c, n), n)));
        }
        if (rule.reversed) {
            std::reverse(out.cells.begin() + static_cast<std::ptrdiff_t>(begin), out.cells.end());
        }
        if (q > 0 && !cells_adjacent(out.cells[begin - 1], out.cells[begin])) {
            throw BrokenConnectivityError(
                q - 1, q,
                "family " + std::to_string(spec.family) + ": quadrants " + std::to_string(q - 1) +
                    "->" + std::to_string(q) + " disconnected (" + to_string(out.cells[begin - 1]) +
                    " vs " + to_string(out.cells[begin]) + ")");
        }
    }
    validate_curve(out);
    return out;
}

Curve generate(int family, int order) {
    require_valid_family(family);
    require_valid_order(order);
    if (order > kMaxMaterializedOrder) {
        throw ResourceError("order " + std::to_string(order) + " exceeds materialization cap " +
                            std::to_string(kMaxMaterializedOrder));
    }
    Curve curve = base_curve();
    curve.family = family;
    if (order == 1) return curve;

    // Fold family 0 up to the building-block order, add the single family-5
    // layer for improper families, then the family's own rules on top.
    const int block = building_block_family(family);
    const int zero_layers = block == 0 ? order - 2 : order - 3;
    for (int i = 0; i < zero_layers; ++i) {
        curve = assemble_quadrants(family_spec(0), curve);
    }
    if (block == 5 && order >= 3) {
        curve = assemble_quadrants(family_spec(5), curve);
    }
    curve = assemble_quadrants(family_spec(family), curve);
    curve.family = family;
    return curve;
}

}  // namespace hilbert
