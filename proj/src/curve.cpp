#include "hilbert/curve.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hilbert/errors.hpp"

namespace hilbert {

Cell entry_cell(const Curve& c) {
    if (c.cells.empty()) throw DomainError("empty curve has no entry cell");
    return c.cells.front();
}

Cell exit_cell(const Curve& c) {
    if (c.cells.empty()) throw DomainError("empty curve has no exit cell");
    return c.cells.back();
}

Curve reverse_curve(Curve c) {
    std::reverse(c.cells.begin(), c.cells.end());
    return c;
}

std::string curve_violation(const Curve& c) {
    const std::int64_t expected = cell_count(c.order);
    if (static_cast<std::int64_t>(c.cells.size()) != expected) {
        return "length " + std::to_string(c.cells.size()) + " != 4^" + std::to_string(c.order);
    }
    const std::int64_t side = grid_side(c.order);
    std::vector<bool> seen(static_cast<std::size_t>(expected), false);
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        const Cell cell = c.cells[i];
        if (!cell_in_grid(cell, c.order)) {
            return "cell " + to_string(cell) + " at index " + std::to_string(i) +
                   " outside the grid";
        }
        const std::size_t flat = static_cast<std::size_t>(cell.row * side + cell.col);
        if (seen[flat]) {
            return "cell " + to_string(cell) + " revisited at index " + std::to_string(i);
        }
        seen[flat] = true;
        if (i > 0 && !cells_adjacent(c.cells[i - 1], cell)) {
            return "cells " + to_string(c.cells[i - 1]) + " and " + to_string(cell) +
                   " at indices " + std::to_string(i - 1) + "," + std::to_string(i) +
                   " not edge-adjacent";
        }
    }
    // length + distinctness already imply coverage
    return {};
}

void validate_curve(const Curve& c) {
    const std::string why = curve_violation(c);
    if (!why.empty()) {
        throw DomainError("invalid curve (family " + std::to_string(c.family) + ", order " +
                          std::to_string(c.order) + "): " + why);
    }
}

}  // namespace hilbert
