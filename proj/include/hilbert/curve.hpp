#ifndef HILBERT_CURVE_HPP
#define HILBERT_CURVE_HPP

#include <span>

#include "hilbert/geometry.hpp"

namespace hilbert {

/// Ordered visit sequence of the 2^n x 2^n grid for one family.
///
/// A well-formed curve has 4^n cells, consecutive cells edge-adjacent, all
/// cells distinct, and the cells jointly covering the grid. Construction
/// does not enforce this (the verifier needs to hold broken sequences);
/// everything produced by the generator is validated.
struct Curve {
    int family = 0;
    int order = 1;
    CellList cells;

    friend bool operator==(const Curve&, const Curve&) = default;
};

Cell entry_cell(const Curve& c);
Cell exit_cell(const Curve& c);

/// Same cells walked from exit to entry; family and order kept.
Curve reverse_curve(Curve c);

/// Throws (DomainError with a description) unless all four curve
/// invariants hold: length, adjacency, distinctness, coverage.
void validate_curve(const Curve& c);

/// Non-throwing form; returns an empty string when valid, else the first
/// violated invariant.
std::string curve_violation(const Curve& c);

}  // namespace hilbert

#endif
