#ifndef HILBERT_SVG_RENDER_HPP
#define HILBERT_SVG_RENDER_HPP

#include <filesystem>
#include <string>

#include "hilbert/curve.hpp"

namespace hilbert {

/// SVG 1.1 figure of a curve: a polyline through the cell centers on a
/// fixed 512x512 canvas, stroke width 512/2^(n+2), a solid circle at the
/// entry cell and an arrowhead at the exit. Output is deterministic.
std::string render_svg(const Curve& c);

/// Throws IoError when the path cannot be written.
void write_svg(const Curve& c, const std::filesystem::path& out);

}  // namespace hilbert

#endif
