#include "hilbert/svg_render.hpp"

#include <cstdio>
#include <fstream>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

constexpr double kCanvas = 512.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/// Cell center in canvas coordinates; the SVG y axis points down, the grid
/// row axis points up.
void center_px(Cell c, double cell_px, double& x, double& y) {
    x = (c.col + 0.5) * cell_px;
    y = kCanvas - (c.row + 0.5) * cell_px;
}

}  // namespace

std::string render_svg(const Curve& c) {
    if (c.cells.size() < 2) throw DomainError("nothing to render");
    const double cell_px = kCanvas / static_cast<double>(grid_side(c.order));
    const double stroke = kCanvas / static_cast<double>(std::int64_t{1} << (c.order + 2));

    std::string svg;
    svg.reserve(c.cells.size() * 12 + 512);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" "
           "height=\"512\" viewBox=\"0 0 512 512\">\n";
    svg += "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";

    svg += "<polyline fill=\"none\" stroke=\"#27517a\" stroke-linejoin=\"round\" "
           "stroke-linecap=\"round\" stroke-width=\"" +
           fmt(stroke) + "\" points=\"";
    double x = 0, y = 0;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        center_px(c.cells[i], cell_px, x, y);
        if (i > 0) svg += ' ';
        svg += fmt(x) + ',' + fmt(y);
    }
    svg += "\"/>\n";

    // entry marker
    double ex = 0, ey = 0;
    center_px(c.cells.front(), cell_px, ex, ey);
    svg += "<circle cx=\"" + fmt(ex) + "\" cy=\"" + fmt(ey) + "\" r=\"" + fmt(stroke * 1.25) +
           "\" fill=\"#27517a\"/>\n";

    // arrowhead along the final stroke
    double px = 0, py = 0;
    center_px(c.cells[c.cells.size() - 2], cell_px, px, py);
    const double dx = x - px, dy = y - py;
    const double len = cell_px * 0.35, half = cell_px * 0.175;
    // unit direction is axis-aligned: (dx, dy) has one zero component
    const double ux = dx == 0 ? 0 : (dx > 0 ? 1 : -1);
    const double uy = dy == 0 ? 0 : (dy > 0 ? 1 : -1);
    const double bx = x - ux * len, by = y - uy * len;  // base of the head
    svg += "<polygon fill=\"#27517a\" points=\"" + fmt(x) + ',' + fmt(y) + ' ' +
           fmt(bx - uy * half) + ',' + fmt(by + ux * half) + ' ' + fmt(bx + uy * half) + ',' +
           fmt(by - ux * half) + "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

void write_svg(const Curve& c, const std::filesystem::path& out) {
    const std::string svg = render_svg(c);
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot open " + out.string() + " for writing");
    f.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    if (!f) throw IoError("failed writing " + out.string());
}

}  // namespace hilbert
