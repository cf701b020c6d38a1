#include "kagome/svg.hpp"

#include <string>

#include "kagome/hexagons.hpp"

namespace kagome {

namespace {

// Screen coordinates (all integers):
//   X site (a, m)  -> (10*m, -20*a)
//   Y site (a, r2) -> (5*r2, -(20*a + 10))
// so a Y row sits halfway between its own X row and the one above it, and the
// two Y sites of a hexagon land between its two X sites.

void append_attr(std::string& out, const char* name, long long value) {
    out += ' ';
    out += name;
    out += "=\"";
    out += std::to_string(value);
    out += '"';
}

void append_line(std::string& out, int x1, int y1, int x2, int y2) {
    out += "<line";
    append_attr(out, "x1", x1);
    append_attr(out, "y1", y1);
    append_attr(out, "x2", x2);
    append_attr(out, "y2", y2);
    out += "/>\n";
}

void append_circle(std::string& out, int cx, int cy, int r, bool filled) {
    out += "<circle";
    append_attr(out, "cx", cx);
    append_attr(out, "cy", cy);
    append_attr(out, "r", r);
    out += filled ? " fill=\"#000\"" : " fill=\"#fff\"";
    out += "/>\n";
}

} // namespace

std::string render_state_svg(const LatticeState& state) {
    const Window& win = state.window();
    const int R = win.max_abs_row;
    const int X = win.max_abs_xpos;
    const int r2max = 2 * X + 3;

    const int vx = -10 * X - 25;
    const int vw = 20 * X + 50;
    const int vy = -20 * R - 20;
    const int vh = 40 * R + 40;

    std::string out;
    out.reserve(static_cast<std::size_t>(4096 + 64 * (2 * R + 1) * (2 * X + 4)));

    out += "<svg xmlns=\"http://www.w3.org/2000/svg\"";
    {
        out += " viewBox=\"";
        out += std::to_string(vx);
        out += ' ';
        out += std::to_string(vy);
        out += ' ';
        out += std::to_string(vw);
        out += ' ';
        out += std::to_string(vh);
        out += '"';
    }
    append_attr(out, "width", vw);
    append_attr(out, "height", vh);
    out += ">\n";

    out += "<rect";
    append_attr(out, "x", vx);
    append_attr(out, "y", vy);
    append_attr(out, "width", vw);
    append_attr(out, "height", vh);
    out += " fill=\"#fff\"/>\n";

    // Half-integer rows: solid.
    out += "<g stroke=\"#666\" stroke-width=\"1\">\n";
    for (int a = -R; a <= R; ++a)
        append_line(out, -5 * r2max, -(20 * a + 10), 5 * r2max, -(20 * a + 10));
    out += "</g>\n";

    // Integer rows: dashed, trimmed to the parity-aligned end sites.
    out += "<g stroke=\"#666\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
    for (int a = -R; a <= R; ++a) {
        int m_lo = -X, m_hi = X;
        if ((m_lo - a) & 1) ++m_lo;
        if ((m_hi - a) & 1) --m_hi;
        append_line(out, 10 * m_lo, -20 * a, 10 * m_hi, -20 * a);
    }
    out += "</g>\n";

    // Sites, one circle per source line: X rows bottom-up then Y rows, each
    // left to right. Occupancy decides the fill and nothing else, so two
    // states differing by one hexagon flip differ in exactly six bytes-wise
    // circle elements.
    out += "<g stroke=\"#000\" stroke-width=\"1\">\n";
    for (int a = -R; a <= R; ++a) {
        int m = -X;
        if ((m - a) & 1) ++m;
        for (; m <= X; m += 2)
            append_circle(out, 10 * m, -20 * a, 4, state.occupied(x_site(a, m)));
    }
    for (int a = -R; a <= R; ++a)
        for (int r2 = -r2max; r2 <= r2max; r2 += 2)
            append_circle(out, 5 * r2, -(20 * a + 10), 3,
                          state.occupied(y_site(a, r2)));
    out += "</g>\n";

    // Flip-eligible plaquettes: green boxes accept a creation flip, red ones
    // a removal flip. The outline is centered on the hexagon's six sites.
    out += "<g fill=\"none\" stroke-width=\"2\">\n";
    const HexagonScanRange scan = hexagon_scan_range(win);
    for (int a = scan.row_lo; a <= scan.row_hi; ++a) {
        for (int m = scan.xpos_lo; m <= scan.xpos_hi; ++m) {
            if ((m - a) & 1)
                continue;
            if (!win.contains_hexagon(a, m))
                continue;
            const auto cls = classify(hexagon_at(state, a, m));
            if (!cls)
                continue;
            const char* stroke = nullptr;
            if (*cls == HexClass::c3_145)
                stroke = "#1a7f37";
            else if (*cls == HexClass::c3_236)
                stroke = "#c0392b";
            if (!stroke)
                continue;
            out += "<rect";
            append_attr(out, "x", 10 * m + 3);
            append_attr(out, "y", -20 * a - 7);
            append_attr(out, "width", 14);
            append_attr(out, "height", 14);
            out += " stroke=\"";
            out += stroke;
            out += "\"/>\n";
        }
    }
    out += "</g>\n";

    out += "</svg>\n";
    return out;
}

} // namespace kagome
