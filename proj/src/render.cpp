#include "permlink/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "permlink/diagram.hpp"
#include "permlink/seifert.hpp"

namespace permlink {

namespace {

constexpr double kGap = 0.22;  // half-width of a crossing break, grid units

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Split points of a horizontal stroke: the piece boundaries around each
// crossing column, in ascending column order.
std::vector<std::pair<double, double>> hseg_pieces(const CycleDiagram& d, const Segment& h) {
    std::vector<int> cols;
    for (const Crossing& c : d.crossings)
        if (c.h_index == h.index) cols.push_back(c.col);
    std::sort(cols.begin(), cols.end());
    std::vector<std::pair<double, double>> pieces;
    double start = h.lo;
    for (int c : cols) {
        pieces.emplace_back(start, c - kGap);
        start = c + kGap;
    }
    pieces.emplace_back(start, static_cast<double>(h.hi));
    return pieces;
}

std::string render_svg(const Permutation& p, const RenderStyle& style) {
    const CycleDiagram d = build_cycle_diagram(p);
    const int n = p.size();
    const double cell = style.cell_size;
    const double wh = (n + 1) * cell;
    const auto X = [&](double x) { return x * cell; };
    const auto Y = [&](double y) { return (n + 1 - y) * cell; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(wh) + "\" height=\"" +
           num(wh) + "\" viewBox=\"0 0 " + num(wh) + " " + num(wh) + "\">\n";
    out += "<!-- permutation: " + p.format() + " -->\n";
    auto line = [&](const std::string& cls, double x1, double y1, double x2, double y2,
                    const std::string& extra) {
        out += "<line class=\"" + cls + "\" x1=\"" + num(X(x1)) + "\" y1=\"" + num(Y(y1)) +
               "\" x2=\"" + num(X(x2)) + "\" y2=\"" + num(Y(y2)) + "\" " + extra + "/>\n";
    };
    if (style.show_diagonal) {
        line("diag", 1, 1, n, n, "stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"");
    }
    for (const Segment& s : d.vsegs) {
        line("v", s.fixed, s.lo, s.fixed, s.hi, "stroke=\"#000000\" stroke-width=\"2\"");
    }
    for (const Segment& s : d.hsegs) {
        for (const auto& [a, b] : hseg_pieces(d, s)) {
            line("h", a, s.fixed, b, s.fixed, "stroke=\"#000000\" stroke-width=\"2\"");
        }
    }
    for (int i : d.points) {
        out += "<circle class=\"pt\" cx=\"" + num(X(i)) + "\" cy=\"" + num(Y(i)) +
               "\" r=\"" + num(cell * 0.14) + "\" fill=\"#000000\"/>\n";
    }
    if (style.show_crossings) {
        for (const Crossing& c : d.crossings) {
            out += "<circle class=\"xmark\" cx=\"" + num(X(c.col)) + "\" cy=\"" + num(Y(c.row)) +
                   "\" r=\"" + num(cell * 0.3) + "\" fill=\"none\" stroke=\"#999999\"/>\n";
        }
    }
    if (style.show_seifert) {
        const SeifertDecomposition dec = seifert_circles(d);
        for (const SeifertCircle& c : dec.circles) {
            const bool smax = style.show_smax && dec.parent[c.id] == -1 && !c.degenerate;
            if (c.degenerate) {
                out += "<circle class=\"seifert degenerate\" cx=\"" + num(X(c.lower_left)) +
                       "\" cy=\"" + num(Y(c.lower_left)) + "\" r=\"" + num(cell * 0.25) +
                       "\" fill=\"none\" stroke=\"#2060c0\" stroke-width=\"1.2\"/>\n";
                continue;
            }
            std::string path;
            for (std::size_t k = 0; k < c.verts.size(); ++k) {
                const auto [xd, yd] = c.verts[k];
                path += (k == 0 ? "M " : "L ");
                path += num(X(xd / 2.0)) + " " + num(Y(yd / 2.0)) + " ";
            }
            path += "Z";
            out += std::string("<path class=\"seifert") + (smax ? " smax" : "") + "\" d=\"" +
                   path + "\" fill=\"none\" stroke=\"" + (smax ? "#c03020" : "#2060c0") +
                   "\" stroke-width=\"" + (smax ? "1.8" : "1.2") + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_tikz(const Permutation& p, const RenderStyle& style) {
    const CycleDiagram d = build_cycle_diagram(p);
    const int n = p.size();
    std::string out;
    out += "% permutation: " + p.format() + "\n";
    out += "\\begin{tikzpicture}[scale=0.5]\n";
    if (style.show_diagonal) {
        out += "  \\draw[lightgray, dashed] (1,1) -- (" + num(n) + "," + num(n) + ");\n";
    }
    for (const Segment& s : d.vsegs) {
        out += "  \\draw[thick] (" + num(s.fixed) + "," + num(s.lo) + ") -- (" + num(s.fixed) +
               "," + num(s.hi) + ");\n";
    }
    for (const Segment& s : d.hsegs) {
        for (const auto& [a, b] : hseg_pieces(d, s)) {
            out += "  \\draw[thick] (" + num(a) + "," + num(s.fixed) + ") -- (" + num(b) + "," +
                   num(s.fixed) + ");\n";
        }
    }
    for (int i : d.points) {
        out += "  \\fill (" + num(i) + "," + num(i) + ") circle (0.12);\n";
    }
    if (style.show_crossings) {
        for (const Crossing& c : d.crossings) {
            out += "  \\draw[gray] (" + num(c.col) + "," + num(c.row) + ") circle (0.3);\n";
        }
    }
    if (style.show_seifert) {
        const SeifertDecomposition dec = seifert_circles(d);
        for (const SeifertCircle& c : dec.circles) {
            const bool smax = style.show_smax && dec.parent[c.id] == -1 && !c.degenerate;
            if (c.degenerate) {
                out += "  \\draw[blue] (" + num(c.lower_left) + "," + num(c.lower_left) +
                       ") circle (0.25);\n";
                continue;
            }
            out += smax ? "  \\draw[red, rounded corners=3pt] " : "  \\draw[blue, rounded corners=3pt] ";
            for (std::size_t k = 0; k < c.verts.size(); ++k) {
                const auto [xd, yd] = c.verts[k];
                if (k) out += " -- ";
                out += "(" + num(xd / 2.0) + "," + num(yd / 2.0) + ")";
            }
            out += " -- cycle;\n";
        }
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace

std::string render_diagram(const Permutation& p, const RenderStyle& style) {
    if (style.cell_size <= 0) throw std::invalid_argument("render: cell size must be positive");
    return style.format == RenderFormat::svg ? render_svg(p, style) : render_tikz(p, style);
}

}  // namespace permlink
