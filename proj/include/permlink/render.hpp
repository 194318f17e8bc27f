#pragma once

#include <string>

#include "permlink/permutation.hpp"

namespace permlink {

enum class RenderFormat { svg, tikz };

struct RenderStyle {
    double cell_size = 24.0;  // pixels per grid unit (SVG only)
    bool show_diagonal = true;
    bool show_crossings = false;
    bool show_seifert = false;
    bool show_smax = true;  // highlight maximal circles in the overlay
    RenderFormat format = RenderFormat::svg;
};

/// Static picture of the cycle diagram, y increasing upward. Horizontal
/// strands are broken at each crossing (the vertical strand passes over);
/// the optional overlay draws every Seifert circle, maximal ones
/// highlighted. Output is deterministic for identical input and style.
std::string render_diagram(const Permutation& p, const RenderStyle& style = {});

}  // namespace permlink
