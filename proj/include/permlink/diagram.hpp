#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permlink/permutation.hpp"

namespace permlink {

/// One axis-aligned stroke of the cycle diagram, endpoints included.
/// A vertical stroke sits at column `fixed` and spans rows [lo, hi];
/// a horizontal stroke sits at row `fixed` and spans columns [lo, hi].
struct Segment {
    int index;  // owning position of the permutation
    int fixed;
    int lo, hi;
};

/// Transversal intersection of a vertical and a horizontal stroke.
/// The crossing point is strictly interior to both strokes, the vertical
/// strand passes over, and the sign is always negative.
struct Crossing {
    int col, row;
    int v_index, h_index;
    bool above_diagonal;  // row > col
};

/// The decorated cycle diagram G of a permutation: for each non-fixed
/// index i a vertical stroke (i,i)-(i,p(i)) and a horizontal stroke
/// (i,p(i))-(p(i),p(i)); fixed points are isolated dots.
struct CycleDiagram {
    Permutation perm;
    std::vector<Segment> vsegs;
    std::vector<Segment> hsegs;
    std::vector<int> points;  // fixed points, ascending
    std::vector<Crossing> crossings;

    int size() const { return perm.size(); }
};

CycleDiagram build_cycle_diagram(const Permutation& p);

int crossing_count(const CycleDiagram& d);

/// Upper-right corner count (p(i) < i and p^-1(i) < i) plus fixed points.
/// Equals the number of Seifert circles of the smoothed diagram.
int s_statistic(const Permutation& p);

/// Connected components of the diagram as a planar point set (touching
/// strokes connect, crossings included). Each part is the sorted set of
/// owning indices; parts are ordered by smallest member.
std::vector<std::vector<int>> planar_components(const CycleDiagram& d);

/// True iff the diagram has at least two planar components. Equivalent
/// to the permutation stabilizing some proper subinterval.
bool is_split(const Permutation& p);

/// Linking number of the two link components named by cycle ids (the
/// smallest element of each cycle): minus half the number of crossings
/// between the two cycles. Always <= 0, and 0 exactly when the two
/// cycles' strokes occupy disjoint parts of the plane.
/// Throws std::invalid_argument on identical or unknown ids.
int linking_number(const CycleDiagram& d, int cycle_a, int cycle_b);

/// Square grid with one X and one O marker per row and per column.
struct GridDiagram {
    int size;
    std::vector<int> x_markers;  // x_markers[c-1] = row of the X in column c
    std::vector<int> o_markers;

    /// Three lines: size, x markers, o markers.
    std::string to_text() const;
};

/// Grid presentation of the link: O at (i,i) and X at (i,p(i)); each fixed
/// point expands into a 2x2 counterclockwise square on fresh adjacent
/// rows/columns, so the grid size is n + #fixed points.
GridDiagram grid_export(const Permutation& p);

nlohmann::json to_json(const CycleDiagram& d);

}  // namespace permlink
