#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permlink/diagram.hpp"

namespace permlink {

/// One closed curve of the orientation-coherent smoothing. Vertices are
/// kept in doubled coordinates so the half-unit crossing detours stay in
/// exact integer arithmetic; consecutive vertices are joined by straight
/// edges (axis-parallel runs and unit diagonal chamfers at crossings).
struct SeifertCircle {
    int id = 0;
    bool degenerate = false;  // fixed-point loop
    int lower_left = 0;       // diagonal coordinate l of the corner (l,l)
    int upper_right = 0;      // diagonal coordinate u of the corner (u,u)
    std::vector<std::pair<int, int>> verts;  // doubled coords, closed polygon
    std::vector<int> crossing_ids;  // crossings whose smoothing arcs lie here
    int component = 0;              // planar component id (smallest index)
};

struct SeifertDecomposition {
    std::vector<SeifertCircle> circles;
    /// Containment forest within each planar component: parent[i] is the
    /// smallest circle properly containing circle i, or -1 for roots.
    std::vector<int> parent;
    /// Root circle (the maximal one) of each planar component.
    std::map<int, int> smax_per_component;
    int euler_characteristic = 0;
    int crossing_count = 0;
    /// Per diagram crossing: ids of the circles owning its north-west and
    /// south-east smoothing arcs.
    std::vector<std::pair<int, int>> crossing_arc_owners;
};

/// Smooths every crossing coherently with the strand orientation and
/// traces the resulting circles, starting from each lower-left corner in
/// diagonal order. Fixed points yield degenerate one-point circles.
SeifertDecomposition seifert_circles(const CycleDiagram& d);

/// Recomputes the containment forest of an already-traced decomposition.
std::vector<int> containment_order(const SeifertDecomposition& dec);

/// s - xing, the Euler characteristic of the Seifert surface built from
/// the smoothed diagram (disks joined by half-twisted bands).
int euler_characteristic(const Permutation& p);

nlohmann::json to_json(const SeifertDecomposition& dec);

}  // namespace permlink
