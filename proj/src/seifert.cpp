#include "permlink/seifert.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlink {

namespace {

// Walk state: a sub-arc of a vertical or horizontal stroke, identified by
// the owning index and the number of crossings already passed along flow.
struct ArcRef {
    bool vertical;
    int index;
    int slot;
    bool operator==(const ArcRef&) const = default;
};

struct StrokeCrossings {
    // Crossing ids along the stroke, sorted in flow order (verticals flow
    // away from the diagonal, horizontals toward their diagonal end).
    std::vector<int> ids;
};

// Even-odd test of a point strictly off the polygon. Edges are vertical,
// horizontal, or unit diagonals; all arithmetic stays integral.
bool point_inside(const std::vector<std::pair<int, int>>& poly, int px, int py) {
    bool inside = false;
    const std::size_t m = poly.size();
    for (std::size_t k = 0; k < m; ++k) {
        const auto [x1, y1] = poly[k];
        const auto [x2, y2] = poly[(k + 1) % m];
        if ((y1 <= py) == (y2 <= py)) continue;
        const std::int64_t x_at =
            static_cast<std::int64_t>(x1) +
            static_cast<std::int64_t>(x2 - x1) * (py - y1) / (y2 - y1);
        if (x_at < px) inside = !inside;
    }
    return inside;
}

}  // namespace

SeifertDecomposition seifert_circles(const CycleDiagram& d) {
    const Permutation& p = d.perm;
    const int n = p.size();
    const Permutation pinv = p.inverse();

    // Crossings per stroke, in flow order.
    std::vector<StrokeCrossings> on_v(static_cast<std::size_t>(n) + 1);
    std::vector<StrokeCrossings> on_h(static_cast<std::size_t>(n) + 1);
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        on_v[d.crossings[c].v_index].ids.push_back(c);
        on_h[d.crossings[c].h_index].ids.push_back(c);
    }
    for (int i = 1; i <= n; ++i) {
        if (p(i) == i) continue;
        const bool up = p(i) > i;
        std::sort(on_v[i].ids.begin(), on_v[i].ids.end(), [&](int a, int b) {
            return up ? d.crossings[a].row < d.crossings[b].row
                      : d.crossings[a].row > d.crossings[b].row;
        });
        const bool east = p(i) > i;
        std::sort(on_h[i].ids.begin(), on_h[i].ids.end(), [&](int a, int b) {
            return east ? d.crossings[a].col < d.crossings[b].col
                        : d.crossings[a].col > d.crossings[b].col;
        });
    }
    auto slot_after = [](const StrokeCrossings& sc, int crossing_id) {
        const auto it = std::find(sc.ids.begin(), sc.ids.end(), crossing_id);
        return static_cast<int>(it - sc.ids.begin()) + 1;
    };

    // Planar component of each index, keyed by smallest member.
    std::vector<int> comp_of(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& part : planar_components(d))
        for (int i : part) comp_of[i] = part.front();

    SeifertDecomposition dec;
    dec.crossing_count = static_cast<int>(d.crossings.size());
    dec.crossing_arc_owners.assign(d.crossings.size(), {-1, -1});

    std::vector<std::vector<bool>> seen_v(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<bool>> seen_h(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        if (p(i) == i) continue;
        seen_v[i].assign(on_v[i].ids.size() + 1, false);
        seen_h[i].assign(on_h[i].ids.size() + 1, false);
    }

    for (int start = 1; start <= n; ++start) {
        if (p(start) == start) {
            SeifertCircle circ;
            circ.id = static_cast<int>(dec.circles.size());
            circ.degenerate = true;
            circ.lower_left = circ.upper_right = start;
            circ.verts = {{2 * start, 2 * start}};
            circ.component = comp_of[start];
            dec.circles.push_back(std::move(circ));
            continue;
        }
        // Lower-left corners seed the non-degenerate circles.
        if (!(p(start) > start && pinv(start) > start)) continue;
        if (seen_v[start][0]) continue;

        SeifertCircle circ;
        circ.id = static_cast<int>(dec.circles.size());
        circ.lower_left = start;
        circ.upper_right = -1;
        circ.component = comp_of[start];
        auto push = [&](int x, int y) {
            if (!circ.verts.empty() && circ.verts.back() == std::make_pair(x, y)) return;
            circ.verts.emplace_back(x, y);
        };

        const ArcRef first{true, start, 0};
        ArcRef cur = first;
        int ur_hits = 0, ll_hits = 0;
        do {
            if (cur.vertical) {
                if (seen_v[cur.index][cur.slot])
                    throw std::logic_error("seifert trace revisited a vertical arc");
                seen_v[cur.index][cur.slot] = true;
                const bool up = p(cur.index) > cur.index;
                const auto& ids = on_v[cur.index].ids;
                if (cur.slot < static_cast<int>(ids.size())) {
                    const int cid = ids[cur.slot];
                    const Crossing& cr = d.crossings[cid];
                    circ.crossing_ids.push_back(cid);
                    if (up) {
                        // South-east arc: detour right, continue east.
                        dec.crossing_arc_owners[cid].second = circ.id;
                        push(2 * cr.col, 2 * cr.row - 1);
                        push(2 * cr.col + 1, 2 * cr.row);
                    } else {
                        // North-west arc: detour left, continue west.
                        dec.crossing_arc_owners[cid].first = circ.id;
                        push(2 * cr.col, 2 * cr.row + 1);
                        push(2 * cr.col - 1, 2 * cr.row);
                    }
                    const int h = cr.h_index;
                    cur = ArcRef{false, h, slot_after(on_h[h], cid)};
                } else {
                    // Far end (i, p(i)): the stroke turns onto its horizontal.
                    push(2 * cur.index, 2 * p(cur.index));
                    cur = ArcRef{false, cur.index, 0};
                }
            } else {
                if (seen_h[cur.index][cur.slot])
                    throw std::logic_error("seifert trace revisited a horizontal arc");
                seen_h[cur.index][cur.slot] = true;
                const bool east = p(cur.index) > cur.index;
                const auto& ids = on_h[cur.index].ids;
                if (cur.slot < static_cast<int>(ids.size())) {
                    const int cid = ids[cur.slot];
                    const Crossing& cr = d.crossings[cid];
                    circ.crossing_ids.push_back(cid);
                    if (east) {
                        // North-west arc: detour up, continue north.
                        dec.crossing_arc_owners[cid].first = circ.id;
                        push(2 * cr.col - 1, 2 * cr.row);
                        push(2 * cr.col, 2 * cr.row + 1);
                    } else {
                        // South-east arc: detour down, continue south.
                        dec.crossing_arc_owners[cid].second = circ.id;
                        push(2 * cr.col + 1, 2 * cr.row);
                        push(2 * cr.col, 2 * cr.row - 1);
                    }
                    cur = ArcRef{true, cr.v_index, slot_after(on_v[cr.v_index], cid)};
                } else {
                    // Diagonal end (r, r): continue onto the vertical at r.
                    const int r = p(cur.index);
                    push(2 * r, 2 * r);
                    if (p(r) < r && pinv(r) < r) {
                        circ.upper_right = r;
                        ++ur_hits;
                    }
                    if (p(r) > r && pinv(r) > r) ++ll_hits;
                    cur = ArcRef{true, r, 0};
                }
            }
        } while (!(cur == first));

        if (ur_hits != 1 || ll_hits != 1 || circ.upper_right < 0)
            throw std::logic_error("seifert circle without unique corners");
        // Rotate so the closed polygon starts at the lower-left corner.
        std::rotate(circ.verts.begin(), circ.verts.end() - 1, circ.verts.end());
        std::sort(circ.crossing_ids.begin(), circ.crossing_ids.end());
        circ.crossing_ids.erase(
            std::unique(circ.crossing_ids.begin(), circ.crossing_ids.end()),
            circ.crossing_ids.end());
        dec.circles.push_back(std::move(circ));
    }

    for (int i = 1; i <= n; ++i) {
        if (p(i) == i) continue;
        for (bool b : seen_v[i])
            if (!b) throw std::logic_error("seifert trace left a vertical arc unvisited");
        for (bool b : seen_h[i])
            if (!b) throw std::logic_error("seifert trace left a horizontal arc unvisited");
    }
    for (const auto& [nw, se] : dec.crossing_arc_owners)
        if (nw < 0 || se < 0) throw std::logic_error("crossing arc without owner");

    dec.euler_characteristic =
        static_cast<int>(dec.circles.size()) - dec.crossing_count;
    dec.parent = containment_order(dec);
    for (std::size_t i = 0; i < dec.circles.size(); ++i) {
        if (dec.parent[i] != -1) continue;
        const int comp = dec.circles[i].component;
        const auto [it, fresh] = dec.smax_per_component.emplace(comp, dec.circles[i].id);
        if (!fresh) throw std::logic_error("two maximal circles in one component");
    }
    return dec;
}

std::vector<int> containment_order(const SeifertDecomposition& dec) {
    const int m = static_cast<int>(dec.circles.size());
    // inside[b] = circles of the same planar component that contain b.
    std::vector<std::vector<int>> inside(static_cast<std::size_t>(m));
    for (int b = 0; b < m; ++b) {
        const auto& cb = dec.circles[b];
        const auto probe = cb.verts.front();
        for (int a = 0; a < m; ++a) {
            if (a == b) continue;
            const auto& ca = dec.circles[a];
            if (ca.component != cb.component || ca.degenerate) continue;
            if (point_inside(ca.verts, probe.first, probe.second)) inside[b].push_back(a);
        }
    }
    std::vector<int> parent(static_cast<std::size_t>(m), -1);
    for (int b = 0; b < m; ++b) {
        int best = -1;
        for (int a : inside[b]) {
            if (best == -1 || inside[a].size() > inside[static_cast<std::size_t>(best)].size())
                best = a;
        }
        parent[b] = best;
    }
    return parent;
}

int euler_characteristic(const Permutation& p) {
    return s_statistic(p) - crossing_count(build_cycle_diagram(p));
}

nlohmann::json to_json(const SeifertDecomposition& dec) {
    nlohmann::json circles = nlohmann::json::array();
    for (const auto& c : dec.circles) {
        circles.push_back({{"id", c.id},
                           {"degenerate", c.degenerate},
                           {"lower_left", c.lower_left},
                           {"upper_right", c.upper_right},
                           {"component", c.component},
                           {"parent", dec.parent[c.id]},
                           {"crossings", c.crossing_ids}});
    }
    nlohmann::json smax = nlohmann::json::object();
    for (const auto& [comp, id] : dec.smax_per_component)
        smax[std::to_string(comp)] = id;
    return {{"chi", dec.euler_characteristic},
            {"circle_count", dec.circles.size()},
            {"crossing_count", dec.crossing_count},
            {"smax_per_component", smax},
            {"circles", circles}};
}

}  // namespace permlink
