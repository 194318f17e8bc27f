#include "permlink/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permlink {

namespace {

// Union-find over 1-based indices.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

CycleDiagram build_cycle_diagram(const Permutation& p) {
    const int n = p.size();
    CycleDiagram d{p, {}, {}, {}, {}};
    for (int i = 1; i <= n; ++i) {
        const int v = p(i);
        if (v == i) {
            d.points.push_back(i);
            continue;
        }
        d.vsegs.push_back({i, i, std::min(i, v), std::max(i, v)});
        d.hsegs.push_back({i, v, std::min(i, v), std::max(i, v)});
    }
    for (int i = 1; i <= n; ++i) {
        const int vi = p(i);
        if (vi == i) continue;
        const int lo_i = std::min(i, vi), hi_i = std::max(i, vi);
        for (int j = 1; j <= n; ++j) {
            const int vj = p(j);
            if (vj == j) continue;
            const int lo_j = std::min(j, vj), hi_j = std::max(j, vj);
            if (lo_j < i && i < hi_j && lo_i < vj && vj < hi_i) {
                d.crossings.push_back({i, vj, i, j, vj > i});
            }
        }
    }
    return d;
}

int crossing_count(const CycleDiagram& d) {
    return static_cast<int>(d.crossings.size());
}

int s_statistic(const Permutation& p) {
    const int n = p.size();
    const Permutation inv = p.inverse();
    int s = 0;
    for (int i = 1; i <= n; ++i) {
        if (p(i) == i) ++s;
        else if (p(i) < i && inv(i) < i) ++s;
    }
    return s;
}

std::vector<std::vector<int>> planar_components(const CycleDiagram& d) {
    const int n = d.size();
    const Permutation& p = d.perm;
    DisjointSets ds(n);
    // The vertical stroke of i meets the horizontal stroke of j iff the
    // point (i, p(j)) lies on both (closed spans, endpoints included).
    for (int i = 1; i <= n; ++i) {
        const int vi = p(i);
        if (vi == i) continue;
        const int lo_i = std::min(i, vi), hi_i = std::max(i, vi);
        for (int j = 1; j <= n; ++j) {
            const int vj = p(j);
            if (vj == j || j == i) continue;
            const int lo_j = std::min(j, vj), hi_j = std::max(j, vj);
            if (lo_j <= i && i <= hi_j && lo_i <= vj && vj <= hi_i) ds.unite(i, j);
        }
    }
    std::vector<std::vector<int>> byroot(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) byroot[ds.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& part : byroot)
        if (!part.empty()) out.push_back(std::move(part));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool is_split(const Permutation& p) {
    return planar_components(build_cycle_diagram(p)).size() >= 2;
}

int linking_number(const CycleDiagram& d, int cycle_a, int cycle_b) {
    if (cycle_a == cycle_b) {
        throw std::invalid_argument("linking_number: identical cycle ids");
    }
    const auto cycles = cycles_of(d.perm);
    const std::vector<int>* ca = nullptr;
    const std::vector<int>* cb = nullptr;
    for (const auto& c : cycles) {
        if (c.front() == cycle_a) ca = &c;
        if (c.front() == cycle_b) cb = &c;
    }
    if (!ca || !cb) {
        throw std::invalid_argument("linking_number: unknown cycle id " +
                                    std::to_string(!ca ? cycle_a : cycle_b));
    }
    std::vector<int> who(static_cast<std::size_t>(d.size()) + 1, 0);
    for (int i : *ca) who[i] = 1;
    for (int i : *cb) who[i] = 2;
    int inter = 0;
    for (const Crossing& c : d.crossings) {
        const int wv = who[c.v_index], wh = who[c.h_index];
        if ((wv == 1 && wh == 2) || (wv == 2 && wh == 1)) ++inter;
    }
    // Every crossing is negative; lk is half the signed sum.
    return -inter / 2;
}

std::string GridDiagram::to_text() const {
    std::string out = std::to_string(size);
    out += '\n';
    for (int c = 0; c < size; ++c) {
        if (c) out += ' ';
        out += std::to_string(x_markers[c]);
    }
    out += '\n';
    for (int c = 0; c < size; ++c) {
        if (c) out += ' ';
        out += std::to_string(o_markers[c]);
    }
    out += '\n';
    return out;
}

nlohmann::json to_json(const CycleDiagram& d) {
    auto seg_json = [](const Segment& s) {
        return nlohmann::json{{"index", s.index}, {"at", s.fixed}, {"lo", s.lo}, {"hi", s.hi}};
    };
    nlohmann::json vs = nlohmann::json::array(), hs = nlohmann::json::array(),
                   cr = nlohmann::json::array();
    for (const auto& s : d.vsegs) vs.push_back(seg_json(s));
    for (const auto& s : d.hsegs) hs.push_back(seg_json(s));
    for (const auto& c : d.crossings) {
        cr.push_back({{"col", c.col},
                      {"row", c.row},
                      {"v_index", c.v_index},
                      {"h_index", c.h_index},
                      {"above_diagonal", c.above_diagonal},
                      {"sign", -1}});
    }
    return {{"perm", d.perm.format()},
            {"n", d.size()},
            {"vertical", vs},
            {"horizontal", hs},
            {"points", d.points},
            {"crossings", cr}};
}

GridDiagram grid_export(const Permutation& p) {
    const int n = p.size();
    // Expanded coordinate of original value v: shift by the number of
    // fixed points before it, leaving one fresh slot after each.
    std::vector<int> expand(static_cast<std::size_t>(n) + 1, 0);
    int fixed_before = 0;
    for (int v = 1; v <= n; ++v) {
        expand[v] = v + fixed_before;
        if (p(v) == v) ++fixed_before;
    }
    const int size = n + fixed_before;
    GridDiagram g{size, std::vector<int>(static_cast<std::size_t>(size)),
                  std::vector<int>(static_cast<std::size_t>(size))};
    for (int i = 1; i <= n; ++i) {
        const int c = expand[i];
        if (p(i) == i) {
            // Counterclockwise 2x2 square on the fresh slot pair.
            g.o_markers[c - 1] = c;
            g.x_markers[c - 1] = c + 1;
            g.o_markers[c] = c + 1;
            g.x_markers[c] = c;
        } else {
            g.o_markers[c - 1] = c;
            g.x_markers[c - 1] = expand[p(i)];
        }
    }
    return g;
}

}  // namespace permlink
