#include "permlink/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permlink/constructions.hpp"
#include "permlink/kernels.hpp"

namespace permlink {

StatsRecord compute_stats(const Permutation& p) {
    StatsRecord r;
    r.n = p.size();
    r.D = footrule_D(p);
    r.I = inversions_I(p);
    r.cyc = cycle_count(p);
    r.T = r.n - r.cyc;
    r.x = r.D - r.I - r.n;
    r.xing = static_cast<int>(kernels::crossings(p.values()));
    r.s = s_statistic(p);
    r.chi = r.s - r.xing;
    r.shallow = (r.x + r.cyc == 0);
    r.sif = is_sif(p);
    r.split = is_split(p);
    r.avoids321 = !contains_321(p);
    r.case_tag = r.n < 3 ? "Base" : case_name(classify_case(p).tag);
    return r;
}

nlohmann::json to_json(const StatsRecord& r) {
    return {{"n", r.n},         {"D", r.D},           {"I", r.I},
            {"T", r.T},         {"cyc", r.cyc},       {"x", r.x},
            {"xing", r.xing},   {"s", r.s},           {"chi", r.chi},
            {"shallow", r.shallow}, {"sif", r.sif},   {"split", r.split},
            {"avoids321", r.avoids321}, {"case", r.case_tag}};
}

SequenceFile load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
    SequenceFile f;
    const auto slash = path.find_last_of('/');
    f.name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        long long index = 0, value = 0;
        std::string extra;
        if (!(ss >> index >> value) || (ss >> extra)) {
            throw std::invalid_argument(f.name + ": malformed line " + std::to_string(line_no));
        }
        const auto [it, fresh] = f.terms.emplace(static_cast<int>(index), value);
        if (!fresh) {
            throw std::invalid_argument(f.name + ": duplicate index " + std::to_string(index) +
                                        " at line " + std::to_string(line_no));
        }
    }
    return f;
}

namespace {

CrossCheckReport check_at_offset(const std::map<int, std::int64_t>& counts,
                                 const SequenceFile& seq, int offset) {
    CrossCheckReport rep;
    rep.sequence = seq.name;
    rep.offset = offset;
    rep.all_match = true;
    for (const auto& [n, computed] : counts) {
        const auto it = seq.terms.find(n + offset);
        if (it == seq.terms.end()) continue;
        const bool match = computed == it->second;
        rep.rows.push_back({n, computed, it->second, match});
        rep.all_match = rep.all_match && match;
    }
    return rep;
}

}  // namespace

CrossCheckReport cross_check(const std::map<int, std::int64_t>& counts,
                             const SequenceFile& seq, std::optional<int> offset) {
    if (offset) {
        CrossCheckReport rep = check_at_offset(counts, seq, *offset);
        if (rep.rows.size() < 3) {
            throw std::invalid_argument("cross_check: fewer than 3 overlapping indices");
        }
        return rep;
    }
    std::optional<CrossCheckReport> best;
    for (int k = -4; k <= 4; ++k) {
        CrossCheckReport rep = check_at_offset(counts, seq, k);
        if (rep.rows.size() < 3) continue;
        rep.offset_searched = true;
        const auto matches = [](const CrossCheckReport& r) {
            return std::count_if(r.rows.begin(), r.rows.end(),
                                 [](const CrossCheckRow& row) { return row.match; });
        };
        if (!best || matches(rep) > matches(*best)) best = std::move(rep);
    }
    if (!best) throw std::invalid_argument("cross_check: fewer than 3 overlapping indices");
    return *best;
}

std::optional<PermClass> parse_class(std::string_view name) {
    if (name == "sif") return PermClass::sif;
    if (name == "shallow") return PermClass::shallow;
    if (name == "avoids321") return PermClass::avoids321;
    if (name == "nonsplit") return PermClass::nonsplit;
    if (name == "x_histogram") return PermClass::x_histogram;
    if (name == "unknotted_cycles") return PermClass::unknotted_cycles;
    return std::nullopt;
}

const char* class_name(PermClass c) {
    switch (c) {
        case PermClass::sif: return "sif";
        case PermClass::shallow: return "shallow";
        case PermClass::avoids321: return "avoids321";
        case PermClass::nonsplit: return "nonsplit";
        case PermClass::x_histogram: return "x_histogram";
        case PermClass::unknotted_cycles: return "unknotted_cycles";
    }
    return "?";
}

namespace {

void check_enum_bound(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumeration bound must be in 1..10");
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<std::int32_t> vals(static_cast<std::size_t>(n));
    std::iota(vals.begin(), vals.end(), 1);
    do {
        fn(Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
}

}  // namespace

std::int64_t count_class(int n, PermClass c) {
    check_enum_bound(n);
    if (c == PermClass::x_histogram) {
        throw std::invalid_argument("x_histogram is a histogram; use x_histogram(n)");
    }
    std::int64_t count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        switch (c) {
            case PermClass::sif: count += is_sif(p); break;
            case PermClass::shallow: count += is_shallow(p); break;
            case PermClass::avoids321: count += !contains_321(p); break;
            case PermClass::nonsplit: count += !is_split(p); break;
            case PermClass::unknotted_cycles:
                count += cycle_count(p) == 1 && euler_characteristic(p) == 1;
                break;
            case PermClass::x_histogram: break;
        }
    });
    return count;
}

std::map<std::int64_t, std::int64_t> x_histogram(int n) {
    check_enum_bound(n);
    std::map<std::int64_t, std::int64_t> hist;
    for_each_permutation(n, [&](const Permutation& p) { ++hist[statistic_x(p)]; });
    return hist;
}

namespace detail {

const StatsRecord& PermContext::stats() {
    if (!stats_) stats_ = compute_stats(perm_);
    return *stats_;
}

const CycleDiagram& PermContext::diagram() {
    if (!diagram_) diagram_ = build_cycle_diagram(perm_);
    return *diagram_;
}

const SeifertDecomposition& PermContext::seifert() {
    if (!seifert_) seifert_ = seifert_circles(diagram());
    return *seifert_;
}

}  // namespace detail

namespace {

using detail::PermContext;
using Failure = std::optional<std::string>;

Failure check_main_theorem(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    if (r.D - r.I - r.n != r.xing - r.s) {
        return "D - I - n = " + std::to_string(r.D - r.I - r.n) +
               " but xing - s = " + std::to_string(r.xing - r.s);
    }
    return std::nullopt;
}

Failure check_dg_inequalities(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    if (r.I + r.T > r.D) return "I + T > D";
    if (r.D > 2 * r.I) return "D > 2I";
    if ((r.D == r.I + r.T) != r.shallow) return "first equality does not match shallow";
    if (r.shallow != (r.chi == r.cyc)) return "shallow does not match chi = cyc";
    if ((r.D == 2 * r.I) != r.avoids321) return "second equality does not match 321-avoidance";
    return std::nullopt;
}

Failure check_footrule_symmetry(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    if (r.D % 2 != 0) return "D is odd";
    const Permutation inv = ctx.perm().inverse();
    if (footrule_D(inv) != r.D) return "D differs on the inverse";
    if (inversions_I(inv) != r.I) return "I differs on the inverse";
    return std::nullopt;
}

Failure check_inversion_routes(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    const auto v = ctx.perm().values();
    const std::int64_t naive = kernels::ops_for(kernels::Backend::scalar)
                                   .inversions(v.data(), static_cast<int>(v.size()));
    const std::int64_t fast = kernels::inversions(v);
    if (naive != r.I || fast != r.I) {
        return "inversion routes disagree: fenwick=" + std::to_string(r.I) +
               " naive=" + std::to_string(naive) + " active=" + std::to_string(fast);
    }
    return std::nullopt;
}

Failure check_parse_roundtrip(PermContext& ctx) {
    if (Permutation::parse(ctx.perm().format()) != ctx.perm()) return "format/parse round trip broke";
    return std::nullopt;
}

Failure check_sif_split(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    const bool no_interval = stabilized_intervals(ctx.perm()).empty();
    const bool connected = planar_components(ctx.diagram()).size() == 1;
    if (no_interval != connected) return "interval and union-find connectivity oracles disagree";
    if (r.sif != no_interval) return "sif flag inconsistent";
    if (r.split != !connected) return "split flag inconsistent";
    if (r.n >= 2 && r.sif != !r.split) return "sif does not match non-split";
    return std::nullopt;
}

Failure check_corollary_1_3(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    if (r.D - (r.I + r.T) != r.cyc - r.chi) return "D - (I+T) differs from cyc - chi";
    return std::nullopt;
}

bool circle_is_monotone_staircase(const SeifertCircle& c) {
    if (c.degenerate) return true;
    // verts start at the lower-left corner; climb weakly to the
    // upper-right corner (staying weakly above the diagonal), then
    // descend weakly back (staying weakly below).
    const std::pair<int, int> ur{2 * c.upper_right, 2 * c.upper_right};
    const std::size_t m = c.verts.size();
    if (c.verts.front() != std::make_pair(2 * c.lower_left, 2 * c.lower_left)) return false;
    std::size_t ur_at = m;
    for (std::size_t k = 0; k < m; ++k) {
        if (c.verts[k] == ur) {
            ur_at = k;
            break;
        }
    }
    if (ur_at == m) return false;
    for (std::size_t k = 0; k < m; ++k) {
        const auto [x1, y1] = c.verts[k];
        const auto [x2, y2] = c.verts[(k + 1) % m];
        if (k < ur_at) {
            if (x2 < x1 || y2 < y1) return false;
            if (y1 < x1 || y2 < x2) return false;
        } else {
            if (x2 > x1 || y2 > y1) return false;
            if (y1 > x1 || y2 > x2) return false;
        }
    }
    return true;
}

Failure check_seifert_structure(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    const SeifertDecomposition& dec = ctx.seifert();
    if (static_cast<int>(dec.circles.size()) != r.s) {
        return "circle count " + std::to_string(dec.circles.size()) + " != s = " +
               std::to_string(r.s);
    }
    if (dec.euler_characteristic != r.chi) return "decomposition chi inconsistent";
    if (dec.crossing_count != r.xing) return "decomposition crossing count inconsistent";
    const auto comps = planar_components(ctx.diagram());
    if (dec.smax_per_component.size() != comps.size()) {
        return "maximal-circle roots do not match planar components";
    }
    std::int64_t degenerate = 0;
    for (const SeifertCircle& c : dec.circles) {
        degenerate += c.degenerate;
        if (!circle_is_monotone_staircase(c)) {
            return "circle " + std::to_string(c.id) + " violates the staircase invariant";
        }
        const int par = dec.parent[c.id];
        if (par >= 0 && dec.circles[par].component != c.component) {
            return "containment crosses planar components";
        }
    }
    if (degenerate != static_cast<std::int64_t>(ctx.diagram().points.size())) {
        return "degenerate circles do not match fixed points";
    }
    return std::nullopt;
}

Failure check_linking_numbers(PermContext& ctx) {
    const Permutation& p = ctx.perm();
    const CycleDiagram& d = ctx.diagram();
    const auto cycles = cycles_of(p);
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            std::vector<int> who(static_cast<std::size_t>(p.size()) + 1, 0);
            for (int i : cycles[a]) who[i] = 1;
            for (int i : cycles[b]) who[i] = 2;
            int inter = 0;
            for (const Crossing& c : d.crossings) {
                if (who[c.v_index] + who[c.h_index] == 3 && who[c.v_index] != who[c.h_index])
                    ++inter;
            }
            if (inter % 2 != 0) return "odd inter-cycle crossing count";
            const int lk = linking_number(d, cycles[a].front(), cycles[b].front());
            if (lk != -inter / 2) return "linking number inconsistent with crossings";
            if (lk > 0) return "positive linking number";
            // Disjoint planar supports: no closed intersection between the
            // two cycles' strokes.
            bool touching = false;
            for (int i : cycles[a]) {
                if (p(i) == i) continue;
                const int lo_i = std::min(i, static_cast<int>(p(i)));
                const int hi_i = std::max(i, static_cast<int>(p(i)));
                for (int j : cycles[b]) {
                    if (p(j) == j) continue;
                    const int lo_j = std::min(j, static_cast<int>(p(j)));
                    const int hi_j = std::max(j, static_cast<int>(p(j)));
                    // vertical of i against horizontal of j, and vice versa
                    if (lo_j <= i && i <= hi_j && lo_i <= p(j) && p(j) <= hi_i) touching = true;
                    if (lo_i <= j && j <= hi_i && lo_j <= p(i) && p(i) <= hi_j) touching = true;
                }
            }
            if ((lk == 0) != !touching) return "zero linking number does not match disjoint supports";
        }
    }
    return std::nullopt;
}

Failure check_translate_orbit(PermContext& ctx) {
    const Permutation& p = ctx.perm();
    const StatsRecord& r = ctx.stats();
    Permutation q = p;
    for (int k = 1; k <= p.size(); ++k) {
        q = translate(q);
        if (statistic_x(q) != r.x) return "x changed under translation";
        if (cycle_count(q) != r.cyc) return "cycle count changed under translation";
        // xing and s vary individually along the orbit (2413 -> 4312 gains
        // a crossing and a corner); only their difference is preserved.
        if (s_statistic(q) - kernels::crossings(q.values()) != r.chi)
            return "chi changed under translation";
    }
    if (q != p) return "n translations did not return to the start";
    return std::nullopt;
}

Failure check_grid_export(PermContext& ctx) {
    const Permutation& p = ctx.perm();
    const GridDiagram g = grid_export(p);
    const int fixed = static_cast<int>(ctx.diagram().points.size());
    if (g.size != p.size() + fixed) return "grid size is not n + #fixed";
    std::vector<bool> seen_x(static_cast<std::size_t>(g.size) + 1, false);
    std::vector<bool> seen_o(seen_x);
    for (int c = 0; c < g.size; ++c) {
        const int x = g.x_markers[c], o = g.o_markers[c];
        if (x < 1 || x > g.size || seen_x[x]) return "x markers are not a bijection";
        if (o < 1 || o > g.size || seen_o[o]) return "o markers are not a bijection";
        seen_x[x] = seen_o[o] = true;
        if (x == o) return "a cell carries both markers";
    }
    return std::nullopt;
}

Failure case2_battery(const Permutation& original, const Permutation& host, int i) {
    const Permutation cut = case2_cut(host, i);
    if (cut.size() != original.size() + 1) return "cut length is not n + 1";
    if (footrule_D(cut) != footrule_D(original)) return "cut changed D";
    if (inversions_I(cut) != inversions_I(original)) return "cut changed I";
    if (statistic_x(cut) != statistic_x(original) - 1) return "cut did not drop x by 1";
    if (!is_split(cut)) return "cut diagram is not disconnected";
    for (int j = 1; j <= cut.size(); ++j)
        if (cut(j) == j) return "cut has a fixed point";
    return std::nullopt;
}

Failure check_case_identities(PermContext& ctx) {
    const Permutation& p = ctx.perm();
    const int n = p.size();
    if (n < 3) return std::nullopt;
    const StatsRecord& r = ctx.stats();
    const CaseLabel label = classify_case(p);
    if ((label.tag == CaseTag::case1) != r.split) return "case 1 does not match split";
    if (label.tag == CaseTag::case1) {
        const auto& w = *label.interval;
        for (int i = w.lo; i <= w.hi; ++i)
            if (p(i) < w.lo || p(i) > w.hi) return "case-1 witness interval not stabilized";
        return std::nullopt;
    }

    // Every case-2 witness must satisfy the cut identities, on either side.
    bool any_witness = false;
    for (int i = 2; i <= n - 1; ++i) {
        bool low = true, high = true;
        for (int j = 1; j < i; ++j) low = low && p(j) <= i;
        for (int j = i + 1; j <= n; ++j) high = high && p(j) >= i;
        if (low) {
            any_witness = true;
            if (auto fail = case2_battery(p, p, i)) return "low witness " + std::to_string(i) + ": " + *fail;
        }
        if (high) {
            any_witness = true;
            const Permutation rc = reverse_complement(p);
            if (auto fail = case2_battery(p, rc, n + 1 - i))
                return "high witness " + std::to_string(i) + ": " + *fail;
        }
    }
    if (any_witness != (label.tag == CaseTag::case2)) return "case-2 witness scan disagrees";
    if (label.tag != CaseTag::case3) return std::nullopt;

    const Case3Data data = case3_reduce(p);
    const Permutation& bar = data.bar;
    const Permutation& red = data.reduced;
    if (bar(1) != 1 || bar(n) != n) return "bar does not fix the ends";
    if (bar != direct_sum(Permutation::identity(1), direct_sum(red, Permutation::identity(1))))
        return "bar is not id + reduced + id";
    const int i_a = data.i_cols.empty() ? 1 : data.i_cols.back();
    const int j_b = data.j_cols.empty() ? n : data.j_cols.back();
    if (p(i_a) != n || p(j_b) != 1) return "maximal circle misses the extreme columns";
    const std::int64_t dI = inversions_I(p) - inversions_I(bar);
    if (dI != 2 * n - 3 - data.c) return "I difference is not 2n - 3 - c";
    if (footrule_D(p) - footrule_D(bar) != 2 * (n - 1)) return "D difference is not 2(n - 1)";
    if (statistic_x(p) - statistic_x(red) != data.c - 1) return "x difference is not c - 1";
    if (-euler_characteristic(p) + euler_characteristic(red) != data.c - 1)
        return "chi difference is not c - 1";

    // Inversion bookkeeping: A and B are disjoint inversions of p, and the
    // pairs changing relative order between p and bar are exactly A union B.
    std::set<std::pair<int, int>> ab;
    for (const auto& pr : data.set_a) ab.insert(pr);
    std::size_t a_size = ab.size();
    if (a_size != data.set_a.size()) return "A has repeated pairs";
    for (const auto& pr : data.set_b) {
        if (!ab.insert(pr).second) return "A and B are not disjoint";
    }
    if (static_cast<std::int64_t>(ab.size()) != dI) return "|A u B| is not I(p) - I(bar)";
    const Permutation pinv = p.inverse();
    const Permutation binv = bar.inverse();
    for (const auto& [u, v] : ab) {
        if (!(u < v)) return "pair is not value-ordered";
        if (!(pinv(v) < pinv(u))) return "pair in A u B is not an inversion of p";
    }
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            const bool flipped = (pinv(u) < pinv(v)) != (binv(u) < binv(v));
            if (flipped != ab.contains({u, v})) return "relative-order flips are not A u B";
        }
    }

    // Removing the maximal circle: bar's strokes embed in p's, and bar
    // keeps exactly the crossings off the maximal circle.
    const CycleDiagram& dp = ctx.diagram();
    const CycleDiagram db = build_cycle_diagram(bar);
    for (const Segment& s : db.vsegs) {
        bool inside = false;
        for (const Segment& t : dp.vsegs)
            inside = inside || (t.fixed == s.fixed && t.lo <= s.lo && s.hi <= t.hi);
        if (!inside) return "bar vertical stroke not contained in the original diagram";
    }
    for (const Segment& s : db.hsegs) {
        bool inside = false;
        for (const Segment& t : dp.hsegs)
            inside = inside || (t.fixed == s.fixed && t.lo <= s.lo && s.hi <= t.hi);
        if (!inside) return "bar horizontal stroke not contained in the original diagram";
    }
    const SeifertDecomposition& dec = ctx.seifert();
    const int smax = dec.smax_per_component.begin()->second;
    std::set<std::pair<int, int>> expected;
    {
        std::set<int> on_smax(dec.circles[smax].crossing_ids.begin(),
                              dec.circles[smax].crossing_ids.end());
        for (int c = 0; c < static_cast<int>(dp.crossings.size()); ++c) {
            if (!on_smax.contains(c)) expected.insert({dp.crossings[c].col, dp.crossings[c].row});
        }
    }
    std::set<std::pair<int, int>> got;
    for (const Crossing& c : db.crossings) got.insert({c.col, c.row});
    if (got != expected) return "bar crossings differ from the diagram minus the maximal circle";
    if (s_statistic(red) != r.s - 1) return "reduced s is not s - 1";
    if (kernels::crossings(red.values()) != r.xing - data.c) return "reduced xing is not xing - c";
    return std::nullopt;
}

Failure check_replay(PermContext& ctx) {
    const StatsRecord& r = ctx.stats();
    const std::int64_t v = replay_x(ctx.perm());
    if (v != r.x) {
        return "replay produced " + std::to_string(v) + " but x = " + std::to_string(r.x);
    }
    return std::nullopt;
}

}  // namespace

namespace detail {

const std::vector<Check>& check_registry() {
    static const std::vector<Check> checks = {
        {"main_theorem", 0, check_main_theorem},
        {"dg_inequalities", 0, check_dg_inequalities},
        {"footrule_symmetry", 0, check_footrule_symmetry},
        {"inversion_routes", 0, check_inversion_routes},
        {"parse_roundtrip", 0, check_parse_roundtrip},
        {"sif_split", 0, check_sif_split},
        {"corollary_1_3", 0, check_corollary_1_3},
        {"seifert_structure", 0, check_seifert_structure},
        {"linking_numbers", 0, check_linking_numbers},
        {"translate_orbit", 7, check_translate_orbit},
        {"grid_export", 0, check_grid_export},
        {"case_identities", 0, check_case_identities},
        {"replay", 0, check_replay},
    };
    return checks;
}

}  // namespace detail

std::vector<std::string> available_checks() {
    std::vector<std::string> names;
    for (const auto& c : detail::check_registry()) names.push_back(c.name);
    return names;
}

bool VerifyReport::ok() const {
    for (const auto& c : checks)
        if (c.counterexample) return false;
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"ok", !c.counterexample}};
        if (c.counterexample) {
            j["counterexample"] = {{"perm", c.counterexample->perm},
                                   {"message", c.counterexample->message},
                                   {"details", c.counterexample->details}};
        }
        checks_json.push_back(std::move(j));
    }
    return {{"n_max", n_max},
            {"workers", workers},
            {"permutations", permutations},
            {"ok", ok()},
            {"checks", checks_json}};
}

namespace detail {

namespace {

struct ShardOutcome {
    std::int64_t perms = 0;
    std::vector<std::int64_t> passed;
    std::vector<std::optional<Counterexample>> counterexamples;
};

Counterexample make_counterexample(const std::string& check, const Permutation& p,
                                   const std::string& message) {
    Counterexample ce;
    ce.check = check;
    ce.perm = p.format();
    ce.message = message;
    ce.details = {{"stats", to_json(compute_stats(p))},
                  {"diagram", to_json(build_cycle_diagram(p))}};
    return ce;
}

}  // namespace

VerifyReport run_checks(int n_max, const std::vector<Check>& checks, int workers) {
    check_enum_bound(n_max);
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }

    // One shard per (n, first value); each runs over (n-1)! suffixes.
    std::vector<std::pair<int, int>> shards;
    for (int n = 1; n <= n_max; ++n)
        for (int w = 1; w <= n; ++w) shards.emplace_back(n, w);

    std::vector<ShardOutcome> outcomes(shards.size());
    std::atomic<std::size_t> next{0};

    auto run_shard = [&](std::size_t shard_id) {
        const auto [n, w] = shards[shard_id];
        ShardOutcome& out = outcomes[shard_id];
        out.passed.assign(checks.size(), 0);
        out.counterexamples.assign(checks.size(), std::nullopt);
        std::vector<std::int32_t> vals(static_cast<std::size_t>(n));
        vals[0] = w;
        int fill = 1;
        for (int v = 1; v <= n; ++v)
            if (v != w) vals[fill++] = v;
        do {
            const Permutation p{std::vector<std::int32_t>(vals)};
            ++out.perms;
            PermContext ctx(p);
            for (std::size_t c = 0; c < checks.size(); ++c) {
                if (checks[c].n_limit && n > checks[c].n_limit) continue;
                Failure fail;
                try {
                    fail = checks[c].fn(ctx);
                } catch (const std::exception& e) {
                    fail = std::string("exception: ") + e.what();
                }
                if (!fail) {
                    ++out.passed[c];
                } else if (!out.counterexamples[c]) {
                    out.counterexamples[c] = make_counterexample(checks[c].name, p, *fail);
                }
            }
        } while (std::next_permutation(vals.begin() + 1, vals.end()));
    };

    auto worker_loop = [&]() {
        for (;;) {
            const std::size_t id = next.fetch_add(1);
            if (id >= shards.size()) return;
            run_shard(id);
        }
    };

    if (workers == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker_loop);
        for (auto& th : pool) th.join();
    }

    VerifyReport report;
    report.n_max = n_max;
    report.workers = workers;
    for (const auto& check : checks) report.checks.push_back({check.name, 0, std::nullopt});
    for (const ShardOutcome& out : outcomes) {
        report.permutations += out.perms;
        for (std::size_t c = 0; c < checks.size(); ++c) {
            report.checks[c].passed += out.passed[c];
            if (!report.checks[c].counterexample && out.counterexamples[c]) {
                report.checks[c].counterexample = out.counterexamples[c];
            }
        }
    }
    return report;
}

}  // namespace detail

VerifyReport verify_all(int n_max, const std::vector<std::string>& checks, int workers) {
    const auto& registry = detail::check_registry();
    std::vector<detail::Check> selected;
    if (checks.empty()) {
        selected = registry;
    } else {
        for (const std::string& name : checks) {
            const auto it = std::find_if(registry.begin(), registry.end(),
                                         [&](const detail::Check& c) { return c.name == name; });
            if (it == registry.end()) throw std::invalid_argument("unknown check: " + name);
            selected.push_back(*it);
        }
    }
    return detail::run_checks(n_max, selected, workers);
}

}  // namespace permlink
