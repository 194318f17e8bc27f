#include "permlink/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "permlink/seifert.hpp"

namespace permlink {

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::case1: return "Case1";
        case CaseTag::case2: return "Case2";
        case CaseTag::case3: return "Case3";
    }
    return "?";
}

CaseLabel classify_case(const Permutation& p) {
    const int n = p.size();
    if (n < 3) throw std::invalid_argument("classify_case: length must be >= 3");
    const auto intervals = stabilized_intervals(p);
    if (!intervals.empty()) {
        return CaseLabel{CaseTag::case1, intervals.front(), 0, Case2Side::low};
    }
    // prefix_max[i] = max of p over positions < i; suffix_min over positions > i.
    std::vector<std::int32_t> prefix_max(static_cast<std::size_t>(n) + 2, 0);
    std::vector<std::int32_t> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
    for (int i = 1; i <= n; ++i) prefix_max[i + 1] = std::max(prefix_max[i], p(i));
    for (int i = n; i >= 1; --i) suffix_min[i] = std::min(suffix_min[i + 1], p(i));
    for (int i = 2; i <= n - 1; ++i) {
        if (prefix_max[i] <= i) return CaseLabel{CaseTag::case2, std::nullopt, i, Case2Side::low};
        if (suffix_min[i + 1] >= i) return CaseLabel{CaseTag::case2, std::nullopt, i, Case2Side::high};
    }
    return CaseLabel{CaseTag::case3, std::nullopt, 0, Case2Side::low};
}

Permutation case2_cut(const Permutation& p, int i) {
    const int n = p.size();
    if (n < 3 || i <= 1 || i >= n) {
        throw std::invalid_argument("case2_cut: index out of range");
    }
    for (int j = 1; j < i; ++j) {
        if (p(j) > i) throw std::invalid_argument("case2_cut: not a low-side witness");
    }
    if (!stabilized_intervals(p).empty()) {
        throw std::invalid_argument("case2_cut: diagram is disconnected");
    }
    int k = 0;
    for (int j = i + 1; j <= n; ++j) {
        if (p(j) <= i) {
            if (k != 0) throw std::invalid_argument("case2_cut: cut line crossed more than twice");
            k = j;
        }
    }
    if (k == 0) throw std::invalid_argument("case2_cut: no strand returns below the cut");

    std::vector<std::int32_t> out(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j < i; ++j) out[j - 1] = p(j);
    out[i - 1] = p(k);
    for (int j = i; j <= n; ++j) {
        if (j == k) continue;
        out[j] = p(j) + 1;
    }
    out[k] = i + 1;
    return Permutation(std::move(out));
}

SmaxColumns smax_columns(const Permutation& p) {
    if (classify_case(p).tag != CaseTag::case3) {
        throw std::invalid_argument("smax_columns: permutation is not in case 3");
    }
    const CycleDiagram d = build_cycle_diagram(p);
    const SeifertDecomposition dec = seifert_circles(d);
    const int smax = dec.smax_per_component.begin()->second;
    SmaxColumns cols;
    for (int cid : dec.circles[smax].crossing_ids) {
        const Crossing& cr = d.crossings[cid];
        (cr.above_diagonal ? cols.i_cols : cols.j_cols).push_back(cr.col);
    }
    std::sort(cols.i_cols.begin(), cols.i_cols.end());
    std::sort(cols.j_cols.begin(), cols.j_cols.end(), std::greater<>());
    const int n = p.size();
    const int i_a = cols.i_cols.empty() ? 1 : cols.i_cols.back();
    const int j_b = cols.j_cols.empty() ? n : cols.j_cols.back();
    if (p(i_a) != n || p(j_b) != 1)
        throw std::logic_error("smax_columns: maximal circle misses the extreme values");
    return cols;
}

namespace {

Permutation bar_from_columns(const Permutation& p, const SmaxColumns& cols) {
    const int n = p.size();
    // Column lists with sentinels: 1 and n close the circle.
    std::vector<int> iseq{1};
    iseq.insert(iseq.end(), cols.i_cols.begin(), cols.i_cols.end());
    iseq.push_back(n);
    std::vector<int> jseq{n};
    jseq.insert(jseq.end(), cols.j_cols.begin(), cols.j_cols.end());
    jseq.push_back(1);

    std::vector<std::int32_t> bar(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) bar[l - 1] = p(l);
    // Each listed column inherits the value from the previous one.
    for (std::size_t k = 1; k < iseq.size(); ++k) bar[iseq[k] - 1] = p(iseq[k - 1]);
    for (std::size_t k = 1; k < jseq.size(); ++k) bar[jseq[k] - 1] = p(jseq[k - 1]);
    return Permutation(std::move(bar));
}

}  // namespace

Permutation case3_bar(const Permutation& p) {
    const SmaxColumns cols = smax_columns(p);
    Permutation bar = bar_from_columns(p, cols);
    if (bar(1) != 1 || bar(p.size()) != p.size())
        throw std::logic_error("case3_bar: end values not fixed");
    return bar;
}

Case3Data case3_reduce(const Permutation& p) {
    const int n = p.size();
    const SmaxColumns cols = smax_columns(p);
    Permutation bar = bar_from_columns(p, cols);

    std::vector<std::int32_t> inner(static_cast<std::size_t>(n) - 2);
    for (int k = 1; k <= n - 2; ++k) inner[k - 1] = bar(k + 1) - 1;

    Case3Data data{cols.i_cols,
                   cols.j_cols,
                   static_cast<int>(cols.i_cols.size()),
                   static_cast<int>(cols.j_cols.size()),
                   0,
                   std::move(bar),
                   Permutation(std::move(inner)),
                   {},
                   {}};
    data.c = data.a + data.b;

    std::vector<int> iseq{1};
    iseq.insert(iseq.end(), cols.i_cols.begin(), cols.i_cols.end());
    iseq.push_back(n);
    std::vector<int> jseq{n};
    jseq.insert(jseq.end(), cols.j_cols.begin(), cols.j_cols.end());
    jseq.push_back(1);

    // A_k: values strictly between consecutive i-columns paired with the
    // value at the lower column.
    for (std::size_t k = 0; k + 1 < iseq.size(); ++k) {
        for (int l = iseq[k] + 1; l < iseq[k + 1]; ++l) {
            data.set_a.emplace_back(p(l), p(iseq[k]));
        }
    }
    // B_k: bar values strictly between consecutive j-columns paired with
    // the value at the higher column; the pair (p(n), n) joins B_0.
    for (std::size_t k = 0; k + 1 < jseq.size(); ++k) {
        const int upper = jseq[k] + (k == 0 ? 1 : 0);  // weak bound at k = 0
        for (int l = jseq[k + 1] + 1; l < upper; ++l) {
            data.set_b.emplace_back(p(jseq[k]), data.bar(l));
        }
    }
    return data;
}

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
inversion_flip_set(const Permutation& p) {
    Case3Data d = case3_reduce(p);
    return {std::move(d.set_a), std::move(d.set_b)};
}

namespace {

std::int64_t replay_x_impl(const Permutation& p, std::vector<nlohmann::json>* trace, int depth) {
    const int n = p.size();
    auto emit = [&](nlohmann::json j) {
        if (!trace) return;
        j["perm"] = p.format();
        j["n"] = n;
        j["depth"] = depth;
        trace->push_back(std::move(j));
    };
    if (n == 1) {
        emit({{"case", "Base"}, {"x", -1}});
        return -1;
    }
    if (n == 2) {
        const std::int64_t x = p(1) == 2 ? -1 : -2;
        emit({{"case", "Base"}, {"x", x}});
        return x;
    }
    const CaseLabel label = classify_case(p);
    switch (label.tag) {
        case CaseTag::case1: {
            // Translate until some prefix is stabilized, then split the
            // direct sum; both moves preserve x.
            Permutation q = p;
            int translations = 0;
            for (;;) {
                const IntervalWitness* prefix = nullptr;
                const auto intervals = stabilized_intervals(q);
                for (const IntervalWitness& w : intervals) {
                    if (w.lo == 1) {
                        prefix = &w;
                        break;
                    }
                }
                if (prefix) {
                    std::vector<std::int32_t> head, tail;
                    for (int i = 1; i <= prefix->hi; ++i) head.push_back(q(i));
                    for (int i = prefix->hi + 1; i <= n; ++i) tail.push_back(q(i) - prefix->hi);
                    const Permutation hp{std::move(head)}, tp{std::move(tail)};
                    emit({{"case", "Case1"},
                          {"translations", translations},
                          {"split", {hp.format(), tp.format()}}});
                    return replay_x_impl(hp, trace, depth + 1) +
                           replay_x_impl(tp, trace, depth + 1);
                }
                q = translate(q);
                ++translations;
                if (translations > n)
                    throw std::logic_error("replay: translation failed to expose a prefix");
            }
        }
        case CaseTag::case2: {
            if (label.side == Case2Side::low) {
                const Permutation cut = case2_cut(p, label.index);
                emit({{"case", "Case2"},
                      {"index", label.index},
                      {"side", "low"},
                      {"cut", cut.format()},
                      {"dx", -1}});
                return replay_x_impl(cut, trace, depth + 1) + 1;
            }
            // High side: rotate the diagram half a turn, which makes the
            // witness a low-side one at the mirrored index.
            const Permutation rc = reverse_complement(p);
            const Permutation cut = case2_cut(rc, n + 1 - label.index);
            emit({{"case", "Case2"},
                  {"index", label.index},
                  {"side", "high"},
                  {"mirrored", rc.format()},
                  {"cut", cut.format()},
                  {"dx", -1}});
            return replay_x_impl(cut, trace, depth + 1) + 1;
        }
        case CaseTag::case3: {
            const Case3Data data = case3_reduce(p);
            emit({{"case", "Case3"},
                  {"i_cols", data.i_cols},
                  {"j_cols", data.j_cols},
                  {"c", data.c},
                  {"bar", data.bar.format()},
                  {"reduced", data.reduced.format()},
                  {"dx", data.c - 1}});
            return replay_x_impl(data.reduced, trace, depth + 1) + (data.c - 1);
        }
    }
    throw std::logic_error("replay: unreachable");
}

}  // namespace

std::int64_t replay_x(const Permutation& p, std::vector<nlohmann::json>* trace) {
    return replay_x_impl(p, trace, 0);
}

}  // namespace permlink
