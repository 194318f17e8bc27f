#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permlink/permutation.hpp"

namespace permlink {

enum class CaseTag { case1, case2, case3 };

enum class Case2Side { low, high };

/// Classification witness for the length-reduction step. Case 1 carries a
/// stabilized interval, case 2 an index with its side: low means every
/// earlier position holds a value <= i, high means every later position
/// holds a value >= i.
struct CaseLabel {
    CaseTag tag;
    std::optional<IntervalWitness> interval;  // case 1
    int index = 0;                            // case 2
    Case2Side side = Case2Side::low;          // case 2
};

const char* case_name(CaseTag t);

/// Classifies a permutation of length >= 3 into exactly one case:
///   1. the diagram is planar-disconnected (witness: first stabilized
///      interval in (lo, hi) order);
///   2. connected with a cut index (smallest qualifying i, low side
///      preferred on ties);
///   3. connected with no such index.
/// Throws std::invalid_argument for n < 3.
CaseLabel classify_case(const Permutation& p);

/// Cuts the strands along y = i + 1/2 for a low-side case-2 witness and
/// reattaches the loose ends, producing a permutation of length n+1 with
/// the same D and I (so x drops by one) and a disconnected, fixed-point-
/// free diagram. High-side witnesses reduce to this via
/// reverse_complement. Throws std::invalid_argument unless the diagram is
/// connected and i is a valid low-side index.
Permutation case2_cut(const Permutation& p, int i);

/// Columns where the maximal Seifert circle has a crossing, above the
/// diagonal in increasing order and below in decreasing order. The
/// sentinel columns 1 and n are not included. Case 3 only.
struct SmaxColumns {
    std::vector<int> i_cols;
    std::vector<int> j_cols;
};
SmaxColumns smax_columns(const Permutation& p);

/// The intermediate permutation that detaches the maximal Seifert circle:
/// values are pulled one step along the circle's columns, fixing 1 and n.
/// Case 3 only.
Permutation case3_bar(const Permutation& p);

/// Full data of the case-3 reduction.
struct Case3Data {
    std::vector<int> i_cols, j_cols;
    int a = 0, b = 0, c = 0;  // crossing counts on the maximal circle
    Permutation bar;          // fixes 1 and n
    Permutation reduced;      // length n-2, bar with ends stripped
    /// Value pairs (u, v), u < v, whose relative order differs between
    /// the permutation and bar; all are inversions, and the two sets are
    /// disjoint with |A| + |B| = I(p) - I(bar).
    std::vector<std::pair<int, int>> set_a, set_b;
};
Case3Data case3_reduce(const Permutation& p);

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
inversion_flip_set(const Permutation& p);

/// Recomputes x by replaying the case reductions down to the length <= 2
/// base cases, accumulating +1 per cut and c-1 per maximal-circle removal.
/// Never consults the circle-count formula. If trace is non-null, appends
/// one JSON object per step (preorder, with depth).
std::int64_t replay_x(const Permutation& p, std::vector<nlohmann::json>* trace = nullptr);

}  // namespace permlink
