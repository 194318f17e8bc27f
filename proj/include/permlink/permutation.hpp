#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlink {

/// A permutation of {1..n} in one-line notation. Immutable value type.
/// Positions and values are 1-based throughout the public interface.
class Permutation {
public:
    /// Takes ownership of a one-line notation vector; throws
    /// std::invalid_argument unless it is a bijection on {1..n}, n >= 1.
    explicit Permutation(std::vector<std::int32_t> one_line);

    static Permutation identity(int n);

    /// Parses comma- or whitespace-separated integers, or (when no
    /// separator is present) an undelimited digit string such as "452613".
    /// Errors report the 1-based position of the first offending token.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(vals_.size()); }

    /// Value at position i, 1-based.
    std::int32_t operator()(int i) const { return vals_[i - 1]; }

    std::span<const std::int32_t> values() const { return vals_; }

    Permutation inverse() const;

    /// (a.compose(b))(i) = a(b(i)).
    Permutation compose(const Permutation& other) const;

    bool is_identity() const;

    /// Canonical comma-separated one-line notation, e.g. "4,5,2,6,1,3".
    std::string format() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::int32_t> vals_;
};

/// A proper subinterval [lo, hi] of [1, n] mapped into itself.
/// Singletons are allowed; (1, n) is excluded.
struct IntervalWitness {
    int lo = 0;
    int hi = 0;
    bool operator==(const IntervalWitness&) const = default;
};

// Disarray statistics.

/// Spearman's footrule: sum |p(i) - i|. Always even.
std::int64_t footrule_D(const Permutation& p);

/// Inversion count via an order-statistic accumulator, O(n log n).
/// Agrees with the naive double loop (kept as a test oracle).
std::int64_t inversions_I(const Permutation& p);

/// Number of cycles, fixed points included.
int cycle_count(const Permutation& p);

/// Cayley distance: n - cycle_count.
std::int64_t transposition_distance_T(const Permutation& p);

/// The discrepancy x = D - I - n.
std::int64_t statistic_x(const Permutation& p);

// Structural operations.

/// Block concatenation: first block s, second block t shifted by |s|.
Permutation direct_sum(const Permutation& s, const Permutation& t);

/// Conjugation by the cyclic shift 23...n1: translates the grid diagram
/// one column right and one row up (torus move). Preserves x.
Permutation translate(const Permutation& p);

/// k -> n+1 - p(n+1-k); rotates the cycle diagram 180 degrees.
/// Preserves D, I, cyc, xing and s.
Permutation reverse_complement(const Permutation& p);

/// Cycles as index lists, each starting from its smallest element and
/// following p; cycles ordered by smallest element.
std::vector<std::vector<int>> cycles_of(const Permutation& p);

// Order-theoretic predicates.

/// True iff some i < j < k has p(i) > p(j) > p(k).
bool contains_321(const Permutation& p);

/// All proper subintervals stabilized by p, sorted by (lo, hi).
std::vector<IntervalWitness> stabilized_intervals(const Permutation& p);

/// Stabilized-interval-free: no proper subinterval (singletons included)
/// is mapped into itself.
bool is_sif(const Permutation& p);

/// Equality case of the first Diaconis-Graham inequality: x + cyc = 0.
bool is_shallow(const Permutation& p);

}  // namespace permlink
