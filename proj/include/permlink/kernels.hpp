#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace permlink::kernels {

// Inner loops of the enumeration core. Each kernel exists as a scalar
// reference implementation and, on x86-64, an AVX2 variant. The active
// variant is selected at runtime from CPU capabilities; the scalar and
// vector paths are equivalence-tested against each other.
//
// All kernels take one-line notation: v[k] is the value at 1-based
// position k+1, and v must be a bijection on {1..n}.

enum class Backend { scalar, avx2 };

struct Ops {
    std::int64_t (*footrule)(const std::int32_t* v, int n);
    std::int64_t (*inversions)(const std::int32_t* v, int n);
    std::int64_t (*crossings)(const std::int32_t* v, int n);
    const char* name;
};

const Ops& ops_for(Backend b);
bool backend_supported(Backend b);
Backend best_supported();

Backend active_backend();
/// Throws std::invalid_argument if the backend is not supported here.
void set_backend(Backend b);

const Ops& active();

/// Sum of |v[k] - position(k)|.
inline std::int64_t footrule(std::span<const std::int32_t> v) {
    return active().footrule(v.data(), static_cast<int>(v.size()));
}

/// Pairwise inversion count (quadratic reference route).
inline std::int64_t inversions(std::span<const std::int32_t> v) {
    return active().inversions(v.data(), static_cast<int>(v.size()));
}

/// Number of strict-interior crossings of the cycle diagram: pairs (i, j)
/// with min(j,v_j) < i < max(j,v_j) and min(i,v_i) < v_j < max(i,v_i).
inline std::int64_t crossings(std::span<const std::int32_t> v) {
    return active().crossings(v.data(), static_cast<int>(v.size()));
}

std::string backend_name(Backend b);

}  // namespace permlink::kernels
