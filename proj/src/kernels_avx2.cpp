// AVX2 variants of the enumeration kernels. This translation unit is
// compiled with -mavx2; the dispatcher only installs these entry points
// after __builtin_cpu_supports("avx2") succeeds.

#include "kernels_detail.hpp"

#if PERMLINK_HAVE_AVX2_BUILD

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <vector>

namespace permlink::kernels {

namespace {

inline std::int64_t hsum_epi64(__m256i acc) {
    const __m128i lo = _mm256_castsi256_si128(acc);
    const __m128i hi = _mm256_extracti128_si256(acc, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

std::int64_t footrule_avx2(const std::int32_t* v, int n) {
    __m256i idx = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 8);
    const __m256i step = _mm256_set1_epi32(8);
    __m256i acc = _mm256_setzero_si256();
    int k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m256i vals = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + k));
        const __m256i d = _mm256_abs_epi32(_mm256_sub_epi32(vals, idx));
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(d)));
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(d, 1)));
        idx = _mm256_add_epi32(idx, step);
    }
    std::int64_t sum = hsum_epi64(acc);
    for (; k < n; ++k) {
        const std::int32_t d = v[k] - (k + 1);
        sum += d < 0 ? -d : d;
    }
    return sum;
}

std::int64_t inversions_avx2(const std::int32_t* v, int n) {
    std::int64_t count = 0;
    for (int i = 0; i < n; ++i) {
        const __m256i vi = _mm256_set1_epi32(v[i]);
        int j = i + 1;
        for (; j + 8 <= n; j += 8) {
            const __m256i vj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
            const __m256i gt = _mm256_cmpgt_epi32(vi, vj);
            count += std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(gt))));
        }
        for (; j < n; ++j)
            if (v[i] > v[j]) ++count;
    }
    return count;
}

std::int64_t crossings_avx2(const std::int32_t* v, int n) {
    // Strict-interval tests over all (vertical, horizontal) pairs; the
    // per-index interval bounds are precomputed once.
    constexpr int kStack = 256;
    std::int32_t lo_buf[kStack], hi_buf[kStack];
    std::vector<std::int32_t> lo_heap, hi_heap;
    std::int32_t *lo = lo_buf, *hi = hi_buf;
    if (n > kStack) {
        lo_heap.resize(static_cast<std::size_t>(n));
        hi_heap.resize(static_cast<std::size_t>(n));
        lo = lo_heap.data();
        hi = hi_heap.data();
    }
    for (int k = 0; k < n; ++k) {
        lo[k] = std::min(k + 1, static_cast<int>(v[k]));
        hi[k] = std::max(k + 1, static_cast<int>(v[k]));
    }
    std::int64_t count = 0;
    for (int i = 1; i <= n; ++i) {
        const __m256i iv = _mm256_set1_epi32(i);
        const __m256i lo_i = _mm256_set1_epi32(lo[i - 1]);
        const __m256i hi_i = _mm256_set1_epi32(hi[i - 1]);
        int j = 0;
        for (; j + 8 <= n; j += 8) {
            const __m256i vj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
            const __m256i lo_j = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + j));
            const __m256i hi_j = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + j));
            const __m256i m = _mm256_and_si256(
                _mm256_and_si256(_mm256_cmpgt_epi32(iv, lo_j), _mm256_cmpgt_epi32(hi_j, iv)),
                _mm256_and_si256(_mm256_cmpgt_epi32(vj, lo_i), _mm256_cmpgt_epi32(hi_i, vj)));
            count += std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m))));
        }
        for (; j < n; ++j) {
            if (lo[j] < i && i < hi[j] && lo[i - 1] < v[j] && v[j] < hi[i - 1]) ++count;
        }
    }
    return count;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{footrule_avx2, inversions_avx2, crossings_avx2, "avx2"};
    return ops;
}

}  // namespace permlink::kernels

#endif  // PERMLINK_HAVE_AVX2_BUILD
