#include "kernels_detail.hpp"

#include <algorithm>

namespace permlink::kernels {

namespace {

std::int64_t footrule_scalar(const std::int32_t* v, int n) {
    std::int64_t sum = 0;
    for (int k = 0; k < n; ++k) {
        const std::int32_t d = v[k] - (k + 1);
        sum += d < 0 ? -d : d;
    }
    return sum;
}

std::int64_t inversions_scalar(const std::int32_t* v, int n) {
    std::int64_t count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[i] > v[j]) ++count;
    return count;
}

std::int64_t crossings_scalar(const std::int32_t* v, int n) {
    std::int64_t count = 0;
    for (int i = 1; i <= n; ++i) {
        const std::int32_t vi = v[i - 1];
        const std::int32_t lo_i = std::min(i, static_cast<int>(vi));
        const std::int32_t hi_i = std::max(i, static_cast<int>(vi));
        for (int j = 1; j <= n; ++j) {
            const std::int32_t vj = v[j - 1];
            const std::int32_t lo_j = std::min(j, static_cast<int>(vj));
            const std::int32_t hi_j = std::max(j, static_cast<int>(vj));
            if (lo_j < i && i < hi_j && lo_i < vj && vj < hi_i) ++count;
        }
    }
    return count;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{footrule_scalar, inversions_scalar, crossings_scalar, "scalar"};
    return ops;
}

}  // namespace permlink::kernels
