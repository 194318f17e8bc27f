#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "permlink/permutation.hpp"

namespace permtest {

// Independent quadratic oracle for inversion counting.
inline std::int64_t naive_inversions(const permlink::Permutation& p) {
    std::int64_t c = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p(i) > p(j)) ++c;
    return c;
}

inline std::int64_t naive_footrule(const permlink::Permutation& p) {
    std::int64_t s = 0;
    for (int i = 1; i <= p.size(); ++i) s += std::abs(p(i) - i);
    return s;
}

template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<std::int32_t> vals(static_cast<std::size_t>(n));
    std::iota(vals.begin(), vals.end(), 1);
    do {
        fn(permlink::Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
}

inline permlink::Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<std::int32_t> vals(static_cast<std::size_t>(n));
    std::iota(vals.begin(), vals.end(), 1);
    std::shuffle(vals.begin(), vals.end(), rng);
    return permlink::Permutation(std::move(vals));
}

}  // namespace permtest
