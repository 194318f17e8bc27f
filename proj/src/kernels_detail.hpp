#pragma once

#include "permlink/kernels.hpp"

namespace permlink::kernels {

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
#define PERMLINK_HAVE_AVX2_BUILD 1
const Ops& avx2_ops();  // defined in kernels_avx2.cpp, gated by cpuid at runtime
#else
#define PERMLINK_HAVE_AVX2_BUILD 0
#endif

}  // namespace permlink::kernels
