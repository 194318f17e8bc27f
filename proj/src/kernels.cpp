#include "kernels_detail.hpp"

#include <atomic>
#include <stdexcept>

namespace permlink::kernels {

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if PERMLINK_HAVE_AVX2_BUILD
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
    }
    return false;
}

Backend best_supported() {
    return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

const Ops& ops_for(Backend b) {
    if (!backend_supported(b)) {
        throw std::invalid_argument("kernel backend not supported on this CPU: " + backend_name(b));
    }
#if PERMLINK_HAVE_AVX2_BUILD
    if (b == Backend::avx2) return avx2_ops();
#endif
    return scalar_ops();
}

namespace {
std::atomic<Backend> g_backend{best_supported()};
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw std::invalid_argument("kernel backend not supported on this CPU: " + backend_name(b));
    }
    g_backend.store(b, std::memory_order_relaxed);
}

const Ops& active() { return ops_for(active_backend()); }

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

}  // namespace permlink::kernels
