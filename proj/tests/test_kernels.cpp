#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permlink/diagram.hpp"
#include "permlink/kernels.hpp"
#include "test_helpers.hpp"

using namespace permlink;
using permtest::for_each_perm;

namespace {

struct BackendGuard {
    kernels::Backend saved = kernels::active_backend();
    ~BackendGuard() { kernels::set_backend(saved); }
};

}  // namespace

TEST_CASE("backend dispatch") {
    BackendGuard guard;
    CHECK(kernels::backend_supported(kernels::Backend::scalar));
    kernels::set_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    CHECK(kernels::active().name == std::string("scalar"));
    if (kernels::backend_supported(kernels::Backend::avx2)) {
        kernels::set_backend(kernels::Backend::avx2);
        CHECK(kernels::active().name == std::string("avx2"));
    } else {
        CHECK_THROWS(kernels::set_backend(kernels::Backend::avx2));
        CHECK(kernels::best_supported() == kernels::Backend::scalar);
    }
}

TEST_CASE("scalar kernels match the independent oracles") {
    for (int n = 1; n <= 7; ++n) {
        const auto& ops = kernels::ops_for(kernels::Backend::scalar);
        for_each_perm(n, [&](const Permutation& p) {
            const auto v = p.values();
            CHECK(ops.footrule(v.data(), n) == permtest::naive_footrule(p));
            CHECK(ops.inversions(v.data(), n) == permtest::naive_inversions(p));
            CHECK(ops.crossings(v.data(), n) ==
                  static_cast<std::int64_t>(build_cycle_diagram(p).crossings.size()));
        });
    }
}

TEST_CASE("vector variants agree with the scalar reference") {
    if (!kernels::backend_supported(kernels::Backend::avx2)) {
        MESSAGE("avx2 not supported on this machine; scalar-only");
        return;
    }
    const auto& scalar = kernels::ops_for(kernels::Backend::scalar);
    const auto& avx2 = kernels::ops_for(kernels::Backend::avx2);
    auto agree = [&](const Permutation& p) {
        const auto v = p.values();
        const int n = p.size();
        REQUIRE(avx2.footrule(v.data(), n) == scalar.footrule(v.data(), n));
        REQUIRE(avx2.inversions(v.data(), n) == scalar.inversions(v.data(), n));
        REQUIRE(avx2.crossings(v.data(), n) == scalar.crossings(v.data(), n));
    };
    for (int n = 1; n <= 8; ++n) for_each_perm(n, agree);
    std::mt19937 rng(123457);
    for (int n : {9, 12, 15, 16, 17, 31, 32, 33, 63, 64, 65, 200, 257}) {
        for (int trial = 0; trial < 50; ++trial) agree(permtest::random_perm(n, rng));
    }
}

TEST_CASE("span entry points use the active backend") {
    BackendGuard guard;
    const Permutation p = Permutation::parse("452613");
    for (const auto backend : {kernels::Backend::scalar, kernels::Backend::avx2}) {
        if (!kernels::backend_supported(backend)) continue;
        kernels::set_backend(backend);
        CHECK(kernels::footrule(p.values()) == 16);
        CHECK(kernels::inversions(p.values()) == 9);
        CHECK(kernels::crossings(p.values()) == 3);
    }
}
