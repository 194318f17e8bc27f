#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "permlink/seifert.hpp"
#include "test_helpers.hpp"

using namespace permlink;
using permtest::for_each_perm;

namespace {

SeifertDecomposition decompose(const char* text) {
    return seifert_circles(build_cycle_diagram(Permutation::parse(text)));
}

// Independent staircase oracle: from the lower-left corner the curve must
// climb weakly (staying weakly above the diagonal) to the upper-right
// corner, then descend weakly back, below the diagonal.
bool staircase_ok(const SeifertCircle& c) {
    if (c.degenerate) return c.verts.size() == 1;
    const std::size_t m = c.verts.size();
    if (c.verts.front() != std::make_pair(2 * c.lower_left, 2 * c.lower_left)) return false;
    std::size_t ur = m;
    for (std::size_t k = 0; k < m; ++k) {
        if (c.verts[k] == std::make_pair(2 * c.upper_right, 2 * c.upper_right)) {
            ur = k;
            break;
        }
    }
    if (ur == m) return false;
    for (std::size_t k = 0; k < m; ++k) {
        const auto [x1, y1] = c.verts[k];
        const auto [x2, y2] = c.verts[(k + 1) % m];
        const bool ascending = k < ur;
        if (ascending && (x2 < x1 || y2 < y1 || y1 < x1)) return false;
        if (!ascending && (x2 > x1 || y2 > y1 || y1 > x1)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("circle counts on the worked examples") {
    CHECK(decompose("68517324").circles.size() == 3);

    const SeifertDecomposition id5 = decompose("12345");
    CHECK(id5.circles.size() == 5);
    for (const auto& c : id5.circles) CHECK(c.degenerate);

    const SeifertDecomposition trefoil = decompose("452613");
    REQUIRE(trefoil.circles.size() == 2);
    CHECK(trefoil.parent[1] == 0);  // inner circle nested in the maximal one
    CHECK(trefoil.parent[0] == -1);
}

TEST_CASE("containment roots per planar component") {
    const SeifertDecomposition d321 = decompose("321");
    REQUIRE(d321.circles.size() == 2);
    CHECK(d321.parent == std::vector<int>{-1, -1});  // separate components
    CHECK(d321.smax_per_component.size() == 2);
    CHECK(d321.circles[1].degenerate);

    const SeifertDecomposition id2 = decompose("12");
    CHECK(id2.parent == std::vector<int>{-1, -1});
}

TEST_CASE("euler characteristic of the smoothed surface") {
    CHECK(euler_characteristic(Permutation::parse("452613")) == -1);
    CHECK(euler_characteristic(Permutation::identity(4)) == 4);
    CHECK(euler_characteristic(Permutation::parse("3412")) == 0);
}

TEST_CASE("circle count equals s and corners form a staircase") {
    for (int n = 1; n <= 7; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            const CycleDiagram d = build_cycle_diagram(p);
            const SeifertDecomposition dec = seifert_circles(d);
            REQUIRE(static_cast<int>(dec.circles.size()) == s_statistic(p));
            for (const SeifertCircle& c : dec.circles) {
                REQUIRE(staircase_ok(c));
                if (!c.degenerate) CHECK(c.lower_left < c.upper_right);
            }
        });
    }
}

TEST_CASE("crossing arcs partition over the circles") {
    for (int n = 1; n <= 6; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            const CycleDiagram d = build_cycle_diagram(p);
            const SeifertDecomposition dec = seifert_circles(d);
            REQUIRE(dec.crossing_arc_owners.size() == d.crossings.size());
            const int m = static_cast<int>(dec.circles.size());
            for (const auto& [nw, se] : dec.crossing_arc_owners) {
                CHECK(nw >= 0);
                CHECK(nw < m);
                CHECK(se >= 0);
                CHECK(se < m);
            }
            for (const SeifertCircle& c : dec.circles) {
                std::set<int> expected;
                for (int k = 0; k < static_cast<int>(d.crossings.size()); ++k) {
                    if (dec.crossing_arc_owners[k].first == c.id ||
                        dec.crossing_arc_owners[k].second == c.id)
                        expected.insert(k);
                }
                CHECK(std::set<int>(c.crossing_ids.begin(), c.crossing_ids.end()) == expected);
            }
        });
    }
}

TEST_CASE("x equals minus chi, with the unlink characterization, at desk scale") {
    for (int n = 1; n <= 7; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            const int chi = euler_characteristic(p);
            REQUIRE(chi == -statistic_x(p));
            CHECK(chi <= cycle_count(p));
            CHECK((chi == cycle_count(p)) == is_shallow(p));
        });
    }
}

TEST_CASE("euler characteristic is additive over direct sums") {
    for (int a = 1; a <= 7; ++a) {
        for (int b = 1; a + b <= 8; ++b) {
            for_each_perm(a, [&](const Permutation& s) {
                for_each_perm(b, [&](const Permutation& t) {
                    CHECK(euler_characteristic(direct_sum(s, t)) ==
                          euler_characteristic(s) + euler_characteristic(t));
                });
            });
        }
    }
}

TEST_CASE("euler characteristic is invariant under translation") {
    for (int n = 1; n <= 6; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            const int chi = euler_characteristic(p);
            Permutation q = p;
            for (int k = 0; k < p.size(); ++k) {
                q = translate(q);
                CHECK(euler_characteristic(q) == chi);
            }
        });
    }
}

TEST_CASE("decomposition serializes with corners, parents, and chi") {
    const SeifertDecomposition dec = decompose("452613");
    const nlohmann::json j = to_json(dec);
    CHECK(j["chi"] == -1);
    CHECK(j["circle_count"] == 2);
    CHECK(j["crossing_count"] == 3);
    REQUIRE(j["circles"].size() == 2);
    CHECK(j["circles"][0].contains("lower_left"));
    CHECK(j["circles"][0].contains("upper_right"));
    CHECK(j["circles"][1]["parent"] == 0);
}
