#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "permlink/constructions.hpp"
#include "permlink/diagram.hpp"
#include "permlink/enumeration.hpp"
#include "permlink/seifert.hpp"
#include "test_helpers.hpp"

using namespace permlink;
using permtest::for_each_perm;

TEST_CASE("case classification with witnesses") {
    const CaseLabel c1 = classify_case(Permutation::parse("321"));
    CHECK(c1.tag == CaseTag::case1);
    REQUIRE(c1.interval.has_value());
    CHECK(*c1.interval == IntervalWitness{2, 2});

    const CaseLabel c2 = classify_case(Permutation::parse("541298637"));
    CHECK(c2.tag == CaseTag::case2);
    CHECK(c2.index == 5);
    CHECK(c2.side == Case2Side::low);

    CHECK(classify_case(Permutation::parse("571928436")).tag == CaseTag::case3);

    CHECK_THROWS_AS(classify_case(Permutation::parse("21")), std::invalid_argument);
}

TEST_CASE("case-2 cut reproduces the worked example") {
    const Permutation p = Permutation::parse("541298637");
    const Permutation cut = case2_cut(p, 5);
    CHECK(cut == Permutation::parse("5,4,1,2,3,10,9,7,6,8"));
    CHECK(footrule_D(cut) == footrule_D(p));
    CHECK(inversions_I(cut) == inversions_I(p));
    CHECK(statistic_x(cut) == statistic_x(p) - 1);
    CHECK(is_split(cut));
}

TEST_CASE("case-2 cut rejects invalid witnesses") {
    const Permutation p = Permutation::parse("541298637");
    CHECK_THROWS_AS(case2_cut(p, 2), std::invalid_argument);   // not a witness
    CHECK_THROWS_AS(case2_cut(p, 1), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(case2_cut(p, 9), std::invalid_argument);
    CHECK_THROWS_AS(case2_cut(Permutation::parse("321"), 2), std::invalid_argument);  // split
}

TEST_CASE("maximal-circle columns on the worked example") {
    const SmaxColumns cols = smax_columns(Permutation::parse("571928436"));
    CHECK(cols.i_cols == std::vector<int>{2, 4});
    CHECK(cols.j_cols == std::vector<int>{8, 5, 3});
    const Permutation p = Permutation::parse("571928436");
    CHECK(p(cols.i_cols.back()) == 9);
    CHECK(p(cols.j_cols.back()) == 1);

    CHECK_THROWS_AS(smax_columns(Permutation::parse("321")), std::invalid_argument);
    CHECK_THROWS_AS(smax_columns(Permutation::parse("541298637")), std::invalid_argument);
}

TEST_CASE("bar permutation and its displacement identities") {
    const Permutation p = Permutation::parse("571928436");
    const Permutation bar = case3_bar(p);
    CHECK(bar == Permutation::parse("152738469"));
    // c = 5 on the maximal circle: I drops by 2n-3-c, D by 2(n-1).
    CHECK(inversions_I(p) - inversions_I(bar) == 2 * 9 - 3 - 5);
    CHECK(footrule_D(p) - footrule_D(bar) == 2 * (9 - 1));
}

TEST_CASE("case-3 reduction data") {
    const Permutation p = Permutation::parse("571928436");
    const Case3Data data = case3_reduce(p);
    CHECK(data.reduced == Permutation::parse("4162735"));
    CHECK(data.c == 5);
    CHECK(data.a == 2);
    CHECK(data.b == 3);
    CHECK(statistic_x(p) - statistic_x(data.reduced) == data.c - 1);
    CHECK(data.bar == direct_sum(Permutation::identity(1),
                                 direct_sum(data.reduced, Permutation::identity(1))));
    CHECK(data.set_a.size() + data.set_b.size() ==
          static_cast<std::size_t>(inversions_I(p) - inversions_I(data.bar)));
}

TEST_CASE("inversion flip sets on the worked example") {
    const Permutation p = Permutation::parse("571928436");
    const auto [A, B] = inversion_flip_set(p);
    CHECK(A.size() == 5);
    CHECK(B.size() == 5);

    std::set<std::pair<int, int>> a_set(A.begin(), A.end()), b_set(B.begin(), B.end());
    REQUIRE(a_set.size() == A.size());
    REQUIRE(b_set.size() == B.size());
    for (const auto& pr : a_set) CHECK_FALSE(b_set.contains(pr));

    // The exceptional pair (p(n), n) lands in B.
    CHECK(b_set.contains({6, 9}));
    // i_0 = 1 and i_1 = 2 are adjacent, so A_0 contributes nothing: no pair
    // has second coordinate p(1) = 5.
    for (const auto& [u, v] : a_set) CHECK(v != 5);

    const Permutation pinv = p.inverse();
    for (const auto& [u, v] : a_set) {
        CHECK(u < v);
        CHECK(pinv(v) < pinv(u));
    }
    for (const auto& [u, v] : b_set) {
        CHECK(u < v);
        CHECK(pinv(v) < pinv(u));
    }
}

TEST_CASE("replay recomputes x on the examples") {
    CHECK(replay_x(Permutation::parse("571928436")) == 5);
    CHECK(replay_x(Permutation::parse("452613")) == 1);
    CHECK(replay_x(Permutation::parse("321")) == -2);
    CHECK(replay_x(Permutation::identity(1)) == -1);
    CHECK(replay_x(Permutation::parse("21")) == -1);
    CHECK(replay_x(Permutation::parse("12")) == -2);
}

TEST_CASE("replay emits a preorder trace with per-step identities") {
    std::vector<nlohmann::json> steps;
    replay_x(Permutation::parse("571928436"), &steps);
    REQUIRE_FALSE(steps.empty());
    CHECK(steps.front()["case"] == "Case3");
    CHECK(steps.front()["c"] == 5);
    CHECK(steps.front()["dx"] == 4);
    CHECK(steps.front()["depth"] == 0);
    for (const auto& s : steps) {
        CHECK(s.contains("perm"));
        CHECK(s.contains("n"));
        CHECK(s.contains("case"));
    }
}

TEST_CASE("replay equals x exhaustively at desk scale") {
    for (int n = 1; n <= 6; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            REQUIRE(replay_x(p) == statistic_x(p));
        });
    }
}

TEST_CASE("case identities hold exhaustively through the harness") {
    const VerifyReport report = verify_all(7, {"case_identities", "replay"}, 1);
    for (const CheckReport& c : report.checks) {
        INFO(c.name);
        CHECK_FALSE(c.counterexample.has_value());
    }
    CHECK(report.ok());
}
