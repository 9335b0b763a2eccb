#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "splitcycle/margin_graph.hpp"
#include "splitcycle/profile.hpp"

using namespace splitcycle;
using namespace fixtures;

namespace {

// Independent tally: walk every voter's ballot once per pair.
std::int64_t tally_margin(const Profile& p, int x, int y) {
    std::int64_t n = 0;
    for (const auto& bc : p.ballots()) {
        int px = -1, py = -1;
        for (int i = 0; i < static_cast<int>(bc.ranking.size()); ++i) {
            if (bc.ranking[i] == x) px = i;
            if (bc.ranking[i] == y) py = i;
        }
        n += (px < py ? 1 : -1) * bc.count;
    }
    return x == y ? 0 : n;
}

Margins random_valid_graph(std::mt19937& rng, int k, int max_weight) {
    std::uniform_int_distribution<int> coin(0, 1);
    const bool odd = coin(rng);
    Margins::Matrix m = Margins::Matrix::Zero(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::int64_t w;
            if (odd) {
                w = 2 * std::uniform_int_distribution<int>(0, (max_weight - 1) / 2)(rng) + 1;
            } else {
                w = 2 * std::uniform_int_distribution<int>(0, max_weight / 2)(rng);
            }
            if (coin(rng)) w = -w;
            m(i, j) = w;
            m(j, i) = -w;
        }
    return Margins(m);
}

}  // namespace

TEST_CASE("margin counts voters on each side") {
    auto p = make_profile(2, {{2, {0, 1}}, {1, {1, 0}}});
    CHECK(margin(p, 0, 1) == 1);
    CHECK(margin(p, 1, 0) == -1);
    CHECK(margin(p, 0, 0) == 0);
    CHECK_THROWS_AS(margin(p, 0, 7), InputError);
}

TEST_CASE("Florida margins") {
    auto p = florida();
    CHECK(margin(p, 1, 2) == 2'912'790 + 2'912'253 - 97'488);
    auto m = margin_graph(p);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(m.margin(x, y) == -m.margin(y, x));
}

TEST_CASE("margin graph of the three-candidate cycle") {
    auto m = margin_graph(three_cycle());
    CHECK(m.margin(a, c) == 1);
    CHECK(m.margin(b, a) == 3);
    CHECK(m.margin(c, b) == 5);

    auto r = margin_graph(reverse(three_cycle()));
    CHECK(r.margin(c, a) == 1);
    CHECK(r.margin(a, b) == 3);
    CHECK(r.margin(b, c) == 5);

    auto twice = margin_graph(replicate(three_cycle(), 2));
    CHECK(twice.margin(a, c) == tally_margin(replicate(three_cycle(), 2), a, c));
    CHECK(twice.margin(a, c) == 2);
    CHECK(twice.margin(b, a) == 6);
    CHECK(twice.margin(c, b) == 10);
}

TEST_CASE("single candidate profile") {
    auto p = make_profile(1, {{3, {0}}});
    auto m = margin_graph(p);
    CHECK(m.size() == 1);
    CHECK(m(0, 0) == 0);
    CHECK_THROWS_AS(remove_candidate(p, 0), InputError);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(make_profile(3, {{1, {0, 1}}}), InputError);
    CHECK_THROWS_AS(make_profile(3, {{1, {0, 1, 1}}}), InputError);
    CHECK_THROWS_AS(make_profile(2, {{0, {0, 1}}}), InputError);
    CHECK_THROWS_AS(Profile(2, {}), InputError);
    CHECK_THROWS_AS(replicate(three_cycle(), 0), InputError);
    CHECK_THROWS_AS(restrict_to(three_cycle(), {}), InputError);
    CHECK_THROWS_AS(combine(three_cycle(), make_profile(2, {{1, {0, 1}}})), InputError);
}

TEST_CASE("combine adds ballots and margins") {
    auto p = no_show();
    auto q = make_profile(3, {{2, {a, b, c}}});
    auto r = combine(p, q);
    CHECK(r.num_voters() == 11);
    CHECK(r == add_ballot(p, {a, b, c}, 2));
    auto mp = margin_graph(p), mq = margin_graph(q), mr = margin_graph(r);
    CHECK(mr.matrix() == mp.matrix() + mq.matrix());
    CHECK(margin_graph(combine(p, p)).matrix() == 2 * mp.matrix());
    CHECK(replicate(p, 1) == p);
    CHECK(margin_graph(replicate(p, 3)).matrix() == 3 * mp.matrix());
}

TEST_CASE("parity of margins follows voter count") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 2 + trial % 5;
        std::vector<BallotCount> ballots;
        const int n = 1 + trial;
        for (int v = 0; v < n; ++v) {
            Ballot bl(k);
            std::iota(bl.begin(), bl.end(), 0);
            std::shuffle(bl.begin(), bl.end(), rng);
            ballots.push_back({bl, 1});
        }
        Profile p(k, ballots);
        auto m = margin_graph(p);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i != j) CHECK(std::abs(m(i, j)) % 2 == n % 2);
                CHECK(m(i, j) == tally_margin(p, i, j));
            }
    }
}

TEST_CASE("removing a candidate keeps the other margins") {
    auto p = amalgam_q();
    auto q = remove_candidate(p, e);
    CHECK(q.candidates() == std::vector<int>{a, b, c, d, f});
    for (int x : q.candidates())
        for (int y : q.candidates()) CHECK(margin(q, x, y) == margin(p, x, y));
}

TEST_CASE("Florida without Nader makes Gore the Condorcet winner") {
    auto p = remove_candidate(florida(), 2);
    CHECK(margin(p, 1, 0) > 0);
    CHECK(p.name(1) == "Gore");
}

TEST_CASE("Burlington without r is a majority contest won by d") {
    auto p = remove_candidate(burlington(), 0);
    CHECK(margin(p, 1, 2) > 0);
}

TEST_CASE("restriction") {
    auto q = amalgam_q();
    CHECK(restrict_to(q, q.candidates()) == q);
    CHECK(restrict_to(q, {a, b, c, d}) == amalgam_p());
    CHECK(restrict_to(q, {b, d, e, f}) == amalgam_p_prime());
    CHECK(restrict_to(q, {a, b, c, d}) == remove_candidate(remove_candidate(q, e), f));
}

TEST_CASE("reverse") {
    auto p = amalgam_q();
    CHECK(reverse(reverse(p)) == p);
    auto m = margin_graph(p), r = margin_graph(reverse(p));
    CHECK(r.matrix() == m.matrix().transpose());
}

TEST_CASE("add and remove a single ballot") {
    auto p = no_show();
    auto q = add_ballot(p, {a, b, c});
    CHECK(q.num_voters() == 10);
    CHECK(remove_ballot(q, {a, b, c}) == p);
    CHECK_THROWS_AS(remove_ballot(p, {b, a, c}), InputError);
}

TEST_CASE("margin graph invariants are enforced") {
    Margins::Matrix m(2, 2);
    m << 0, 1, 2, 0;
    CHECK_THROWS_AS(Margins{m}, InputError);
    Margins::Matrix mixed = Margins::Matrix::Zero(3, 3);
    mixed(0, 1) = 1;
    mixed(1, 0) = -1;
    CHECK_THROWS_AS(Margins{mixed}, InputError);
    mixed(0, 2) = 3;
    mixed(2, 0) = -3;
    mixed(1, 2) = 2;
    mixed(2, 1) = -2;
    CHECK_THROWS_AS(Margins{mixed}, InputError);
}

TEST_CASE("Debord realization") {
    SUBCASE("all zero") {
        auto p = realize_debord(Margins(Margins::Matrix::Zero(3, 3)));
        CHECK(p.num_voters() == 2);
        CHECK(p.ballots().size() == 2);
        CHECK(margin_graph(p).matrix().isZero());
    }
    SUBCASE("single even edge") {
        auto m = graph({a, b, c}, {{a, b, 2}});
        auto p = realize_debord(m);
        CHECK(p == Profile({a, b, c}, {{{a, b, c}, 1}, {{c, a, b}, 1}}));
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) CHECK(tally_margin(p, x, y) == m.margin(x, y));
    }
    SUBCASE("odd three cycle") {
        auto m = margin_graph(three_cycle());
        auto p = realize_debord(m);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) CHECK(tally_margin(p, x, y) == m.margin(x, y));
    }
    SUBCASE("non-contiguous ids") {
        auto m = margin_graph(schwartz_example());
        CHECK(m.ids() == std::vector<int>{a, d, e, f});
        CHECK(m.margin(a, f) == 2);
        CHECK(m.margin(d, f) == 2);
    }
    SUBCASE("random graphs round trip") {
        std::mt19937 rng(11);
        for (int t = 0; t < 1000; ++t) {
            const int k = 1 + t % 8;
            auto m = random_valid_graph(rng, k, 20);
            CHECK(margin_graph(realize_debord(m)) == m);
        }
    }
}

TEST_CASE("qualitative margin graph") {
    auto q = qualitative(margin_graph(three_cycle()));
    REQUIRE(q.edges.size() == 3);
    CHECK(q.edges[0] == QualitativeMarginGraph::Edge{a, c, 0});
    CHECK(q.edges[1] == QualitativeMarginGraph::Edge{b, a, 1});
    CHECK(q.edges[2] == QualitativeMarginGraph::Edge{c, b, 2});
    CHECK(q.uniquely_weighted());
    CHECK(qualitative(Margins(Margins::Matrix::Zero(3, 3))).edges.empty());

    auto tied = qualitative(margin_graph(six_candidate()));
    CHECK_FALSE(tied.uniquely_weighted());
    // order-preserving re-weighting realizes a valid graph
    auto back = qualitative(tied.to_margins());
    CHECK(back.edges == tied.edges);
}
