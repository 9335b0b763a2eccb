#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "splitcycle/generators.hpp"
#include "splitcycle/methods.hpp"

using namespace splitcycle;
using namespace fixtures;

namespace {

using W = std::vector<int>;

bool subset(const W& a, const W& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Mixed corpus: all three ballot models, small k and n.
std::vector<Profile> corpus(int count, std::uint64_t seed, int kmax = 6) {
    std::vector<Profile> out;
    for (int t = 0; t < count; ++t) {
        GeneratorConfig cfg;
        cfg.model = static_cast<Model>(t % 3);
        cfg.candidates = 3 + t % (kmax - 2);
        cfg.voters = 5 + (t * 7) % 51;
        cfg.dispersion = 0.8;
        cfg.seed = seed;
        out.push_back(generate(cfg, t));
    }
    return out;
}

}  // namespace

TEST_CASE("Split Cycle on the three-candidate cycle") {
    auto m = margin_graph(three_cycle());
    auto d = sc_defeats(m);
    CHECK(d.edges() == std::vector<std::pair<int, int>>{{b, a}, {c, b}});
    CHECK(sc_defeats(m, ScAlgorithm::direct) == d);
    CHECK(split_cycle(m) == W{c});
}

TEST_CASE("Split Cycle worked examples") {
    CHECK(split_cycle(margin_graph(four_candidate())) == W{a, b, c});
    CHECK(split_cycle(margin_graph(six_candidate())) == W{a, b, c, d, e});
    auto m = margin_graph(overlapping_cycles());
    CHECK(sc_defeats(m).edges() == std::vector<std::pair<int, int>>{{b, a}, {c, b}, {d, c}, {d, e}});
    CHECK(split_cycle(m) == W{d});
}

TEST_CASE("acyclic graphs keep every majority edge as a defeat") {
    auto m = graph({a, b, c, d}, {{a, b, 2}, {a, c, 4}, {b, c, 2}, {c, d, 6}, {a, d, 2}});
    auto defeats = sc_defeats(m).edges();
    CHECK(defeats.size() == 5);
}

TEST_CASE("direct Split Cycle respects the cycle cap") {
    auto p = impartial_culture(9, 11, 1);
    CHECK_THROWS_AS(sc_defeats(margin_graph(p), ScAlgorithm::direct), CapabilityError);
    CHECK_NOTHROW(sc_defeats(margin_graph(p), ScAlgorithm::direct, 9));
}

TEST_CASE("strength matrix") {
    auto two = graph({a, b}, {{a, b, 4}});
    auto s = strength_matrix(two);
    CHECK(s(0, 1) == 4);
    CHECK(s(1, 0) == 0);

    auto sm = margin_graph(schwartz_example());
    auto ss = strength_matrix(sm);
    CHECK(ss(sm.index_of(a), sm.index_of(d)) == 2);
    CHECK(ss(sm.index_of(a), sm.index_of(d)) == oracle::strength(sm, sm.index_of(a), sm.index_of(d)));

    auto tm = margin_graph(three_cycle());
    auto ts = strength_matrix(tm);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ts(i, j) == oracle::strength(tm, i, j));
}

TEST_CASE("Beat Path") {
    auto p = beat_path_spoiler();
    CHECK(beat_path(margin_graph(remove_candidate(p, e))) == W{a, b, c});
    CHECK(beat_path(margin_graph(p)) == W{d});
    CHECK(beat_path(margin_graph(minimax_instability())) == W{d});
    CHECK(beat_path(margin_graph(remove_candidate(burlington(), 0))) == W{1});
}

TEST_CASE("Ranked Pairs") {
    auto p = ranked_pairs_spoiler();
    CHECK(ranked_pairs(margin_graph(remove_candidate(p, e))) == W{a});
    CHECK(ranked_pairs(margin_graph(p)) == W{c});
    auto cw = graph({a, b, c}, {{a, b, 3}, {a, c, 5}, {c, b, 1}});
    CHECK(ranked_pairs(cw) == W{a});
    // all ties: every candidate tops some ranking
    CHECK(ranked_pairs(Margins(Margins::Matrix::Zero(4, 4))) == W{0, 1, 2, 3});
}

TEST_CASE("Ranked Pairs budget reports partial winners") {
    auto m = Margins(Margins::Matrix::Zero(7, 7));
    try {
        ranked_pairs(m, 3);
        FAIL("expected the budget to be exceeded");
    } catch (const CapabilityError& err) {
        CHECK(subset(err.partial(), W{0, 1, 2, 3, 4, 5, 6}));
    }
}

TEST_CASE("Minimax") {
    auto p = minimax_instability();
    CHECK(minimax(margin_graph(p)) == W{d});
    CHECK(minimax(margin_graph(remove_candidate(p, d))) == W{a, b, c});
    CHECK(split_cycle(margin_graph(p)) == W{a, b, d});
}

TEST_CASE("Copeland") {
    CHECK(copeland(margin_graph(four_candidate())) == W{a, b, c});
    CHECK(copeland(Margins(Margins::Matrix::Zero(3, 3))) == W{0, 1, 2});
}

TEST_CASE("GETCHA and GOCHA") {
    CHECK(getcha(margin_graph(getcha_pareto())) == W{0, 1, 2, 3});
    CHECK(getcha(margin_graph(three_cycle())) == W{a, b, c});
    auto sm = margin_graph(schwartz_example());
    CHECK(split_cycle(sm) == W{a, d, e});
    auto g = gocha(sm);
    CHECK_FALSE(std::binary_search(g.begin(), g.end(), d));
    CHECK(gocha(margin_graph(gocha_involvement_base())) == W{0, 1, 2});
    CHECK(gocha(margin_graph(gocha_involvement())) == W{1});
}

TEST_CASE("Uncovered sets") {
    auto p = uncovered_clones();
    CHECK(uncovered(margin_graph(p), UncoveredVariant::fishburn) == W{b});
    CHECK(uncovered(margin_graph(remove_candidate(p, f)), UncoveredVariant::fishburn) == W{b, e});
    CHECK(uncovered(margin_graph(remove_candidate(p, b)), UncoveredVariant::fishburn) == W{d, e, f});
}

TEST_CASE("Ranked Choice") {
    CHECK(ranked_choice(burlington()) == W{2});
    CHECK(condorcet_winner(margin_graph(burlington())) == 1);
    CHECK(ranked_choice(no_show()) == W{b});
    CHECK(ranked_choice(add_ballot(no_show(), {a, b, c}, 2)) == W{c});
    CHECK(ranked_choice(make_profile(3, {{5, {2, 0, 1}}})) == W{2});
    // everyone tied on first places
    CHECK(ranked_choice(make_profile(3, {{1, {0, 1, 2}}, {1, {1, 2, 0}}, {1, {2, 0, 1}}})) == W{0, 1, 2});
}

TEST_CASE("Plurality") {
    CHECK(plurality(florida()) == W{0});
    CHECK(plurality(make_profile(3, {{1, {0, 1, 2}}, {1, {1, 2, 0}}, {1, {2, 0, 1}}})) == W{0, 1, 2});
    CHECK(plurality(make_profile(3, {{1, {1, 2, 0}}})) == W{1});
}

TEST_CASE("Condorcet winner and loser") {
    CHECK_FALSE(condorcet_winner(margin_graph(three_cycle())));
    CHECK(condorcet_loser(margin_graph(four_candidate())) == d);
    CHECK_FALSE(condorcet_loser(margin_graph(make_profile(1, {{1, {0}}}))));
}

TEST_CASE("single candidate: every method returns it") {
    auto p = make_profile(1, {{2, {0}}});
    for (Method m : all_methods()) CHECK(winners(m, p) == W{0});
}

TEST_CASE("method names round trip") {
    for (Method m : all_methods()) CHECK(parse_method(method_name(m)) == m);
    CHECK(parse_method("uncovered") == Method::uncovered_gillies);
    CHECK_FALSE(parse_method("borda"));
    CHECK_THROWS_AS(winners(Method::plurality, margin_graph(three_cycle())), CapabilityError);
}

TEST_CASE("methods agree with brute-force oracles") {
    for (const auto& p : corpus(300, 5)) {
        auto m = margin_graph(p);
        CHECK(split_cycle(m) == oracle::split_cycle(m));
        CHECK(sc_defeats(m, ScAlgorithm::direct) == sc_defeats(m));
        CHECK(ranked_pairs(m) == oracle::ranked_pairs(m));
        CHECK(getcha(m) == oracle::smith_set(m));
        CHECK(gocha(m) == oracle::schwartz_set(m));
        CHECK(uncovered(m, UncoveredVariant::gillies) == oracle::gillies_two_step(m));
        auto s = strength_matrix(m);
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) CHECK(s(i, j) == oracle::strength(m, i, j));
    }
}

TEST_CASE("structural properties on random profiles") {
    for (const auto& p : corpus(400, 9, 7)) {
        auto m = margin_graph(p);
        auto sc = split_cycle(m);
        auto d = sc_defeats(m);
        REQUIRE_FALSE(sc.empty());
        CHECK(d.acyclic());
        for (auto [x, y] : d.edges()) CHECK(m.margin(x, y) > 0);
        CHECK(subset(beat_path(m), sc));
        CHECK(subset(ranked_pairs(m), sc));
        CHECK(subset(sc, getcha(m)));
        CHECK(subset(gocha(m), getcha(m)));
        CHECK(subset(uncovered(m, UncoveredVariant::fishburn), uncovered(m, UncoveredVariant::gillies)));
        if (sc.size() == 1) {
            CHECK(beat_path(m) == sc);
            CHECK(ranked_pairs(m) == sc);
        }
        // every loser is reachable from a winner along defeats
        std::vector<char> reach(m.size(), 0);
        for (int w : sc) reach[m.index_of(w)] = 1;
        for (int round = 0; round < m.size(); ++round)
            for (auto [x, y] : d.edges())
                if (reach[m.index_of(x)]) reach[m.index_of(y)] = 1;
        CHECK(std::all_of(reach.begin(), reach.end(), [](char r) { return r; }));

        if (auto cw = condorcet_winner(m)) {
            for (Method meth : all_methods())
                if (margin_based(meth)) CHECK(winners(meth, m) == W{*cw});
        }
        if (auto cl = condorcet_loser(m)) {
            for (Method meth : all_methods())
                if (margin_based(meth) && meth != Method::minimax) {
                    auto w = winners(meth, m);
                    CHECK_FALSE(std::binary_search(w.begin(), w.end(), *cl));
                }
        }
        // methods depend on the margin graph alone
        auto twin = realize_debord(m);
        for (Method meth : all_methods())
            if (margin_based(meth)) CHECK(winners(meth, twin) == winners(meth, p));
    }
}

TEST_CASE("odd voter counts make the uncovered variants agree") {
    for (const auto& p : corpus(200, 13)) {
        if (p.num_voters() % 2 == 0) continue;
        auto m = margin_graph(p);
        CHECK(uncovered(m, UncoveredVariant::fishburn) == uncovered(m, UncoveredVariant::gillies));
    }
}

TEST_CASE("uniquely weighted profiles exclude at least two candidates") {
    int seen = 0;
    for (std::uint64_t t = 0; seen < 300; ++t) {
        const int k = 3 + static_cast<int>(t % 6);
        auto m = margin_graph(impartial_culture(k, 101, 17, t));
        if (!qualitative(m).uniquely_weighted()) continue;
        ++seen;
        CHECK(split_cycle(m).size() <= static_cast<std::size_t>(k - 2));
        auto gm = gocha(m);
        CHECK(gm == getcha(m));
    }
}

TEST_CASE("overwhelming majority") {
    auto ps = corpus(100, 21, 6);
    for (std::size_t i = 0; i + 1 < ps.size(); i += 2) {
        // same candidate count: draw P' from the same model at the same k
        const auto& p = ps[i];
        auto q = impartial_culture(p.num_candidates(), 7, 23, i);
        auto big = combine(p, replicate(q, 2 * p.num_voters()));
        CHECK(subset(split_cycle(margin_graph(big)), split_cycle(margin_graph(q))));
    }
}

TEST_CASE("Pareto for Split Cycle") {
    for (const auto& p : corpus(200, 27)) {
        auto m = margin_graph(p);
        auto sc = split_cycle(m);
        for (int x : p.candidates())
            for (int y : p.candidates())
                if (x != y && m.margin(x, y) == p.num_voters()) CHECK_FALSE(std::binary_search(sc.begin(), sc.end(), y));
    }
}

TEST_CASE("limit graphs evaluate through qualitative methods") {
    for (std::uint64_t t = 0; t < 50; ++t) {
        auto real = limit_margin_sample(6, 3, t);
        auto q = qualitative(real);
        auto m = q.to_margins();
        CHECK(split_cycle(real) == split_cycle(m));
        CHECK(copeland(real) == copeland(m));
        CHECK(getcha(real) == getcha(m));
        CHECK(uncovered(real, UncoveredVariant::gillies) == uncovered(m, UncoveredVariant::gillies));
        CHECK(beat_path(real) == beat_path(m));
    }
}
