#pragma once

// Worked examples. Letters map to ids a=0, b=1, c=2, d=3, e=4, f=5.

#include <tuple>
#include <vector>

#include "splitcycle/margin_graph.hpp"
#include "splitcycle/profile.hpp"

namespace fixtures {

using namespace splitcycle;

enum : int { a = 0, b = 1, c = 2, d = 3, e = 4, f = 5 };

struct Edge {
    int from, to;
    std::int64_t weight;
};

inline Margins graph(std::vector<int> ids, std::initializer_list<Edge> edges) {
    const int k = static_cast<int>(ids.size());
    Margins::Matrix m = Margins::Matrix::Zero(k, k);
    auto at = [&](int id) {
        for (int i = 0; i < k; ++i)
            if (ids[i] == id) return i;
        throw InputError("fixture: bad id");
    };
    for (const auto& ed : edges) {
        m(at(ed.from), at(ed.to)) = ed.weight;
        m(at(ed.to), at(ed.from)) = -ed.weight;
    }
    return Margins(m, ids);
}

inline Profile realize(std::vector<int> ids, std::initializer_list<Edge> edges) {
    return realize_debord(graph(std::move(ids), edges));
}

// 2: b a c; 3: a c b; 4: c b a  ->  a->c 1, b->a 3, c->b 5
inline Profile three_cycle() { return make_profile(3, {{2, {b, a, c}}, {3, {a, c, b}}, {4, {c, b, a}}}); }

inline Profile four_candidate() {
    return realize({a, b, c, d}, {{c, b, 3}, {b, a, 3}, {a, c, 3}, {a, d, 1}, {b, d, 1}, {c, d, 1}});
}

inline Profile six_candidate() {
    return realize({a, b, c, d, e, f}, {{b, a, 4}, {c, b, 4}, {a, c, 4}, {e, d, 4}, {f, e, 4}, {d, f, 4},
                                        {a, f, 4}, {d, a, 2}});
}

inline Profile overlapping_cycles() {
    return realize({a, b, c, d, e},
                   {{b, a, 8}, {d, c, 6}, {c, b, 8}, {a, c, 6}, {a, d, 4}, {b, d, 4}, {d, e, 2}});
}

// Beat Path spoiler: e enters and ejects a and b.
inline Profile beat_path_spoiler() {
    return realize({a, b, c, d, e}, {{c, b, 5}, {a, c, 5}, {b, a, 5}, {c, d, 1}, {a, d, 1}, {b, d, 1},
                                     {a, e, 3}, {b, e, 3}, {e, c, 5}, {d, e, 3}});
}

// Ranked Pairs spoiler: e enters and ejects a.
inline Profile ranked_pairs_spoiler() {
    return realize({a, b, c, d, e}, {{b, c, 11}, {c, a, 1}, {c, d, 9}, {a, b, 13}, {d, b, 1}, {d, a, 7},
                                     {c, e, 17}, {e, b, 15}, {e, d, 5}, {a, e, 3}});
}

inline Profile minimax_instability() {
    return realize({a, b, c, d}, {{b, a, 3}, {d, c, 3}, {c, b, 3}, {a, c, 3}, {a, d, 1}, {b, d, 1}});
}

// Amalgamation example: P over {a,b,c,d}, P' over {b,d,e,f}, Q over all six.
inline Profile amalgam_p() {
    return Profile({a, b, c, d}, {{{d, a, c, b}, 4}, {{d, c, b, a}, 2}, {{c, b, d, a}, 1}, {{c, b, a, d}, 1},
                                  {{b, a, c, d}, 4}});
}
inline Profile amalgam_p_prime() {
    return Profile({b, d, e, f}, {{{d, f, e, b}, 4}, {{f, e, d, b}, 2}, {{b, f, e, d}, 2}, {{b, e, d, f}, 4}});
}
inline Profile amalgam_q() {
    return Profile({a, b, c, d, e, f},
                   {{{d, f, a, c, e, b}, 1}, {{d, a, f, c, e, b}, 3}, {{f, e, d, c, b, a}, 2},
                    {{c, b, f, e, d, a}, 1}, {{c, b, a, f, e, d}, 1}, {{b, e, a, c, d, f}, 3},
                    {{b, a, e, c, d, f}, 1}});
}

// Split Cycle winner outside GOCHA; candidates a, d, e, f.
inline Profile schwartz_example() { return realize({a, d, e, f}, {{e, d, 2}, {f, e, 2}, {d, f, 2}, {a, f, 2}}); }

// Coalitional participation: SC {b}, then two more c b d a voters give SC {d}.
inline Profile coalition_base() {
    return realize({a, b, c, d}, {{b, a, 3}, {d, c, 5}, {c, b, 1}, {a, c, 1}, {a, d, 3}, {d, b, 1}});
}
inline const Ballot coalition_ballot{c, b, d, a};

// GETCHA Pareto failure; x is id 3.
inline constexpr int pareto_x = 3;
inline Profile getcha_pareto() {
    return make_profile(4, {{1, {a, pareto_x, b, c}}, {1, {b, c, a, pareto_x}}, {1, {c, a, pareto_x, b}}});
}

// GOCHA positive involvement: x=0, y=1, z=2; y->x 5, x->z 3, z->y 1 plus one x y z voter.
inline Profile gocha_involvement_base() { return realize({0, 1, 2}, {{1, 0, 5}, {0, 2, 3}, {2, 1, 1}}); }
inline Profile gocha_involvement() { return add_ballot(gocha_involvement_base(), {0, 1, 2}); }

// Fishburn uncovered-set clone failure over {b, d, e, f}.
inline Profile uncovered_clones() {
    return Profile({b, d, e, f}, {{{e, d, f, b}, 1}, {{d, f, e, b}, 1}, {{f, e, d, b}, 1}, {{b, e, d, f}, 1},
                                  {{b, d, f, e}, 1}, {{b, f, e, d}, 1}});
}

// Florida 2000 style: Bush=0, Gore=1, Nader=2.
inline Profile florida() {
    return Profile({0, 1, 2}, {{{0, 1, 2}, 2'912'790}, {{1, 2, 0}, 2'912'253}, {{2, 1, 0}, 97'488}},
                   {{0, "Bush"}, {1, "Gore"}, {2, "Nader"}});
}

// Burlington 2009 style: r=0, d=1, p=2.
inline Profile burlington() {
    return Profile({0, 1, 2}, {{{0, 1, 2}, 37}, {{1, 2, 0}, 29}, {{2, 1, 0}, 34}}, {{0, "r"}, {1, "d"}, {2, "p"}});
}

// Ranked Choice no-show: 2 abc, 3 bca, 1 cab, 3 cba.
inline Profile no_show() { return make_profile(3, {{2, {a, b, c}}, {3, {b, c, a}}, {1, {c, a, b}}, {3, {c, b, a}}}); }

// Majority graph for the rejectability weighting example.
inline Margins rejectability_majority() {
    return graph({a, b, c, d}, {{b, a, 1}, {d, c, 1}, {c, b, 1}, {a, c, 1}, {d, a, 1}, {b, d, 1}});
}

}  // namespace fixtures
