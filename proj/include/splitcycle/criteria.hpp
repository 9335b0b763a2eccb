#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitcycle/margin_graph.hpp"
#include "splitcycle/methods.hpp"
#include "splitcycle/profile.hpp"
#include "splitcycle/rng.hpp"

namespace splitcycle {

// A recorded violation. outputs[i] is the method's winner set on profiles[i], so
// verify() can recompute every claim from the stored profiles alone.
struct Witness {
    std::string criterion;
    Method method = Method::split_cycle;
    std::vector<Profile> profiles;
    std::vector<std::vector<int>> outputs;
    std::vector<int> candidates;
    Ballot ballot;       // the added, removed or lifted ballot, when one is involved
    std::string detail;  // which clause or form produced the witness
};

bool verify(const Witness& w, const Options& opt = {});
std::string witness_json(const Witness& w);
Witness witness_from_json(std::string_view text);

// ---------------------------------------------------------------------------
// clones

bool is_clone_set(const Profile& p, const std::vector<int>& members);
// Maximal clone sets C with 2 <= |C| < k, each sorted, in lexicographic order.
std::vector<std::vector<int>> find_clone_sets(const Profile& p);

std::optional<Witness> check_clone_independence(Method method, const Profile& p, const std::vector<int>& clones,
                                                int c, const Options& opt = {});

// ---------------------------------------------------------------------------
// spoilers, stability, amalgamation

std::optional<Witness> check_immunity_to_spoilers(Method method, const Profile& p, const Options& opt = {});
std::optional<Witness> check_stability_for_winners(Method method, const Profile& p, bool strong,
                                                   const Options& opt = {});

// p and q must be the restrictions of r to their candidate sets, and X(r) their union.
std::optional<Witness> check_amalgamation(Method method, const Profile& p, const Profile& q, const Profile& r,
                                          const Options& opt = {});

struct AmalgamationTriple {
    Profile p, q, r;
};
// Splits X(r) into two overlapping parts covering it and restricts r to each.
AmalgamationTriple split_amalgamation(const Profile& r, Philox& rng);

// ---------------------------------------------------------------------------
// involvement, monotonicity, symmetry

enum class Polarity { positive, negative };

// Removal form over the ballots present, plus the addition form over every ballot
// with x on top (bottom) when k <= addition_cap.
std::optional<Witness> check_involvement(Method method, const Profile& p, Polarity polarity,
                                         const Options& opt = {}, int addition_cap = 5);

// One-ballot adjacent transpositions raising a winner.
std::optional<Witness> check_monotonicity(Method method, const Profile& p, const Options& opt = {});
std::optional<Witness> check_reversal_symmetry(Method method, const Profile& p, const Options& opt = {});
std::optional<Witness> check_isda(Method method, const Profile& p, const Options& opt = {});

enum class SubsetTarget { smith, schwartz };
std::optional<Witness> check_subset(Method method, const Profile& p, SubsetTarget target, const Options& opt = {});
std::optional<Witness> check_pareto(Method method, const Profile& p, const Options& opt = {});

// Requires F(p) to be a singleton; throws InputError otherwise.
std::optional<Witness> check_winner_continuity(Method method, const Profile& p, const Ballot& b,
                                               const Options& opt = {});

// ---------------------------------------------------------------------------
// constructions

struct RejectabilityWitness {
    Margins amplified;  // M': every candidate but x defeated
    Profile realized;   // Debord realization of M'
    Profile combined;   // P + m * realized with m = 2 |V(P)|
    std::int64_t copies = 0;
};

// x must be one of several Split Cycle winners of p; throws InputError otherwise.
RejectabilityWitness rejectability_witness(const Profile& p, int x);

struct StressInstance {
    QualitativeMarginGraph graph;
    Profile profile;
};

// Four candidates x1..x4 (ids 0..3) with x1->x3 psi, x4->x2 beta, x2->x1 gamma,
// x3->x2 phi, x4->x3 chi, x1->x4 alpha, alpha < gamma < beta, gamma < phi < psi,
// distinct weights and a randomised realization.
StressInstance resolvability_stress(std::uint64_t seed, std::uint64_t trial = 0);

// ---------------------------------------------------------------------------
// catalog for front ends

enum class Criterion {
    monotonicity,
    immunity_to_spoilers,
    stability_for_winners,
    strong_stability_for_winners,
    amalgamation,
    positive_involvement,
    negative_involvement,
    reversal_symmetry,
    isda,
    smith,
    schwartz,
    pareto,
    winner_continuity,
    clone_independence,
};

const std::vector<Criterion>& all_criteria();
std::string_view criterion_name(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view name);

// Runs a criterion on one profile, trying every applicable auxiliary choice (clone
// sets and members, ballots for winner continuity up to 7 candidates). Amalgamation
// is checked on a split of p drawn from `rng`.
std::optional<Witness> check_profile(Criterion c, Method method, const Profile& p, Philox& rng,
                                     const Options& opt = {});

}  // namespace splitcycle
