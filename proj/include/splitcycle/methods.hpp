#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "splitcycle/errors.hpp"
#include "splitcycle/margin_graph.hpp"
#include "splitcycle/profile.hpp"

namespace splitcycle {

enum class Method {
    split_cycle,
    beat_path,
    ranked_pairs,
    minimax,
    copeland,
    getcha,
    gocha,
    uncovered_fishburn,
    uncovered_gillies,
    ranked_choice,
    plurality,
};

const std::vector<Method>& all_methods();
std::string_view method_name(Method m);
// Accepts the names above plus "uncovered" (Gillies) and "uc_fish"/"uc_gill".
std::optional<Method> parse_method(std::string_view name);
// Everything except ranked_choice and plurality is a function of the margin graph.
bool margin_based(Method m);

enum class ScAlgorithm { direct, widest_path };

struct Options {
    int cycle_cap = 8;                        // largest k for direct cycle enumeration
    std::int64_t rp_node_budget = 1'000'000;  // Ranked Pairs search nodes
};

// Split Cycle defeats, stored by index with the graph's candidate ids alongside.
struct DefeatRelation {
    std::vector<int> ids;
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> adj;

    int size() const { return static_cast<int>(ids.size()); }
    bool defeats(int a, int b) const;                // candidate ids
    std::vector<std::pair<int, int>> edges() const;  // candidate ids
    std::vector<int> undefeated() const;             // candidate ids, sorted
    bool acyclic() const;
    bool operator==(const DefeatRelation& o) const { return ids == o.ids && (adj == o.adj).all(); }
};

// ---------------------------------------------------------------------------
// widest paths and Split Cycle

template <typename S>
typename MarginGraph<S>::Matrix strength_matrix(const MarginGraph<S>& m) {
    const int k = m.size();
    typename MarginGraph<S>::Matrix s = m.matrix().cwiseMax(S(0));
    for (int via = 0; via < k; ++via)
        for (int i = 0; i < k; ++i) {
            if (i == via || s(i, via) == S(0)) continue;
            for (int j = 0; j < k; ++j)
                if (j != i && j != via) s(i, j) = std::max(s(i, j), std::min(s(i, via), s(via, j)));
        }
    s.diagonal().setZero();
    return s;
}

namespace detail {

template <typename S>
void widest_simple_paths(const MarginGraph<S>& m, int at, int target, S floor, std::vector<char>& seen,
                         S& best) {
    if (at == target) {
        best = std::max(best, floor);
        return;
    }
    if (floor <= best) return;
    seen[at] = 1;
    for (int nxt = 0; nxt < m.size(); ++nxt)
        if (!seen[nxt] && m(at, nxt) > S(0))
            widest_simple_paths(m, nxt, target, std::min(floor, m(at, nxt)), seen, best);
    seen[at] = 0;
}

template <typename S>
std::vector<int> to_index_list(const std::vector<char>& keep) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

}  // namespace detail

// Cycle#(a,b) by index: largest splitting number over simple cycles a -> b -> ... -> a, 0 if none.
// Exhaustive search, intended as an oracle.
template <typename S>
S cycle_number(const MarginGraph<S>& m, int a, int b) {
    if (m(a, b) <= S(0)) return S(0);
    std::vector<char> seen(m.size(), 0);
    seen[a] = 0;
    S best = S(0);
    seen[b] = 1;
    for (int nxt = 0; nxt < m.size(); ++nxt)
        if (!seen[nxt] && m(b, nxt) > S(0))
            detail::widest_simple_paths(m, nxt, a, std::min(m(a, b), m(b, nxt)), seen, best);
    return best;
}

template <typename S>
DefeatRelation sc_defeats(const MarginGraph<S>& m, ScAlgorithm algo = ScAlgorithm::widest_path,
                          int cycle_cap = 8) {
    const int k = m.size();
    DefeatRelation d{m.ids(), Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(k, k, false)};
    if (algo == ScAlgorithm::direct) {
        if (k > cycle_cap)
            throw CapabilityError("direct cycle enumeration is capped at " + std::to_string(cycle_cap) +
                                  " candidates (got " + std::to_string(k) + ")");
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                d.adj(a, b) = m(a, b) > S(0) && m(a, b) > cycle_number(m, a, b);
    } else {
        const auto s = strength_matrix(m);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) d.adj(a, b) = m(a, b) > S(0) && m(a, b) > s(b, a);
    }
    return d;
}

template <typename S>
std::vector<int> split_cycle(const MarginGraph<S>& m) {
    return sc_defeats(m).undefeated();
}

template <typename S>
std::vector<int> beat_path(const MarginGraph<S>& m) {
    const auto s = strength_matrix(m);
    std::vector<char> keep(m.size(), 1);
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            if (s(y, x) > s(x, y)) keep[x] = 0;
    return m.to_ids(detail::to_index_list<S>(keep));
}

// ---------------------------------------------------------------------------
// scores

template <typename S>
std::vector<int> minimax(const MarginGraph<S>& m) {
    const int k = m.size();
    if (k == 1) return m.ids();
    std::vector<S> worst(k);
    for (int x = 0; x < k; ++x) {
        S w = std::numeric_limits<S>::lowest();
        for (int y = 0; y < k; ++y)
            if (y != x) w = std::max(w, m(y, x));
        worst[x] = w;
    }
    const S best = *std::min_element(worst.begin(), worst.end());
    std::vector<char> keep(k);
    for (int x = 0; x < k; ++x) keep[x] = worst[x] == best;
    return m.to_ids(detail::to_index_list<S>(keep));
}

template <typename S>
std::vector<int> copeland(const MarginGraph<S>& m) {
    const int k = m.size();
    Eigen::VectorXi score = Eigen::VectorXi::Zero(k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) score(x) += (m(x, y) > S(0)) - (m(x, y) < S(0));
    const int best = score.maxCoeff();
    std::vector<char> keep(k);
    for (int x = 0; x < k; ++x) keep[x] = score(x) == best;
    return m.to_ids(detail::to_index_list<S>(keep));
}

// ---------------------------------------------------------------------------
// dominance sets

namespace detail {

using Reach = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

inline Reach transitive_closure(Reach r) {
    const auto k = r.rows();
    for (Eigen::Index via = 0; via < k; ++via)
        for (Eigen::Index i = 0; i < k; ++i)
            if (r(i, via)) r.row(i) = r.row(i) || r.row(via);
    return r;
}

}  // namespace detail

template <typename S>
std::vector<int> getcha(const MarginGraph<S>& m) {
    const int k = m.size();
    detail::Reach r = (m.matrix().array() >= S(0));
    r = detail::transitive_closure(r);
    std::vector<char> keep(k);
    for (int x = 0; x < k; ++x) keep[x] = r.row(x).all();
    return m.to_ids(detail::to_index_list<S>(keep));
}

template <typename S>
std::vector<int> gocha(const MarginGraph<S>& m) {
    const int k = m.size();
    detail::Reach r = detail::transitive_closure(m.matrix().array() > S(0));
    std::vector<char> keep(k, 1);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (y != x && r(y, x) && !r(x, y)) keep[x] = 0;
    return m.to_ids(detail::to_index_list<S>(keep));
}

enum class UncoveredVariant { fishburn, gillies };

template <typename S>
std::vector<int> uncovered(const MarginGraph<S>& m, UncoveredVariant variant) {
    const int k = m.size();
    // covers(y, x): y left-covers x, i.e. every z with z -> y also has z -> x
    detail::Reach covers = detail::Reach::Constant(k, k, true);
    for (int y = 0; y < k; ++y)
        for (int x = 0; x < k; ++x)
            for (int z = 0; z < k && covers(y, x); ++z)
                if (m(z, y) > S(0) && !(m(z, x) > S(0))) covers(y, x) = false;
    std::vector<char> keep(k, 1);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            if (y == x || !covers(y, x)) continue;
            if (variant == UncoveredVariant::fishburn ? !covers(x, y) : m(y, x) > S(0)) keep[x] = 0;
        }
    return m.to_ids(detail::to_index_list<S>(keep));
}

template <typename S>
std::optional<int> condorcet_winner(const MarginGraph<S>& m) {
    for (int x = 0; x < m.size(); ++x) {
        bool all = true;
        for (int y = 0; y < m.size() && all; ++y)
            if (y != x && !(m(x, y) > S(0))) all = false;
        if (all) return m.id(x);
    }
    return std::nullopt;
}

template <typename S>
std::optional<int> condorcet_loser(const MarginGraph<S>& m) {
    if (m.size() < 2) return std::nullopt;
    for (int x = 0; x < m.size(); ++x) {
        bool all = true;
        for (int y = 0; y < m.size() && all; ++y)
            if (y != x && !(m(y, x) > S(0))) all = false;
        if (all) return m.id(x);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ranked Pairs

namespace detail {

// Exhaustive lock-in over every tie-breaking order. Equal-margin pairs (including
// both orientations of a zero margin) form one group whose orders are branched on;
// states are memoised on the transitive closure of the locked relation.
template <typename S>
class RankedPairsSearch {
public:
    RankedPairsSearch(const MarginGraph<S>& m, std::int64_t budget) : m_(m), k_(m.size()), budget_(budget) {
        struct E {
            S w;
            int i, j;
        };
        std::vector<E> all;
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                if (i != j && m(i, j) >= S(0)) all.push_back({m(i, j), i, j});
        std::sort(all.begin(), all.end(), [](const E& a, const E& b) {
            if (a.w != b.w) return a.w > b.w;
            return std::pair(a.i, a.j) < std::pair(b.i, b.j);
        });
        for (std::size_t e = 0; e < all.size(); ++e) {
            if (e == 0 || all[e].w != all[e - 1].w) groups_.emplace_back();
            groups_.back().push_back({all[e].i, all[e].j});
        }
    }

    std::vector<int> run() {
        if (k_ > 64) throw CapabilityError("ranked_pairs supports at most 64 candidates");
        std::vector<std::uint64_t> reach(k_, 0);
        if (groups_.empty()) {
            found_ = k_ == 64 ? ~0ULL : (1ULL << k_) - 1;
        } else {
            visit(0, reach, groups_[0]);
        }
        return winners();
    }

    std::vector<int> winners() const {
        std::vector<int> idx;
        for (int i = 0; i < k_; ++i)
            if (found_ >> i & 1ULL) idx.push_back(i);
        return m_.to_ids(idx);
    }

private:
    using Pair = std::pair<int, int>;

    std::uint64_t possible_tops(const std::vector<std::uint64_t>& reach) const {
        std::uint64_t reached = 0;
        for (int i = 0; i < k_; ++i) reached |= reach[i];
        const std::uint64_t everyone = k_ == 64 ? ~0ULL : (1ULL << k_) - 1;
        return everyone & ~reached;
    }

    void visit(std::size_t g, std::vector<std::uint64_t> reach, std::vector<Pair> pending) {
        if (++nodes_ > budget_)
            throw CapabilityError("ranked_pairs node budget of " + std::to_string(budget_) + " exceeded",
                                  winners());
        if ((possible_tops(reach) & ~found_) == 0) return;

        // pairs already implied or now cyclic are decided regardless of order
        pending.erase(std::remove_if(pending.begin(), pending.end(),
                                     [&](const Pair& p) {
                                         return (reach[p.first] >> p.second & 1ULL) ||
                                                (reach[p.second] >> p.first & 1ULL);
                                     }),
                      pending.end());
        if (pending.empty()) {
            if (g + 1 == groups_.size()) {
                found_ |= possible_tops(reach);
                return;
            }
            visit(g + 1, std::move(reach), groups_[g + 1]);
            return;
        }
        std::string key;
        key.reserve(8 + 8 * k_ + 2 * pending.size());
        auto put = [&key](std::uint64_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
        put(g);
        for (auto r : reach) put(r);
        for (const auto& p : pending) {
            key.push_back(static_cast<char>(p.first));
            key.push_back(static_cast<char>(p.second));
        }
        if (!memo_.insert(std::move(key)).second) return;

        for (std::size_t e = 0; e < pending.size(); ++e) {
            const auto [a, b] = pending[e];
            auto next = reach;
            const std::uint64_t gain = next[b] | (1ULL << b);
            for (int u = 0; u < k_; ++u)
                if (u == a || (next[u] >> a & 1ULL)) next[u] |= gain;
            auto rest = pending;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
            visit(g, std::move(next), std::move(rest));
        }
    }

    const MarginGraph<S>& m_;
    int k_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::uint64_t found_ = 0;
    std::vector<std::vector<Pair>> groups_;
    std::unordered_set<std::string> memo_;
};

}  // namespace detail

// Candidates on top of some Ranked Pairs ranking. Throws CapabilityError (carrying the
// winners found so far) when the search exceeds `node_budget`.
template <typename S>
std::vector<int> ranked_pairs(const MarginGraph<S>& m, std::int64_t node_budget = 1'000'000) {
    return detail::RankedPairsSearch<S>(m, node_budget).run();
}

// ---------------------------------------------------------------------------
// dispatch

std::vector<int> ranked_choice(const Profile& p);
std::vector<int> plurality(const Profile& p);

template <typename S>
std::vector<int> winners(Method method, const MarginGraph<S>& m, const Options& opt = {}) {
    switch (method) {
        case Method::split_cycle: return split_cycle(m);
        case Method::beat_path: return beat_path(m);
        case Method::ranked_pairs: return ranked_pairs(m, opt.rp_node_budget);
        case Method::minimax: return minimax(m);
        case Method::copeland: return copeland(m);
        case Method::getcha: return getcha(m);
        case Method::gocha: return gocha(m);
        case Method::uncovered_fishburn: return uncovered(m, UncoveredVariant::fishburn);
        case Method::uncovered_gillies: return uncovered(m, UncoveredVariant::gillies);
        case Method::ranked_choice:
        case Method::plurality: break;
    }
    throw CapabilityError(std::string(method_name(method)) + " needs ballots, not only a margin graph");
}

std::vector<int> winners(Method method, const Profile& p, const Options& opt = {});

}  // namespace splitcycle
