#include "splitcycle/criteria.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <queue>

#include "splitcycle/generators.hpp"
#include "splitcycle/io.hpp"

namespace splitcycle {

namespace {

using Winners = std::vector<int>;

bool has(const Winners& w, int c) { return std::binary_search(w.begin(), w.end(), c); }

// Margin graph with one candidate removed (same as margin_graph of the reduced profile).
Margins without(const Margins& m, int id) {
    const int k = m.size(), drop = m.index_of(id);
    Margins::Matrix out(k - 1, k - 1);
    std::vector<int> ids;
    for (int i = 0, r = 0; i < k; ++i) {
        if (i == drop) continue;
        ids.push_back(m.id(i));
        for (int j = 0, s = 0; j < k; ++j) {
            if (j == drop) continue;
            out(r, s++) = m(i, j);
        }
        ++r;
    }
    return Margins(out, ids);
}

Margins::Matrix ballot_matrix(const Margins& m, const Ballot& b) {
    const int k = m.size();
    Margins::Matrix d = Margins::Matrix::Zero(k, k);
    std::vector<int> idx;
    for (int c : b) idx.push_back(m.index_of(c));
    for (int r = 0; r < k; ++r)
        for (int s = r + 1; s < k; ++s) {
            d(idx[r], idx[s]) += 1;
            d(idx[s], idx[r]) -= 1;
        }
    return d;
}

// Evaluates a method on profiles, or directly on margin graphs when the method allows it.
class Evaluator {
public:
    Evaluator(Method method, const Options& opt) : method_(method), opt_(opt) {}

    bool by_margins() const { return margin_based(method_); }
    Winners operator()(const Profile& p) const { return winners(method_, p, opt_); }
    Winners operator()(const Margins& m) const { return winners(method_, m, opt_); }

    Witness witness(std::string criterion, std::vector<Profile> profiles, std::vector<int> candidates,
                    std::string detail = {}, Ballot ballot = {}) const {
        Witness w;
        w.criterion = std::move(criterion);
        w.method = method_;
        for (const auto& p : profiles) w.outputs.push_back((*this)(p));
        w.profiles = std::move(profiles);
        w.candidates = std::move(candidates);
        w.detail = std::move(detail);
        w.ballot = std::move(ballot);
        return w;
    }

private:
    Method method_;
    Options opt_;
};

// F(P - b) for every candidate b.
std::vector<Winners> removal_winners(const Evaluator& eval, const Profile& p, const Margins& m) {
    std::vector<Winners> out;
    for (int b : p.candidates())
        out.push_back(eval.by_margins() ? eval(without(m, b)) : eval(remove_candidate(p, b)));
    return out;
}

std::vector<Ballot> all_orders(const std::vector<int>& ids) {
    std::vector<Ballot> out;
    Ballot b = ids;
    std::sort(b.begin(), b.end());
    do out.push_back(b);
    while (std::next_permutation(b.begin(), b.end()));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// witnesses

bool verify(const Witness& w, const Options& opt) {
    if (w.profiles.size() != w.outputs.size()) return false;
    for (std::size_t i = 0; i < w.profiles.size(); ++i)
        if (winners(w.method, w.profiles[i], opt) != w.outputs[i]) return false;
    return true;
}

std::string witness_json(const Witness& w) {
    nlohmann::json j;
    j["criterion"] = w.criterion;
    j["method"] = std::string(method_name(w.method));
    j["candidates"] = w.candidates;
    j["detail"] = w.detail;
    j["ballot"] = w.ballot;
    j["profiles"] = nlohmann::json::array();
    for (std::size_t i = 0; i < w.profiles.size(); ++i)
        j["profiles"].push_back({{"profile", serialize_profile(w.profiles[i])}, {"winners", w.outputs[i]}});
    return j.dump(2);
}

Witness witness_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        Witness w;
        w.criterion = j.at("criterion").get<std::string>();
        auto m = parse_method(j.at("method").get<std::string>());
        if (!m) throw InputError("unknown method in witness");
        w.method = *m;
        w.candidates = j.at("candidates").get<std::vector<int>>();
        w.detail = j.value("detail", "");
        w.ballot = j.value("ballot", Ballot{});
        for (const auto& entry : j.at("profiles")) {
            w.profiles.push_back(deserialize_profile(entry.at("profile").get<std::string>()));
            w.outputs.push_back(entry.at("winners").get<std::vector<int>>());
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed witness: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// clones

bool is_clone_set(const Profile& p, const std::vector<int>& members) {
    if (members.size() < 2 || static_cast<int>(members.size()) >= p.num_candidates()) return false;
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int c : sorted)
        if (!p.contains(c)) return false;
    for (const auto& b : p.ballots()) {
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(b.ranking.size()); ++i)
            if (std::binary_search(sorted.begin(), sorted.end(), b.ranking[i])) {
                if (first < 0) first = i;
                last = i;
            }
        if (last - first + 1 != static_cast<int>(sorted.size())) return false;
    }
    return true;
}

std::vector<std::vector<int>> find_clone_sets(const Profile& p) {
    const int k = p.num_candidates();
    const Ballot& top = p.ballots().front().ranking;
    std::vector<std::vector<int>> found;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (j - i + 1 >= k) continue;
            std::vector<int> block(top.begin() + i, top.begin() + j + 1);
            std::sort(block.begin(), block.end());
            if (is_clone_set(p, block)) found.push_back(std::move(block));
        }
    std::vector<std::vector<int>> maximal;
    for (const auto& s : found) {
        bool inside = false;
        for (const auto& t : found)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) inside = true;
        if (!inside) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::optional<Witness> check_clone_independence(Method method, const Profile& p, const std::vector<int>& clones,
                                                int c, const Options& opt) {
    if (!is_clone_set(p, clones)) throw InputError("not a set of clones");
    if (std::find(clones.begin(), clones.end(), c) == clones.end())
        throw InputError("candidate is not in the clone set");
    Evaluator eval(method, opt);
    const Winners before = eval(p);
    const Profile reduced = remove_candidate(p, c);
    const Winners after = eval.by_margins() ? eval(without(margin_graph(p), c)) : eval(reduced);

    auto in_clones = [&](int x) { return std::find(clones.begin(), clones.end(), x) != clones.end(); };
    for (int a : p.candidates()) {
        if (in_clones(a)) continue;
        if (has(before, a) != has(after, a))
            return eval.witness("clone_independence", {p, reduced}, {c, a}, "non_clone_choice");
    }
    bool clone_won_before = false, clone_won_after = false;
    for (int x : before) clone_won_before |= in_clones(x);
    for (int x : after) clone_won_after |= in_clones(x) && x != c;
    if (clone_won_before != clone_won_after)
        return eval.witness("clone_independence", {p, reduced}, {c}, "clone_choice");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// spoilers and stability

namespace {

std::optional<Witness> stability_like(const std::string& name, Method method, const Profile& p, bool strong,
                                      bool spoiler, const Options& opt) {
    Evaluator eval(method, opt);
    const Margins m = margin_graph(p);
    const Winners full = eval.by_margins() ? eval(m) : eval(p);
    const auto reduced = removal_winners(eval, p, m);
    const auto& ids = p.candidates();
    for (std::size_t bi = 0; bi < ids.size(); ++bi) {
        const int b = ids[bi];
        if (spoiler && has(full, b)) continue;
        for (int a : reduced[bi]) {
            const auto w = m.margin(a, b);
            if ((strong ? w >= 0 : w > 0) && !has(full, a))
                return eval.witness(name, {p, remove_candidate(p, b)}, {a, b});
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> check_immunity_to_spoilers(Method method, const Profile& p, const Options& opt) {
    return stability_like("immunity_to_spoilers", method, p, false, true, opt);
}

std::optional<Witness> check_stability_for_winners(Method method, const Profile& p, bool strong,
                                                   const Options& opt) {
    return stability_like(strong ? "strong_stability_for_winners" : "stability_for_winners", method, p, strong,
                          false, opt);
}

// ---------------------------------------------------------------------------
// amalgamation

std::optional<Witness> check_amalgamation(Method method, const Profile& p, const Profile& q, const Profile& r,
                                          const Options& opt) {
    std::vector<int> joint;
    std::set_union(p.candidates().begin(), p.candidates().end(), q.candidates().begin(), q.candidates().end(),
                   std::back_inserter(joint));
    if (joint != r.candidates()) throw InputError("amalgamation must range over the union of both candidate sets");
    if (restrict_to(r, p.candidates()) != p || restrict_to(r, q.candidates()) != q)
        throw InputError("profile is not an amalgamation of the other two");
    Evaluator eval(method, opt);
    const Winners fp = eval(p), fq = eval(q), fr = eval(r);
    for (int a : fp)
        if (has(fq, a) && !has(fr, a)) return eval.witness("amalgamation", {p, q, r}, {a});
    return std::nullopt;
}

AmalgamationTriple split_amalgamation(const Profile& r, Philox& rng) {
    const auto& ids = r.candidates();
    const int k = static_cast<int>(ids.size());
    // each candidate goes to the left part, the right part, or both; at least one shared
    std::vector<int> left, right;
    const int shared = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    for (int i = 0; i < k; ++i) {
        const auto where = i == shared ? 2 : rng.below(3);
        if (where != 1) left.push_back(ids[i]);
        if (where != 0) right.push_back(ids[i]);
    }
    return {restrict_to(r, left), restrict_to(r, right), r};
}

// ---------------------------------------------------------------------------
// involvement

std::optional<Witness> check_involvement(Method method, const Profile& p, Polarity polarity, const Options& opt,
                                         int addition_cap) {
    Evaluator eval(method, opt);
    const bool positive = polarity == Polarity::positive;
    const std::string name = positive ? "positive_involvement" : "negative_involvement";
    const Margins m = margin_graph(p);
    const Winners full = eval.by_margins() ? eval(m) : eval(p);
    auto pivot = [&](const Ballot& b) { return positive ? b.front() : b.back(); };
    // positive: x absent with the voter and present without; negative: the reverse
    auto violates = [&](bool x_with, bool x_without) { return positive ? (!x_with && x_without) : (x_with && !x_without); };

    if (p.num_voters() >= 2) {
        for (const auto& bc : p.ballots()) {
            const int x = pivot(bc.ranking);
            const bool x_with = has(full, x);
            if (positive ? x_with : !x_with) continue;
            Winners less;
            if (eval.by_margins()) less = eval(Margins(m.matrix() - ballot_matrix(m, bc.ranking), m.ids()));
            else less = eval(remove_ballot(p, bc.ranking));
            if (violates(x_with, has(less, x)))
                return eval.witness(name, {remove_ballot(p, bc.ranking), p}, {x}, "removal", bc.ranking);
        }
    }
    if (p.num_candidates() <= addition_cap) {
        for (const auto& b : all_orders(p.candidates())) {
            const int x = pivot(b);
            const bool x_without = has(full, x);
            if (positive ? !x_without : x_without) continue;
            Winners more;
            if (eval.by_margins()) more = eval(Margins(m.matrix() + ballot_matrix(m, b), m.ids()));
            else more = eval(add_ballot(p, b));
            if (violates(has(more, x), x_without))
                return eval.witness(name, {p, add_ballot(p, b)}, {x}, "addition", b);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// monotonicity, reversal, ISDA, subsets, Pareto, continuity

std::optional<Witness> check_monotonicity(Method method, const Profile& p, const Options& opt) {
    Evaluator eval(method, opt);
    const Margins m = margin_graph(p);
    const Winners full = eval.by_margins() ? eval(m) : eval(p);
    for (int x : full) {
        std::vector<int> tried;  // for margin methods only the overtaken candidate matters
        for (const auto& bc : p.ballots()) {
            const auto& r = bc.ranking;
            const auto pos = std::find(r.begin(), r.end(), x) - r.begin();
            if (pos == 0) continue;
            const int y = r[pos - 1];
            Ballot lifted = r;
            std::swap(lifted[pos - 1], lifted[pos]);
            Winners after;
            if (eval.by_margins()) {
                if (std::find(tried.begin(), tried.end(), y) != tried.end()) continue;
                tried.push_back(y);
                Margins::Matrix d = m.matrix();
                d(m.index_of(x), m.index_of(y)) += 2;
                d(m.index_of(y), m.index_of(x)) -= 2;
                after = eval(Margins(d, m.ids()));
            } else {
                after = eval(add_ballot(remove_ballot(p, r), lifted));
            }
            if (!has(after, x))
                return eval.witness("monotonicity", {p, add_ballot(remove_ballot(p, r), lifted)}, {x, y}, "", r);
        }
    }
    return std::nullopt;
}

std::optional<Witness> check_reversal_symmetry(Method method, const Profile& p, const Options& opt) {
    if (p.num_candidates() < 2) return std::nullopt;
    Evaluator eval(method, opt);
    const Winners full = eval(p);
    if (full.size() != 1) return std::nullopt;
    const Profile r = reverse(p);
    if (has(eval(r), full.front())) return eval.witness("reversal_symmetry", {p, r}, {full.front()});
    return std::nullopt;
}

std::optional<Witness> check_isda(Method method, const Profile& p, const Options& opt) {
    Evaluator eval(method, opt);
    const Margins m = margin_graph(p);
    const Winners smith = getcha(m);
    const Winners full = eval.by_margins() ? eval(m) : eval(p);
    for (int x : p.candidates()) {
        if (has(smith, x)) continue;
        const Winners after = eval.by_margins() ? eval(without(m, x)) : eval(remove_candidate(p, x));
        if (after != full) return eval.witness("isda", {p, remove_candidate(p, x)}, {x});
    }
    return std::nullopt;
}

std::optional<Witness> check_subset(Method method, const Profile& p, SubsetTarget target, const Options& opt) {
    Evaluator eval(method, opt);
    const Margins m = margin_graph(p);
    const Winners bound = target == SubsetTarget::smith ? getcha(m) : gocha(m);
    for (int w : eval(p))
        if (!has(bound, w))
            return eval.witness(target == SubsetTarget::smith ? "smith" : "schwartz", {p}, {w});
    return std::nullopt;
}

std::optional<Witness> check_pareto(Method method, const Profile& p, const Options& opt) {
    Evaluator eval(method, opt);
    const Margins m = margin_graph(p);
    for (int w : eval(p))
        for (int a : p.candidates())
            if (a != w && m.margin(a, w) == p.num_voters()) return eval.witness("pareto", {p}, {a, w});
    return std::nullopt;
}

std::optional<Witness> check_winner_continuity(Method method, const Profile& p, const Ballot& b,
                                               const Options& opt) {
    Evaluator eval(method, opt);
    const Winners full = eval(p);
    if (full.size() != 1) throw InputError("winner continuity needs a unique winner");
    const Profile more = add_ballot(p, b);
    if (!has(eval(more), full.front())) return eval.witness("winner_continuity", {p, more}, {full.front()}, "", b);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// rejectability

RejectabilityWitness rejectability_witness(const Profile& p, int x) {
    const Margins m = margin_graph(p);
    const Winners sc = split_cycle(m);
    if (!has(sc, x)) throw InputError("candidate is not a Split Cycle winner");
    if (sc.size() < 2) throw InputError("Split Cycle already has a unique winner");

    const int k = m.size(), xi = m.index_of(x);
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> edge = m.matrix().array() > 0;
    for (int y = 0; y < k; ++y)
        if (y != xi && m(xi, y) == 0) edge(xi, y) = true;

    std::vector<int> dist(k, -1);
    std::queue<int> frontier;
    dist[xi] = 0;
    frontier.push(xi);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < k; ++v)
            if (edge(u, v) && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
    }

    bool zero_left = false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) zero_left |= !edge(i, j) && !edge(j, i);
    const std::int64_t n = m.matrix().maxCoeff();
    std::int64_t low = n + 1, high = n + 3;
    if (zero_left && low % 2 != 0) {
        low = n + 2;
        high = n + 4;
    }

    Margins::Matrix w = Margins::Matrix::Zero(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (!edge(a, b)) continue;
            // (a,b) lies on some shortest path from x to b
            const bool on_shortest = dist[a] >= 0 && dist[a] + 1 == dist[b];
            w(a, b) = on_shortest ? high : low;
            w(b, a) = -w(a, b);
        }
    RejectabilityWitness out{Margins(w, m.ids()), Profile{}, Profile{}, 2 * p.num_voters()};
    out.realized = realize_debord(out.amplified);
    out.combined = combine(p, replicate(out.realized, out.copies));
    return out;
}

// ---------------------------------------------------------------------------
// resolvability stress

StressInstance resolvability_stress(std::uint64_t seed, std::uint64_t trial) {
    Philox rng(seed, trial, 0);
    // slots: 0 alpha, 1 beta, 2 gamma, 3 phi, 4 psi, 5 chi
    std::array<int, 6> rank{};
    while (true) {
        std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
        for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        for (int r = 0; r < 6; ++r) rank[perm[r]] = r;
        if (rank[0] < rank[2] && rank[2] < rank[1] && rank[2] < rank[3] && rank[3] < rank[4]) break;
    }
    // six distinct odd weights in increasing order
    std::vector<std::int64_t> pool;
    const int span = 6 + static_cast<int>(rng.below(20));
    for (int i = 0; i < span; ++i) pool.push_back(2 * i + 1);
    for (int i = span - 1; i > 0; --i) std::swap(pool[i], pool[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    pool.resize(6);
    std::sort(pool.begin(), pool.end());
    auto weight = [&](int slot) { return pool[rank[slot]]; };

    const int x1 = 0, x2 = 1, x3 = 2, x4 = 3;
    Margins::Matrix w = Margins::Matrix::Zero(4, 4);
    auto set = [&](int from, int to, std::int64_t v) {
        w(from, to) = v;
        w(to, from) = -v;
    };
    set(x1, x4, weight(0));
    set(x4, x2, weight(1));
    set(x2, x1, weight(2));
    set(x3, x2, weight(3));
    set(x1, x3, weight(4));
    set(x4, x3, weight(5));
    const Margins m(w);

    // Debord plus a random number of cancelling ballot pairs
    Profile p = realize_debord(m);
    const int extra = static_cast<int>(rng.below(4));
    for (int i = 0; i < extra; ++i) {
        Ballot b = impartial_culture_ballot(4, rng);
        Ballot r(b.rbegin(), b.rend());
        p = add_ballot(add_ballot(p, b), r);
    }
    return {qualitative(m), p};
}

// ---------------------------------------------------------------------------
// catalog

namespace {

struct NamedCriterion {
    Criterion c;
    std::string_view name;
};

constexpr NamedCriterion kCriteria[] = {
    {Criterion::monotonicity, "monotonicity"},
    {Criterion::immunity_to_spoilers, "immunity_to_spoilers"},
    {Criterion::stability_for_winners, "stability_for_winners"},
    {Criterion::strong_stability_for_winners, "strong_stability_for_winners"},
    {Criterion::amalgamation, "amalgamation"},
    {Criterion::positive_involvement, "positive_involvement"},
    {Criterion::negative_involvement, "negative_involvement"},
    {Criterion::reversal_symmetry, "reversal_symmetry"},
    {Criterion::isda, "isda"},
    {Criterion::smith, "smith"},
    {Criterion::schwartz, "schwartz"},
    {Criterion::pareto, "pareto"},
    {Criterion::winner_continuity, "winner_continuity"},
    {Criterion::clone_independence, "clone_independence"},
};

}  // namespace

const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> all = [] {
        std::vector<Criterion> v;
        for (const auto& c : kCriteria) v.push_back(c.c);
        return v;
    }();
    return all;
}

std::string_view criterion_name(Criterion c) {
    for (const auto& n : kCriteria)
        if (n.c == c) return n.name;
    return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
    for (const auto& n : kCriteria)
        if (n.name == name) return n.c;
    return std::nullopt;
}

std::optional<Witness> check_profile(Criterion c, Method method, const Profile& p, Philox& rng,
                                     const Options& opt) {
    switch (c) {
        case Criterion::monotonicity: return check_monotonicity(method, p, opt);
        case Criterion::immunity_to_spoilers: return check_immunity_to_spoilers(method, p, opt);
        case Criterion::stability_for_winners: return check_stability_for_winners(method, p, false, opt);
        case Criterion::strong_stability_for_winners: return check_stability_for_winners(method, p, true, opt);
        case Criterion::amalgamation: {
            auto t = split_amalgamation(p, rng);
            return check_amalgamation(method, t.p, t.q, t.r, opt);
        }
        case Criterion::positive_involvement: return check_involvement(method, p, Polarity::positive, opt);
        case Criterion::negative_involvement: return check_involvement(method, p, Polarity::negative, opt);
        case Criterion::reversal_symmetry: return check_reversal_symmetry(method, p, opt);
        case Criterion::isda: return check_isda(method, p, opt);
        case Criterion::smith: return check_subset(method, p, SubsetTarget::smith, opt);
        case Criterion::schwartz: return check_subset(method, p, SubsetTarget::schwartz, opt);
        case Criterion::pareto: return check_pareto(method, p, opt);
        case Criterion::winner_continuity: {
            if (winners(method, p, opt).size() != 1) return std::nullopt;
            if (p.num_candidates() <= 7) {
                for (const auto& b : all_orders(p.candidates()))
                    if (auto w = check_winner_continuity(method, p, b, opt)) return w;
                return std::nullopt;
            }
            for (int i = 0; i < 200; ++i) {
                Ballot b = impartial_culture_ballot(p.num_candidates(), rng);
                for (int& x : b) x = p.candidates()[x];
                if (auto w = check_winner_continuity(method, p, b, opt)) return w;
            }
            return std::nullopt;
        }
        case Criterion::clone_independence:
            for (const auto& set : find_clone_sets(p))
                for (int member : set)
                    if (auto w = check_clone_independence(method, p, set, member, opt)) return w;
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace splitcycle
