#include "splitcycle/methods.hpp"

#include <algorithm>
#include <map>

namespace splitcycle {

namespace {

struct NamedMethod {
    Method method;
    std::string_view name;
};

constexpr NamedMethod kNames[] = {
    {Method::split_cycle, "split_cycle"},
    {Method::beat_path, "beat_path"},
    {Method::ranked_pairs, "ranked_pairs"},
    {Method::minimax, "minimax"},
    {Method::copeland, "copeland"},
    {Method::getcha, "getcha"},
    {Method::gocha, "gocha"},
    {Method::uncovered_fishburn, "uncovered_fishburn"},
    {Method::uncovered_gillies, "uncovered_gillies"},
    {Method::ranked_choice, "ranked_choice"},
    {Method::plurality, "plurality"},
};

}  // namespace

const std::vector<Method>& all_methods() {
    static const std::vector<Method> all = [] {
        std::vector<Method> v;
        for (const auto& n : kNames) v.push_back(n.method);
        return v;
    }();
    return all;
}

std::string_view method_name(Method m) {
    for (const auto& n : kNames)
        if (n.method == m) return n.name;
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& n : kNames)
        if (n.name == name) return n.method;
    if (name == "uncovered" || name == "uc_gill") return Method::uncovered_gillies;
    if (name == "uc_fish") return Method::uncovered_fishburn;
    return std::nullopt;
}

bool margin_based(Method m) { return m != Method::ranked_choice && m != Method::plurality; }

bool DefeatRelation::defeats(int a, int b) const {
    auto at = [this](int c) {
        auto it = std::find(ids.begin(), ids.end(), c);
        if (it == ids.end()) throw InputError("unknown candidate id " + std::to_string(c));
        return static_cast<int>(it - ids.begin());
    };
    return adj(at(a), at(b));
}

std::vector<std::pair<int, int>> DefeatRelation::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (adj(a, b)) out.emplace_back(ids[a], ids[b]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> DefeatRelation::undefeated() const {
    std::vector<int> out;
    for (int b = 0; b < size(); ++b)
        if (!adj.col(b).any()) out.push_back(ids[b]);
    std::sort(out.begin(), out.end());
    return out;
}

bool DefeatRelation::acyclic() const {
    // Kahn's algorithm
    const int k = size();
    std::vector<int> indegree(k, 0), ready;
    for (int b = 0; b < k; ++b) {
        indegree[b] = static_cast<int>(adj.col(b).count());
        if (indegree[b] == 0) ready.push_back(b);
    }
    int removed = 0;
    while (!ready.empty()) {
        int a = ready.back();
        ready.pop_back();
        ++removed;
        for (int b = 0; b < k; ++b)
            if (adj(a, b) && --indegree[b] == 0) ready.push_back(b);
    }
    return removed == k;
}

std::vector<int> plurality(const Profile& p) {
    std::map<int, std::int64_t> tally;
    for (int c : p.candidates()) tally[c] = 0;
    for (const auto& b : p.ballots()) tally[b.ranking.front()] += b.count;
    std::int64_t best = 0;
    for (const auto& [c, t] : tally) best = std::max(best, t);
    std::vector<int> out;
    for (const auto& [c, t] : tally)
        if (t == best) out.push_back(c);
    return out;
}

std::vector<int> ranked_choice(const Profile& p) {
    std::vector<int> remaining = p.candidates();
    const std::int64_t n = p.num_voters();
    while (true) {
        std::map<int, std::int64_t> tally;
        for (int c : remaining) tally[c] = 0;
        for (const auto& b : p.ballots())
            for (int c : b.ranking)
                if (tally.count(c)) {
                    tally[c] += b.count;
                    break;
                }
        for (const auto& [c, t] : tally)
            if (2 * t > n) return {c};
        std::int64_t fewest = n;
        for (const auto& [c, t] : tally) fewest = std::min(fewest, t);
        std::vector<int> next;
        for (const auto& [c, t] : tally)
            if (t != fewest) next.push_back(c);
        if (next.empty()) return remaining;
        remaining = std::move(next);
    }
}

std::vector<int> winners(Method method, const Profile& p, const Options& opt) {
    switch (method) {
        case Method::ranked_choice: return ranked_choice(p);
        case Method::plurality: return plurality(p);
        default: return winners(method, margin_graph(p), opt);
    }
}

}  // namespace splitcycle
