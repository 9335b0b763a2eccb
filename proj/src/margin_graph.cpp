#include "splitcycle/margin_graph.hpp"

#include <algorithm>

namespace splitcycle {

Margins margin_graph(const Profile& p) {
    const int k = p.num_candidates();
    const auto& ids = p.candidates();
    std::vector<int> slot(ids.back() + 1, -1);
    for (int i = 0; i < k; ++i) slot[ids[i]] = i;

    // above(i, j) = number of voters ranking i over j
    Margins::Matrix above = Margins::Matrix::Zero(k, k);
    std::vector<int> idx(k);
    for (const auto& b : p.ballots()) {
        for (int r = 0; r < k; ++r) idx[r] = slot[b.ranking[r]];
        for (int r = 0; r < k; ++r)
            for (int s = r + 1; s < k; ++s) above(idx[r], idx[s]) += b.count;
    }
    return Margins(above - above.transpose(), ids);
}

namespace {

// Ballots (a, b, sigma) and (reverse sigma, a, b): together +2 on (a,b), 0 elsewhere.
void add_pair(std::vector<BallotCount>& out, const std::vector<int>& ids, int a, int b,
              std::int64_t copies) {
    Ballot first{a, b}, second;
    for (int c : ids)
        if (c != a && c != b) first.push_back(c);
    second.assign(first.rbegin(), first.rend() - 2);
    second.push_back(a);
    second.push_back(b);
    out.push_back({std::move(first), copies});
    out.push_back({std::move(second), copies});
}

}  // namespace

Profile realize_debord(const Margins& m) {
    const int k = m.size();
    if (k == 0) throw InputError("empty margin graph");
    std::vector<int> ids = m.ids();
    Margins::Matrix residual = m.matrix();
    std::vector<BallotCount> ballots;

    bool odd = false;
    for (int i = 0; i < k && !odd; ++i)
        for (int j = 0; j < k; ++j)
            if (residual(i, j) % 2 != 0) { odd = true; break; }

    if (odd) {
        // seed ballot in index order; the residual becomes even
        Ballot seed(ids.begin(), ids.end());
        ballots.push_back({seed, 1});
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                residual(i, j) -= 1;
                residual(j, i) += 1;
            }
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (residual(i, j) > 0) add_pair(ballots, ids, ids[i], ids[j], residual(i, j) / 2);

    if (ballots.empty()) {
        Ballot b(ids.begin(), ids.end());
        ballots.push_back({b, 1});
        std::reverse(b.begin(), b.end());
        ballots.push_back({b, 1});
    }
    return Profile(std::move(ids), std::move(ballots));
}

bool QualitativeMarginGraph::uniquely_weighted() const {
    for (std::size_t e = 1; e < edges.size(); ++e)
        if (edges[e].rank == edges[e - 1].rank) return false;
    return true;
}

Margins QualitativeMarginGraph::to_margins() const {
    const int k = static_cast<int>(ids.size());
    const bool complete = static_cast<int>(edges.size()) == k * (k - 1) / 2;
    Margins::Matrix w = Margins::Matrix::Zero(k, k);
    auto at = [&](int c) { return static_cast<int>(std::find(ids.begin(), ids.end(), c) - ids.begin()); };
    for (const auto& e : edges) {
        const std::int64_t v = complete ? 2 * e.rank + 1 : 2 * (e.rank + 1);
        w(at(e.from), at(e.to)) = v;
        w(at(e.to), at(e.from)) = -v;
    }
    return Margins(w, ids);
}

}  // namespace splitcycle
