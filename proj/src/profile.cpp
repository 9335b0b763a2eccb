#include "splitcycle/profile.hpp"

#include <algorithm>

#include "splitcycle/errors.hpp"

namespace splitcycle {

namespace {

std::vector<BallotCount> merge_sorted(std::vector<BallotCount> ballots) {
    std::sort(ballots.begin(), ballots.end(),
              [](const BallotCount& a, const BallotCount& b) { return a.ranking < b.ranking; });
    std::vector<BallotCount> out;
    out.reserve(ballots.size());
    for (auto& b : ballots) {
        if (!out.empty() && out.back().ranking == b.ranking)
            out.back().count += b.count;
        else
            out.push_back(std::move(b));
    }
    return out;
}

std::vector<int> iota_ids(int k) {
    std::vector<int> ids(k);
    for (int i = 0; i < k; ++i) ids[i] = i;
    return ids;
}

}  // namespace

Profile::Profile(std::vector<int> candidates, std::vector<BallotCount> ballots,
                 std::vector<std::pair<int, std::string>> labels)
    : candidates_(std::move(candidates)), labels_(std::move(labels)) {
    std::sort(candidates_.begin(), candidates_.end());
    if (candidates_.empty()) throw InputError("profile needs at least one candidate");
    if (std::adjacent_find(candidates_.begin(), candidates_.end()) != candidates_.end())
        throw InputError("duplicate candidate id");
    if (candidates_.front() < 0) throw InputError("candidate ids must be non-negative");

    for (const auto& b : ballots) {
        if (b.count <= 0) throw InputError("ballot multiplicity must be positive");
        if (b.ranking.size() != candidates_.size())
            throw InputError("ballot does not rank every candidate exactly once");
        auto sorted = b.ranking;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != candidates_) throw InputError("ballot does not rank every candidate exactly once");
        voters_ += b.count;
    }
    if (voters_ < 1) throw InputError("profile needs at least one voter");
    ballots_ = merge_sorted(std::move(ballots));

    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::remove_if(labels_.begin(), labels_.end(),
                                 [this](const auto& l) { return !contains(l.first); }),
                  labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end(), [](const auto& a, const auto& b) {
            return a.first == b.first;
        }) != labels_.end())
        throw InputError("candidate labelled twice");
}

Profile::Profile(int k, std::vector<BallotCount> ballots) : Profile(iota_ids(k), std::move(ballots)) {}

bool Profile::contains(int c) const {
    return std::binary_search(candidates_.begin(), candidates_.end(), c);
}

int Profile::index_of(int c) const {
    auto it = std::lower_bound(candidates_.begin(), candidates_.end(), c);
    if (it == candidates_.end() || *it != c)
        throw InputError("unknown candidate id " + std::to_string(c));
    return static_cast<int>(it - candidates_.begin());
}

std::optional<std::string> Profile::label(int c) const {
    for (const auto& [id, text] : labels_)
        if (id == c) return text;
    return std::nullopt;
}

std::string Profile::name(int c) const {
    auto l = label(c);
    return l ? *l : std::to_string(c);
}

std::int64_t margin(const Profile& p, int a, int b) {
    p.index_of(a);
    p.index_of(b);
    if (a == b) return 0;
    std::int64_t m = 0;
    for (const auto& bc : p.ballots()) {
        for (int c : bc.ranking) {
            if (c == a) { m += bc.count; break; }
            if (c == b) { m -= bc.count; break; }
        }
    }
    return m;
}

Profile combine(const Profile& p, const Profile& q) {
    if (p.candidates() != q.candidates()) throw InputError("combine: candidate sets differ");
    auto ballots = p.ballots();
    ballots.insert(ballots.end(), q.ballots().begin(), q.ballots().end());
    auto labels = p.labels();
    for (const auto& l : q.labels())
        if (!p.label(l.first)) labels.push_back(l);
    return Profile(p.candidates(), std::move(ballots), std::move(labels));
}

Profile replicate(const Profile& p, std::int64_t m) {
    if (m < 1) throw InputError("replicate: multiplier must be at least 1");
    auto ballots = p.ballots();
    for (auto& b : ballots) b.count *= m;
    return Profile(p.candidates(), std::move(ballots), p.labels());
}

Profile restrict_to(const Profile& p, std::vector<int> keep) {
    if (keep.empty()) throw InputError("restrict: empty candidate set");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int c : keep) p.index_of(c);

    std::vector<BallotCount> ballots;
    ballots.reserve(p.ballots().size());
    for (const auto& b : p.ballots()) {
        BallotCount r{{}, b.count};
        r.ranking.reserve(keep.size());
        for (int c : b.ranking)
            if (std::binary_search(keep.begin(), keep.end(), c)) r.ranking.push_back(c);
        ballots.push_back(std::move(r));
    }
    return Profile(std::move(keep), std::move(ballots), p.labels());
}

Profile remove_candidate(const Profile& p, int x) {
    p.index_of(x);
    if (p.num_candidates() < 2) throw InputError("cannot remove the last candidate");
    std::vector<int> keep;
    for (int c : p.candidates())
        if (c != x) keep.push_back(c);
    return restrict_to(p, std::move(keep));
}

Profile reverse(const Profile& p) {
    auto ballots = p.ballots();
    for (auto& b : ballots) std::reverse(b.ranking.begin(), b.ranking.end());
    return Profile(p.candidates(), std::move(ballots), p.labels());
}

Profile add_ballot(const Profile& p, const Ballot& b, std::int64_t count) {
    auto ballots = p.ballots();
    ballots.push_back({b, count});
    return Profile(p.candidates(), std::move(ballots), p.labels());
}

Profile remove_ballot(const Profile& p, const Ballot& b, std::int64_t count) {
    auto ballots = p.ballots();
    auto it = std::find_if(ballots.begin(), ballots.end(),
                           [&](const BallotCount& bc) { return bc.ranking == b; });
    if (it == ballots.end() || it->count < count) throw InputError("remove_ballot: ballot not present");
    it->count -= count;
    if (it->count == 0) ballots.erase(it);
    return Profile(p.candidates(), std::move(ballots), p.labels());
}

Profile make_profile(int k, std::initializer_list<std::pair<std::int64_t, Ballot>> rows) {
    std::vector<BallotCount> ballots;
    for (const auto& [n, b] : rows) ballots.push_back({b, n});
    return Profile(k, std::move(ballots));
}

}  // namespace splitcycle
