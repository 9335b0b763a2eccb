#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace splitcycle {

// Most-preferred candidate first.
using Ballot = std::vector<int>;

struct BallotCount {
    Ballot ranking;
    std::int64_t count = 0;

    bool operator==(const BallotCount&) const = default;
};

// A multiset of strict linear ballots over a candidate set.
//
// Ballots are kept merged and sorted, so two profiles with the same multiset
// compare equal. Candidate ids are sorted; freshly built profiles use 0..k-1,
// while remove_candidate/restrict keep the surviving ids.
class Profile {
public:
    Profile() = default;

    // Throws InputError unless every ballot is a permutation of `candidates`,
    // every count is positive and the total is at least one.
    Profile(std::vector<int> candidates, std::vector<BallotCount> ballots,
            std::vector<std::pair<int, std::string>> labels = {});

    // Candidates 0..k-1.
    Profile(int k, std::vector<BallotCount> ballots);

    const std::vector<int>& candidates() const { return candidates_; }
    int num_candidates() const { return static_cast<int>(candidates_.size()); }
    const std::vector<BallotCount>& ballots() const { return ballots_; }
    std::int64_t num_voters() const { return voters_; }

    bool contains(int c) const;
    // Position of `c` in candidates(); throws InputError for unknown ids.
    int index_of(int c) const;

    std::optional<std::string> label(int c) const;
    // Label if present, otherwise the decimal id.
    std::string name(int c) const;
    const std::vector<std::pair<int, std::string>>& labels() const { return labels_; }

    bool operator==(const Profile&) const = default;

private:
    std::vector<int> candidates_;
    std::vector<BallotCount> ballots_;
    std::vector<std::pair<int, std::string>> labels_;
    std::int64_t voters_ = 0;
};

std::int64_t margin(const Profile& p, int a, int b);

Profile combine(const Profile& p, const Profile& q);
Profile replicate(const Profile& p, std::int64_t m);
Profile remove_candidate(const Profile& p, int x);
Profile restrict_to(const Profile& p, std::vector<int> keep);
Profile reverse(const Profile& p);

// One more voter with ballot `b`.
Profile add_ballot(const Profile& p, const Ballot& b, std::int64_t count = 1);
// One fewer voter with ballot `b`; throws InputError if `b` is absent or it is the last voter.
Profile remove_ballot(const Profile& p, const Ballot& b, std::int64_t count = 1);

// Build a profile from rows like {3, {0, 2, 1}}; candidates are 0..k-1.
Profile make_profile(int k, std::initializer_list<std::pair<std::int64_t, Ballot>> rows);

}  // namespace splitcycle
