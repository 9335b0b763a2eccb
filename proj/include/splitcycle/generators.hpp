#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitcycle/margin_graph.hpp"
#include "splitcycle/profile.hpp"
#include "splitcycle/rng.hpp"

namespace splitcycle {

enum class Model { impartial_culture, mallows, mallows_two_ref, limit };

std::string_view model_name(Model m);
// Also accepts "ic" and "mallows2".
std::optional<Model> parse_model(std::string_view name);

struct GeneratorConfig {
    Model model = Model::impartial_culture;
    int candidates = 3;
    std::int64_t voters = 1;  // unused for the limit model
    double dispersion = 0.8;  // Mallows only
    std::uint64_t seed = 0;

    // Throws InputError on k < 1, n < 1 or dispersion outside (0, 1].
    void validate() const;
};

// One ballot per voter stream; voter v of trial t draws from Philox(seed, t, v).
Ballot impartial_culture_ballot(int k, Philox& rng);
// Repeated insertion: the j-th reference candidate goes to position i <= j with
// probability proportional to phi^(j - i).
Ballot mallows_ballot(const Ballot& reference, double phi, Philox& rng);

Profile impartial_culture(int k, std::int64_t n, std::uint64_t seed, std::uint64_t trial = 0);
Profile mallows(int k, std::int64_t n, double phi, const Ballot& reference, std::uint64_t seed,
                std::uint64_t trial = 0);
// Each voter picks the identity order or its reverse with a fair coin, then samples Mallows.
Profile mallows_two_ref(int k, std::int64_t n, double phi, std::uint64_t seed, std::uint64_t trial = 0);

// Profile for trial `trial` of a ballot model (not the limit model).
Profile generate(const GeneratorConfig& cfg, std::uint64_t trial);
// margin_graph(generate(cfg, trial)) without materialising the profile.
Margins generate_margins(const GeneratorConfig& cfg, std::uint64_t trial);

// Replaces candidate c by a block of `copies` clones: c itself plus new ids after the
// current maximum. Every voter orders the block independently and uniformly.
Profile clone_augment(const Profile& p, int c, int copies, Philox& rng);

// Gaussian limit of impartial-culture margins as the number of voters grows: one
// variable per pair a < b with unit variance, covariance 1/3 for pairs sharing their
// first or their second element, -1/3 for chained pairs (a,b),(b,c), 0 if disjoint.
class LimitSampler {
public:
    explicit LimitSampler(int k);

    int candidates() const { return k_; }
    const Eigen::MatrixXd& covariance() const { return cov_; }
    // Pair (a, b), a < b, to variable index.
    int pair_index(int a, int b) const;

    MarginGraph<double> sample(std::uint64_t seed, std::uint64_t trial) const;

private:
    int k_;
    Eigen::MatrixXd cov_;
    Eigen::MatrixXd factor_;  // factor * factor^T = cov
};

// Shared sampler for k (built once per k, thread safe).
const LimitSampler& limit_sampler(int k);

MarginGraph<double> limit_margin_sample(int k, std::uint64_t seed, std::uint64_t trial = 0);
QualitativeMarginGraph limit_qualitative_margin_graph(int k, std::uint64_t seed, std::uint64_t trial = 0);

}  // namespace splitcycle
