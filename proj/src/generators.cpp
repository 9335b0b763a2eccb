#include "splitcycle/generators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace splitcycle {

std::string_view model_name(Model m) {
    switch (m) {
        case Model::impartial_culture: return "impartial_culture";
        case Model::mallows: return "mallows";
        case Model::mallows_two_ref: return "mallows_two_ref";
        case Model::limit: return "limit";
    }
    return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
    if (name == "impartial_culture" || name == "ic") return Model::impartial_culture;
    if (name == "mallows") return Model::mallows;
    if (name == "mallows_two_ref" || name == "mallows2") return Model::mallows_two_ref;
    if (name == "limit") return Model::limit;
    return std::nullopt;
}

void GeneratorConfig::validate() const {
    if (candidates < 1) throw InputError("need at least one candidate");
    if (voters < 1 && model != Model::limit) throw InputError("need at least one voter");
    if ((model == Model::mallows || model == Model::mallows_two_ref) && !(dispersion > 0.0 && dispersion <= 1.0))
        throw InputError("dispersion must lie in (0, 1]");
}

Ballot impartial_culture_ballot(int k, Philox& rng) {
    Ballot b(k);
    std::iota(b.begin(), b.end(), 0);
    for (int i = k - 1; i > 0; --i) std::swap(b[i], b[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return b;
}

Ballot mallows_ballot(const Ballot& reference, double phi, Philox& rng) {
    const int k = static_cast<int>(reference.size());
    Ballot out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        // position i (0 = top) adds j - i inversions and has weight phi^(j - i)
        double total = 0.0, w = 1.0;
        for (int i = j; i >= 0; --i, w *= phi) total += w;
        const double u = rng.uniform() * total;
        int pos = 0;
        double acc = 0.0;
        w = 1.0;
        for (int i = j; i >= 0; --i, w *= phi) {
            acc += w;
            if (u < acc) {
                pos = i;
                break;
            }
        }
        out.insert(out.begin() + pos, reference[j]);
    }
    return out;
}

namespace {

void check_k_n(int k, std::int64_t n) {
    if (k < 1) throw InputError("need at least one candidate");
    if (n < 1) throw InputError("need at least one voter");
}

void check_phi(double phi) {
    if (!(phi > 0.0 && phi <= 1.0)) throw InputError("dispersion must lie in (0, 1]");
}

Ballot identity(int k) {
    Ballot b(k);
    std::iota(b.begin(), b.end(), 0);
    return b;
}

template <typename Draw>
Profile collect(int k, std::int64_t n, std::uint64_t seed, std::uint64_t trial, Draw draw) {
    std::vector<BallotCount> ballots;
    ballots.reserve(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
        Philox rng(seed, trial, static_cast<std::uint32_t>(v));
        ballots.push_back({draw(rng), 1});
    }
    return Profile(k, std::move(ballots));
}

Ballot two_ref_ballot(const Ballot& forward, const Ballot& backward, double phi, Philox& rng) {
    return mallows_ballot(rng.next_u32() & 1u ? backward : forward, phi, rng);
}

}  // namespace

Profile impartial_culture(int k, std::int64_t n, std::uint64_t seed, std::uint64_t trial) {
    check_k_n(k, n);
    return collect(k, n, seed, trial, [k](Philox& rng) { return impartial_culture_ballot(k, rng); });
}

Profile mallows(int k, std::int64_t n, double phi, const Ballot& reference, std::uint64_t seed,
                std::uint64_t trial) {
    check_k_n(k, n);
    check_phi(phi);
    auto sorted = reference;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity(k)) throw InputError("reference must be a permutation of 0..k-1");
    return collect(k, n, seed, trial, [&](Philox& rng) { return mallows_ballot(reference, phi, rng); });
}

Profile mallows_two_ref(int k, std::int64_t n, double phi, std::uint64_t seed, std::uint64_t trial) {
    check_k_n(k, n);
    check_phi(phi);
    const Ballot forward = identity(k);
    const Ballot backward(forward.rbegin(), forward.rend());
    return collect(k, n, seed, trial,
                   [&](Philox& rng) { return two_ref_ballot(forward, backward, phi, rng); });
}

Profile generate(const GeneratorConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    switch (cfg.model) {
        case Model::impartial_culture: return impartial_culture(cfg.candidates, cfg.voters, cfg.seed, trial);
        case Model::mallows:
            return mallows(cfg.candidates, cfg.voters, cfg.dispersion, identity(cfg.candidates), cfg.seed, trial);
        case Model::mallows_two_ref:
            return mallows_two_ref(cfg.candidates, cfg.voters, cfg.dispersion, cfg.seed, trial);
        case Model::limit: break;
    }
    throw CapabilityError("the limit model produces margin graphs, not profiles");
}

Margins generate_margins(const GeneratorConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    if (cfg.model == Model::limit) throw CapabilityError("the limit model produces real-valued margins");
    const int k = cfg.candidates;
    const Ballot forward = identity(k);
    const Ballot backward(forward.rbegin(), forward.rend());
    Margins::Matrix above = Margins::Matrix::Zero(k, k);
    for (std::int64_t v = 0; v < cfg.voters; ++v) {
        Philox rng(cfg.seed, trial, static_cast<std::uint32_t>(v));
        Ballot b;
        switch (cfg.model) {
            case Model::impartial_culture: b = impartial_culture_ballot(k, rng); break;
            case Model::mallows: b = mallows_ballot(forward, cfg.dispersion, rng); break;
            default: b = two_ref_ballot(forward, backward, cfg.dispersion, rng); break;
        }
        for (int r = 0; r < k; ++r)
            for (int s = r + 1; s < k; ++s) ++above(b[r], b[s]);
    }
    return Margins(above - above.transpose());
}

Profile clone_augment(const Profile& p, int c, int copies, Philox& rng) {
    p.index_of(c);
    if (copies < 2) throw InputError("a clone block needs at least two members");
    Ballot block{c};
    for (int i = 1; i < copies; ++i) block.push_back(p.candidates().back() + i);
    auto ids = p.candidates();
    ids.insert(ids.end(), block.begin() + 1, block.end());

    std::vector<BallotCount> ballots;
    for (const auto& bc : p.ballots())
        for (std::int64_t v = 0; v < bc.count; ++v) {
            Ballot order = block;
            for (int i = copies - 1; i > 0; --i)
                std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
            Ballot b;
            for (int x : bc.ranking) {
                if (x == c) b.insert(b.end(), order.begin(), order.end());
                else b.push_back(x);
            }
            ballots.push_back({std::move(b), 1});
        }
    return Profile(std::move(ids), std::move(ballots), p.labels());
}

LimitSampler::LimitSampler(int k) : k_(k) {
    if (k < 1) throw InputError("need at least one candidate");
    const int d = k * (k - 1) / 2;
    cov_ = Eigen::MatrixXd::Zero(d, d);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            const auto [a, b] = pairs[p];
            const auto [c, e] = pairs[q];
            if (p == q) cov_(p, q) = 1.0;
            else if (a == c || b == e) cov_(p, q) = 1.0 / 3.0;
            else if (b == c || a == e) cov_(p, q) = -1.0 / 3.0;
        }
    if (d > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_);
        factor_ = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    }
}

int LimitSampler::pair_index(int a, int b) const {
    // pairs are enumerated row by row: (0,1), (0,2), ..., (1,2), ...
    return a * k_ - a * (a + 1) / 2 + (b - a - 1);
}

MarginGraph<double> LimitSampler::sample(std::uint64_t seed, std::uint64_t trial) const {
    const int d = static_cast<int>(cov_.rows());
    Philox rng(seed, trial, 0);
    Eigen::VectorXd z(d);
    for (int i = 0; i < d; ++i) z(i) = rng.normal();
    const Eigen::VectorXd x = d > 0 ? Eigen::VectorXd(factor_ * z) : Eigen::VectorXd();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k_, k_);
    for (int a = 0; a < k_; ++a)
        for (int b = a + 1; b < k_; ++b) {
            m(a, b) = x(pair_index(a, b));
            m(b, a) = -m(a, b);
        }
    return MarginGraph<double>(m);
}

const LimitSampler& limit_sampler(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<LimitSampler>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[k];
    if (!slot) slot = std::make_unique<LimitSampler>(k);
    return *slot;
}

MarginGraph<double> limit_margin_sample(int k, std::uint64_t seed, std::uint64_t trial) {
    return limit_sampler(k).sample(seed, trial);
}

QualitativeMarginGraph limit_qualitative_margin_graph(int k, std::uint64_t seed, std::uint64_t trial) {
    return qualitative(limit_margin_sample(k, seed, trial));
}

}  // namespace splitcycle
