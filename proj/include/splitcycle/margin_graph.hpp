#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "splitcycle/errors.hpp"
#include "splitcycle/profile.hpp"

namespace splitcycle {

// Antisymmetric matrix of pairwise margins, indexed 0..k-1, with the candidate id
// of each index. Integer scalars enforce the parity invariant of real profiles;
// floating scalars (limit samples) only antisymmetry.
template <typename Scalar>
class MarginGraph {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using scalar_type = Scalar;

    MarginGraph() = default;
    explicit MarginGraph(Matrix m) : MarginGraph(std::move(m), {}) {}
    MarginGraph(Matrix m, std::vector<int> ids) : m_(std::move(m)), ids_(std::move(ids)) {
        if (m_.rows() != m_.cols()) throw InputError("margin matrix must be square");
        if (ids_.empty()) {
            ids_.resize(m_.rows());
            for (int i = 0; i < size(); ++i) ids_[i] = i;
        }
        if (static_cast<Eigen::Index>(ids_.size()) != m_.rows())
            throw InputError("margin matrix and candidate list differ in size");
        validate();
    }

    int size() const { return static_cast<int>(m_.rows()); }
    Scalar operator()(int i, int j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }

    const std::vector<int>& ids() const { return ids_; }
    int id(int i) const { return ids_[i]; }
    int index_of(int c) const {
        auto it = std::find(ids_.begin(), ids_.end(), c);
        if (it == ids_.end()) throw InputError("unknown candidate id " + std::to_string(c));
        return static_cast<int>(it - ids_.begin());
    }
    // Margin between candidate ids.
    Scalar margin(int a, int b) const { return m_(index_of(a), index_of(b)); }

    // Map a sorted list of indices to candidate ids (kept sorted).
    std::vector<int> to_ids(const std::vector<int>& idx) const {
        std::vector<int> out;
        out.reserve(idx.size());
        for (int i : idx) out.push_back(ids_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const MarginGraph& o) const { return ids_ == o.ids_ && m_ == o.m_; }

private:
    void validate() const {
        const int k = size();
        bool any_zero = false, any_odd = false, any_even = false;
        for (int i = 0; i < k; ++i) {
            if (m_(i, i) != Scalar(0)) throw InputError("margin matrix diagonal must be zero");
            for (int j = i + 1; j < k; ++j) {
                if (m_(i, j) != -m_(j, i)) throw InputError("margin matrix is not antisymmetric");
                if constexpr (std::is_integral_v<Scalar>) {
                    if (m_(i, j) == 0) any_zero = true;
                    else if (m_(i, j) % 2 == 0) any_even = true;
                    else any_odd = true;
                }
            }
        }
        if (any_odd && (any_even || any_zero))
            throw InputError("margin parity violated: odd weights must not mix with even or zero margins");
    }

    Matrix m_;
    std::vector<int> ids_;
};

using Margins = MarginGraph<std::int64_t>;

Margins margin_graph(const Profile& p);

// Profile whose margin graph equals `m` exactly (Debord's construction).
Profile realize_debord(const Margins& m);

// Majority edges plus the ordering of edges by margin.
struct QualitativeMarginGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        int rank = 0;  // 0 = smallest margin; equal margins share a rank
        bool operator==(const Edge&) const = default;
    };

    std::vector<int> ids;
    std::vector<Edge> edges;  // sorted by rank, then (from, to)

    bool uniquely_weighted() const;
    // Strict comparison of edge strength.
    bool weaker(const Edge& e, const Edge& f) const { return e.rank < f.rank; }

    // A valid integer margin graph with this edge set and order: weight 2*rank+1,
    // or 2*(rank+1) when some pair has no edge (so the parity invariant holds).
    Margins to_margins() const;
};

template <typename Scalar>
QualitativeMarginGraph qualitative(const MarginGraph<Scalar>& m) {
    struct Raw {
        int i, j;
        Scalar w;
    };
    std::vector<Raw> raw;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (m(i, j) > Scalar(0)) raw.push_back({i, j, m(i, j)});
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.w != b.w) return a.w < b.w;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    QualitativeMarginGraph q;
    q.ids = m.ids();
    int rank = -1;
    for (std::size_t e = 0; e < raw.size(); ++e) {
        if (e == 0 || raw[e].w != raw[e - 1].w) ++rank;
        q.edges.push_back({m.id(raw[e].i), m.id(raw[e].j), rank});
    }
    return q;
}

}  // namespace splitcycle
