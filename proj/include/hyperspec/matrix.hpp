#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Dense real symmetric matrix, row-major. Writes go through set(), which
/// mirrors the entry, so storage is symmetric by construction.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int order) : order_(order), data_(static_cast<std::size_t>(order) * order, 0.0) {}

    int order() const noexcept { return order_; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, double v) {
        data_[index(i, j)] = v;
        data_[index(j, i)] = v;
    }
    void add(int i, int j, double v) {
        data_[index(i, j)] += v;
        if (i != j) data_[index(j, i)] += v;
    }
    std::span<const double> entries() const noexcept { return data_; }
    std::span<const double> row(int i) const {
        return std::span<const double>(data_).subspan(index(i, 0), order_);
    }

    double trace() const;
    double row_sum(int i) const;

    static SymmetricMatrix identity(int order);

    /// JSON object {"order": n, "entries": [row-major values]}.
    std::string to_json() const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * order_ + j;
    }
    int order_ = 0;
    std::vector<double> data_;
};

/// Indexing is 0-based.
SymmetricMatrix adjacency_matrix(const Hypergraph& h);
SymmetricMatrix degree_matrix(const Hypergraph& h);
SymmetricMatrix laplacian(const Hypergraph& h);
SymmetricMatrix signless_laplacian(const Hypergraph& h);

/// Disjoint nonempty blocks of 1-based vertex ids covering 1..n.
class Partition {
public:
    static Partition make(int n, std::vector<std::vector<Vertex>> blocks);
    static Partition singletons(int n);

    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    /// Block index of vertex v (1-based id).
    int block_of(Vertex v) const { return owner_[v - 1]; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<int> owner_;
};

struct EquitableViolation {
    Vertex vertex;
    int block;
    double expected;
    double actual;
};

struct EquitableCheck {
    /// t*t row-major block row sums m_pq when the partition is equitable.
    std::optional<std::vector<double>> constants;
    std::optional<EquitableViolation> violation;
    bool equitable() const noexcept { return constants.has_value(); }
};

inline constexpr double kEquitableTolerance = 1e-10;

EquitableCheck is_equitable(const Hypergraph& h, const Partition& p);

/// Coarsest equitable partition of A(h) via iterated block-sum refinement
/// (exact: scaled adjacency weights are integers). Blocks ordered by their
/// smallest vertex.
Partition coarsest_equitable_partition(const Hypergraph& h);

/// The t*t matrix M with M_pq = -m_pq (p != q) and M_pp = sum_s m_ps - m_pp.
/// Not symmetric in general, but similar to a symmetric matrix because
/// |V_p| m_pq = |V_q| m_qp.
class QuotientMatrix {
public:
    int order() const noexcept { return order_; }
    double operator()(int p, int q) const { return entries_[static_cast<std::size_t>(p) * order_ + q]; }
    double constant(int p, int q) const { return constants_[static_cast<std::size_t>(p) * order_ + q]; }
    const std::vector<int>& block_sizes() const noexcept { return sizes_; }

    /// D^{1/2} M D^{-1/2} with D = diag(|V_p|); shares M's spectrum.
    SymmetricMatrix symmetrized() const;

    friend QuotientMatrix quotient_matrix(const Hypergraph& h, const Partition& p);

private:
    int order_ = 0;
    std::vector<double> entries_;
    std::vector<double> constants_;
    std::vector<int> sizes_;
};

QuotientMatrix quotient_matrix(const Hypergraph& h, const Partition& p);

/// Min and max row sums of P(Q); coefficients are constant term first.
std::pair<double, double> row_sum_bracket(const SymmetricMatrix& q, std::span<const double> poly);

/// Coefficients (constant term first, degree n+1) of the characteristic
/// polynomial of [[lambda I_n, x], [y^T, a]], from its closed form
/// (t - lambda)^(n-1) (t^2 - (a + lambda) t + a lambda - y.x).
std::vector<double> bordered_charpoly(double lambda, std::span<const double> x,
                                      std::span<const double> y, double a);

}  // namespace hyperspec
