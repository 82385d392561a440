#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

/// Vertex ids are 1-based throughout the public surface.
using Vertex = int;
using Edge = std::vector<Vertex>;

/// A finite simple hypergraph: vertices 1..n and a list of hyperedges, each a
/// strictly increasing list of vertex ids. Instances only come out of
/// validate(), so every live value satisfies the simplicity invariants.
class Hypergraph {
public:
    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// k when every edge has exactly k vertices. An edgeless hypergraph keeps
    /// the uniformity it was declared with (complements of K^k_n need it).
    std::optional<int> uniformity() const noexcept { return k_; }

    bool has_edge(const Edge& sorted_edge) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

    friend Hypergraph validate(int n, std::vector<Edge> edges,
                               std::optional<int> declared_k);

private:
    Hypergraph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<int> k_;
};

/// Normalizes each edge (sort, drop repeated ids) and checks range, size,
/// duplicates and nesting. Edge order is preserved.
Hypergraph validate(int n, std::vector<Edge> edges,
                    std::optional<int> declared_k = std::nullopt);

/// Scalar combinatorial data. Vectors are indexed by vertex id - 1.
struct InvariantSet {
    int n = 0;
    int m = 0;
    std::optional<int> k;
    std::vector<std::int64_t> degrees;
    /// n*n row-major co-degree table, zero diagonal.
    std::vector<std::int64_t> codegrees;
    std::vector<std::int64_t> two_degrees;
    std::vector<double> average_degrees;
    std::int64_t degree_sum = 0;
    std::int64_t z1 = 0;
    std::int64_t alpha = 0;
    std::int64_t d_max = 0;
    std::int64_t d_min = 0;
    std::int64_t t_min = 0;
    double d_bar = 0.0;

    std::int64_t codegree(int i, int j) const {
        return codegrees[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
};

InvariantSet invariants(const Hypergraph& h);

/// Vertex adjacency (the 2-section) as an n*n boolean table, 0-based.
std::vector<std::vector<bool>> two_section(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

/// All k-subsets of V that are not edges of h, in lexicographic order.
Hypergraph complement(const Hypergraph& h);

Hypergraph delete_edges(const Hypergraph& h, const std::vector<Edge>& removed);

/// C(a, b) with C(a, b) = 0 when b < 0 or a < b.
std::uint64_t binomial(std::int64_t a, std::int64_t b);

/// 64-bit FNV-1a digest of n and the lexicographically sorted edge list.
std::uint64_t edge_hash(const Hypergraph& h);

// Generators ------------------------------------------------------------

struct CompleteUniform {
    int n;
    int k;
};
struct SingleEdge {
    int k;
};
struct CompleteBipartiteGraph {
    int a;
    int b;
};
/// m-uniform complete bipartite hypergraph C^m_{m1,m2}.
struct CompleteBipartiteUniform {
    int m;
    int m1;
    int m2;
};
struct RandomConnectedUniform {
    int n;
    int k;
    int m;
    std::uint64_t seed;
};

using Family = std::variant<CompleteUniform, SingleEdge, CompleteBipartiteGraph,
                            CompleteBipartiteUniform, RandomConnectedUniform>;

Hypergraph generate(const Family& family);

/// Deterministic 64-bit generator used by every randomized routine:
/// std::mt19937_64 with an explicit, platform independent range reduction
/// (rejection on the low end), so output is identical across standard
/// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace hyperspec
