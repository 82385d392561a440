#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

namespace hyperspec {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidVertexCount: return "InvalidVertexCount";
        case ErrorKind::OutOfRangeVertex: return "OutOfRangeVertex";
        case ErrorKind::EdgeTooSmall: return "EdgeTooSmall";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SubsetEdge: return "SubsetEdge";
        case ErrorKind::NotUniform: return "NotUniform";
        case ErrorKind::UnknownEdge: return "UnknownEdge";
        case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::NotEquitable: return "NotEquitable";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
    }
    return "Unknown";
}

bool Error::is_validation() const noexcept {
    switch (kind_) {
        case ErrorKind::InvalidVertexCount:
        case ErrorKind::OutOfRangeVertex:
        case ErrorKind::EdgeTooSmall:
        case ErrorKind::DuplicateEdge:
        case ErrorKind::SubsetEdge:
        case ErrorKind::NotUniform:
        case ErrorKind::UnknownEdge:
        case ErrorKind::InfeasibleParameters:
        case ErrorKind::InvalidPartition:
            return true;
        default:
            return false;
    }
}

namespace {

std::string edge_text(const Edge& e) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
    out << '}';
    return out.str();
}

}  // namespace

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::find(edges_.begin(), edges_.end(), sorted_edge) != edges_.end();
}

Hypergraph validate(int n, std::vector<Edge> edges, std::optional<int> declared_k) {
    if (n < 1)
        throw Error(ErrorKind::InvalidVertexCount,
                    "vertex count must be positive, got " + std::to_string(n));

    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (Vertex v : e)
            if (v < 1 || v > n)
                throw Error(ErrorKind::OutOfRangeVertex,
                            "vertex " + std::to_string(v) + " outside [1, " +
                                std::to_string(n) + "] in edge " + edge_text(e));
        if (e.size() < 2)
            throw Error(ErrorKind::EdgeTooSmall,
                        "edge " + edge_text(e) + " has fewer than 2 vertices");
    }

    std::set<Edge> seen;
    for (const auto& e : edges)
        if (!seen.insert(e).second)
            throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + edge_text(e));

    // O(m^2 k) nesting check.
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = 0; b < edges.size(); ++b) {
            if (a == b || edges[a].size() >= edges[b].size()) continue;
            if (std::includes(edges[b].begin(), edges[b].end(), edges[a].begin(),
                              edges[a].end()))
                throw Error(ErrorKind::SubsetEdge, "edge " + edge_text(edges[a]) +
                                                       " is contained in " +
                                                       edge_text(edges[b]));
        }

    Hypergraph h;
    h.n_ = n;
    h.edges_ = std::move(edges);
    if (!h.edges_.empty()) {
        const auto k = h.edges_.front().size();
        const bool uniform = std::all_of(h.edges_.begin(), h.edges_.end(),
                                         [k](const Edge& e) { return e.size() == k; });
        if (uniform) h.k_ = static_cast<int>(k);
    } else if (declared_k && *declared_k >= 2) {
        h.k_ = declared_k;
    }
    return h;
}

InvariantSet invariants(const Hypergraph& h) {
    InvariantSet s;
    const int n = h.n();
    s.n = n;
    s.m = h.m();
    s.k = h.uniformity();
    s.degrees.assign(n, 0);
    s.codegrees.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : h.edges()) {
        for (Vertex v : e) ++s.degrees[v - 1];
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                ++s.codegrees[static_cast<std::size_t>(e[a] - 1) * n + (e[b] - 1)];
                ++s.codegrees[static_cast<std::size_t>(e[b] - 1) * n + (e[a] - 1)];
            }
    }

    s.two_degrees.assign(n, 0);
    s.average_degrees.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::int64_t weighted = 0;
        for (int j = 0; j < n; ++j) {
            const auto dij = s.codegrees[static_cast<std::size_t>(i) * n + j];
            if (dij == 0) continue;
            s.two_degrees[i] += s.degrees[j];
            weighted += s.degrees[j] * dij;
            s.alpha += dij * dij;
        }
        if (s.degrees[i] > 0)
            s.average_degrees[i] =
                static_cast<double>(weighted) / static_cast<double>(s.degrees[i]);
        s.degree_sum += s.degrees[i];
        s.z1 += s.degrees[i] * s.degrees[i];
    }
    s.d_max = *std::max_element(s.degrees.begin(), s.degrees.end());
    s.d_min = *std::min_element(s.degrees.begin(), s.degrees.end());
    s.t_min = *std::min_element(s.two_degrees.begin(), s.two_degrees.end());
    s.d_bar = static_cast<double>(s.degree_sum) / n;
    return s;
}

std::vector<std::vector<bool>> two_section(const Hypergraph& h) {
    std::vector<std::vector<bool>> adj(h.n(), std::vector<bool>(h.n(), false));
    for (const auto& e : h.edges())
        for (Vertex a : e)
            for (Vertex b : e)
                if (a != b) adj[a - 1][b - 1] = true;
    return adj;
}

bool is_connected(const Hypergraph& h) {
    const int n = h.n();
    // Vertex-to-edge incidence keeps the walk linear in total edge size.
    std::vector<std::vector<int>> incident(n);
    for (std::size_t e = 0; e < h.edges().size(); ++e)
        for (Vertex v : h.edges()[e]) incident[v - 1].push_back(static_cast<int>(e));

    std::vector<bool> seen_vertex(n, false), seen_edge(h.edges().size(), false);
    std::deque<int> queue{0};
    seen_vertex[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int e : incident[v]) {
            if (seen_edge[e]) continue;
            seen_edge[e] = true;
            for (Vertex w : h.edges()[e])
                if (!seen_vertex[w - 1]) {
                    seen_vertex[w - 1] = true;
                    ++reached;
                    queue.push_back(w - 1);
                }
        }
    }
    return reached == n;
}

namespace {

template <typename F>
void for_each_k_subset(int n, int k, F&& visit) {
    if (k > n || k < 0) return;
    Edge cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        visit(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) return;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

}  // namespace

Hypergraph complement(const Hypergraph& h) {
    const auto k = h.uniformity();
    if (!k) throw Error(ErrorKind::NotUniform, "complement requires a uniform hypergraph");
    std::set<Edge> present(h.edges().begin(), h.edges().end());
    std::vector<Edge> out;
    for_each_k_subset(h.n(), *k, [&](const Edge& e) {
        if (!present.count(e)) out.push_back(e);
    });
    return validate(h.n(), std::move(out), k);
}

Hypergraph delete_edges(const Hypergraph& h, const std::vector<Edge>& removed) {
    std::set<Edge> drop;
    for (Edge e : removed) {
        std::sort(e.begin(), e.end());
        if (!h.has_edge(e))
            throw Error(ErrorKind::UnknownEdge, "edge " + edge_text(e) + " is not present");
        drop.insert(std::move(e));
    }
    std::vector<Edge> kept;
    for (const auto& e : h.edges())
        if (!drop.count(e)) kept.push_back(e);
    return validate(h.n(), std::move(kept), h.uniformity());
}

std::uint64_t binomial(std::int64_t a, std::int64_t b) {
    __extension__ using wide = unsigned __int128;
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    wide r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r = r * static_cast<wide>(a - b + i) / static_cast<wide>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorKind::TooLarge, "binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t edge_hash(const Hypergraph& h) {
    auto edges = h.edges();
    std::sort(edges.begin(), edges.end());
    std::uint64_t x = 1469598103934665603ULL;
    auto feed = [&x](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            x ^= (v >> (8 * byte)) & 0xffU;
            x *= 1099511628211ULL;
        }
    };
    feed(static_cast<std::uint64_t>(h.n()));
    for (const auto& e : edges) {
        feed(e.size());
        for (Vertex v : e) feed(static_cast<std::uint64_t>(v));
    }
    return x;
}

// Generators --------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
    // Reject the low (2^64 mod bound) values so the modulo is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = engine_();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

[[noreturn]] void infeasible(const std::string& what) {
    throw Error(ErrorKind::InfeasibleParameters, what);
}

/// Draws `count` distinct items from `pool` (partial Fisher-Yates).
std::vector<int> draw(Rng& rng, std::vector<int> pool, int count) {
    for (int i = 0; i < count; ++i) {
        const auto j = i + static_cast<int>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

Hypergraph random_connected(const RandomConnectedUniform& p) {
    const auto [n, k, m, seed] = p;
    if (k < 2 || n < k) infeasible("random hypergraph needs 2 <= k <= n");
    const std::int64_t min_edges = n == 1 ? 0 : (n - 1 + (k - 2)) / (k - 1);
    const auto max_edges = binomial(n, k);
    if (m < min_edges || static_cast<std::uint64_t>(m) > max_edges)
        infeasible("edge count " + std::to_string(m) + " outside [" +
                   std::to_string(min_edges) + ", " + std::to_string(max_edges) + "]");

    Rng rng(seed);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;

    std::vector<Edge> edges;
    std::set<Edge> used;
    std::vector<int> covered = draw(rng, all, k);
    std::vector<int> uncovered;
    {
        std::set<int> c(covered.begin(), covered.end());
        for (int v : all)
            if (!c.count(v)) uncovered.push_back(v);
    }
    auto add = [&](Edge e) {
        std::sort(e.begin(), e.end());
        used.insert(e);
        edges.push_back(std::move(e));
    };
    add(covered);

    // Skeleton: each new edge shares one covered vertex and absorbs up to k-1
    // uncovered ones, so the skeleton has the minimum ceil((n-1)/(k-1)) edges.
    while (!uncovered.empty()) {
        const int anchor = covered[rng.below(covered.size())];
        const int fresh = std::min<int>(k - 1, static_cast<int>(uncovered.size()));
        std::vector<int> picked = draw(rng, uncovered, fresh);
        std::vector<int> rest;
        for (int v : covered)
            if (v != anchor) rest.push_back(v);
        std::vector<int> filler = draw(rng, rest, k - 1 - fresh);

        Edge e{anchor};
        e.insert(e.end(), picked.begin(), picked.end());
        e.insert(e.end(), filler.begin(), filler.end());
        std::set<int> p2(picked.begin(), picked.end());
        std::vector<int> still;
        for (int v : uncovered)
            if (!p2.count(v)) still.push_back(v);
        uncovered = std::move(still);
        covered.insert(covered.end(), picked.begin(), picked.end());
        add(std::move(e));
    }

    // Fill by rejection sampling over unused k-subsets.
    while (static_cast<int>(edges.size()) < m) {
        Edge e = draw(rng, all, k);
        std::sort(e.begin(), e.end());
        if (used.count(e)) continue;
        add(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    return validate(n, std::move(edges), k);
}

}  // namespace

Hypergraph generate(const Family& family) {
    return std::visit(
        [](const auto& f) -> Hypergraph {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, CompleteUniform>) {
                if (f.k < 2 || f.n < f.k) infeasible("complete uniform needs 2 <= k <= n");
                std::vector<Edge> edges;
                for_each_k_subset(f.n, f.k, [&](const Edge& e) { edges.push_back(e); });
                return validate(f.n, std::move(edges), f.k);
            } else if constexpr (std::is_same_v<T, SingleEdge>) {
                if (f.k < 2) infeasible("single edge needs k >= 2");
                Edge e(f.k);
                for (int i = 0; i < f.k; ++i) e[i] = i + 1;
                return validate(f.k, {e}, f.k);
            } else if constexpr (std::is_same_v<T, CompleteBipartiteGraph>) {
                if (f.a < 1 || f.b < 1) infeasible("complete bipartite graph needs a, b >= 1");
                std::vector<Edge> edges;
                for (int i = 1; i <= f.a; ++i)
                    for (int j = 1; j <= f.b; ++j) edges.push_back({i, f.a + j});
                return validate(f.a + f.b, std::move(edges), 2);
            } else if constexpr (std::is_same_v<T, CompleteBipartiteUniform>) {
                if (f.m < 2 || f.m1 < 1 || f.m2 < 1 || f.m > f.m1 + f.m2)
                    infeasible("C^m_{m1,m2} needs m >= 2, m1, m2 >= 1, m <= m1 + m2");
                std::vector<Edge> edges;
                for_each_k_subset(f.m1 + f.m2, f.m, [&](const Edge& e) {
                    if (e.front() <= f.m1 && e.back() > f.m1) edges.push_back(e);
                });
                return validate(f.m1 + f.m2, std::move(edges), f.m);
            } else {
                return random_connected(f);
            }
        },
        family);
}

}  // namespace hyperspec
