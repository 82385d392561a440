#include "hyperspec/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace hyperspec {

namespace {

void require_order(const Hypergraph& h, int cap, const char* what) {
    if (h.n() > cap)
        throw Error(ErrorKind::TooLarge, std::string(what) + " refused: n = " +
                                             std::to_string(h.n()) + " exceeds " +
                                             std::to_string(cap));
}

std::vector<std::uint32_t> adjacency_masks(const Hypergraph& h) {
    std::vector<std::uint32_t> adj(h.n(), 0);
    for (const auto& e : h.edges())
        for (Vertex a : e)
            for (Vertex b : e)
                if (a != b) adj[a - 1] |= 1U << (b - 1);
    return adj;
}

/// BFS 2-colouring of the 2-section, one root per component. Empty when an
/// odd cycle exists.
std::vector<int> two_colouring(const Hypergraph& h) {
    const auto adj = two_section(h);
    const int n = h.n();
    std::vector<int> colour(n, -1);
    for (int root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w) {
                if (!adj[v][w]) continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return {};
                }
            }
        }
    }
    return colour;
}

struct Colouring {
    const std::vector<std::uint32_t>& adj;
    int n;
    int best;
    std::vector<std::uint32_t> classes;
    std::uint32_t coloured = 0;

    int saturation(int v) const {
        int s = 0;
        for (auto c : classes)
            if (c & adj[v]) ++s;
        return s;
    }

    void search(int done) {
        if (done == n) {
            best = std::min(best, static_cast<int>(classes.size()));
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (coloured & (1U << v)) continue;
            const int sat = saturation(v);
            const int deg = std::popcount(adj[v] & ~coloured);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const std::uint32_t bit = 1U << pick;
        coloured |= bit;
        // Index access: the recursion may grow `classes` and move its storage.
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (classes[i] & adj[pick]) continue;
            classes[i] |= bit;
            search(done + 1);
            classes[i] &= ~bit;
        }
        if (static_cast<int>(classes.size()) + 1 < best) {
            classes.push_back(bit);
            search(done + 1);
            classes.pop_back();
        }
        coloured &= ~bit;
    }
};

}  // namespace

int weak_independence_number(const Hypergraph& h) {
    require_order(h, kMaxSubsetSearchOrder, "weak independence search");
    // If S qualifies and s is in S, then N(s) = V \ S exactly. So every
    // qualifying set is V \ N(s) for one of its own members, which prunes the
    // 2^n subset space down to n candidates.
    const auto adj = two_section(h);
    const int n = h.n();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<bool> in(n);
        for (int v = 0; v < n; ++v) in[v] = !adj[s][v];
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!in[u]) continue;
            for (int v = 0; v < n && ok; ++v) {
                if (u == v) continue;
                // independent inside S, complete towards V \ S
                if (in[v] == static_cast<bool>(adj[u][v])) ok = false;
            }
        }
        if (ok) best = std::max(best, static_cast<int>(std::count(in.begin(), in.end(), true)));
    }
    return best;
}

int strong_chromatic_number(const Hypergraph& h) {
    require_order(h, kMaxColoringOrder, "exact colouring");
    const auto adj = adjacency_masks(h);
    Colouring c{adj, h.n(), h.n() + 1, {}, 0};
    c.search(0);
    return c.best;
}

bool is_regular(const Hypergraph& h) {
    const auto inv = invariants(h);
    return inv.d_max == inv.d_min;
}

bool is_linear(const Hypergraph& h) {
    const auto inv = invariants(h);
    return std::all_of(inv.codegrees.begin(), inv.codegrees.end(),
                       [](std::int64_t c) { return c <= 1; });
}

bool is_bipartite_hypergraph(const Hypergraph& h) {
    require_order(h, kMaxSubsetSearchOrder, "bipartition search");
    std::vector<std::uint32_t> edges;
    for (const auto& e : h.edges()) {
        std::uint32_t mask = 0;
        for (Vertex v : e) mask |= 1U << (v - 1);
        edges.push_back(mask);
    }
    const int n = h.n();
    const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
    // Vertex 1 always sits on side 0 (mask bit clear), halving the search.
    for (std::uint32_t side = 0; side < (1U << (n - 1)); ++side) {
        const std::uint32_t one = (side << 1) & full;
        const bool ok = std::all_of(edges.begin(), edges.end(), [&](std::uint32_t e) {
            return (e & one) != 0 && (e & ~one & full) != 0;
        });
        if (ok) return true;
    }
    return false;
}

bool two_section_bipartite(const Hypergraph& h) { return !two_colouring(h).empty(); }

std::optional<std::pair<int, int>> complete_bipartite_sides(const Hypergraph& h) {
    if (h.uniformity() != 2 || h.m() == 0 || !is_connected(h)) return std::nullopt;
    const auto colour = two_colouring(h);
    if (colour.empty()) return std::nullopt;
    const int a = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
    const int b = h.n() - a;
    if (h.m() != a * b) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

bool is_bipartite_semiregular_graph(const Hypergraph& h) {
    if (h.uniformity() != 2 || h.m() == 0) return false;
    const auto colour = two_colouring(h);
    if (colour.empty()) return false;
    const auto inv = invariants(h);
    std::int64_t side_degree[2] = {-1, -1};
    for (int v = 0; v < h.n(); ++v) {
        auto& d = side_degree[colour[v]];
        if (d == -1) d = inv.degrees[v];
        else if (d != inv.degrees[v]) return false;
    }
    return true;
}

StructureProfile structure_profile(const Hypergraph& h) {
    StructureProfile p;
    p.tau = weak_independence_number(h);
    p.chi = strong_chromatic_number(h);
    p.is_regular = is_regular(h);
    p.is_linear = is_linear(h);
    p.is_bipartite_hypergraph = is_bipartite_hypergraph(h);
    p.underlying_graph_bipartite = two_section_bipartite(h);
    p.complete_bipartite_graph = complete_bipartite_sides(h);
    p.is_bipartite_semiregular_graph = is_bipartite_semiregular_graph(h);
    return p;
}

}  // namespace hyperspec
