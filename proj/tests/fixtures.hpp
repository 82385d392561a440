#pragma once

#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace fixtures {

inline hyperspec::Hypergraph make(int n, std::vector<hyperspec::Edge> edges) {
    return hyperspec::validate(n, std::move(edges));
}

inline hyperspec::Hypergraph single_edge(int k) { return hyperspec::generate(hyperspec::SingleEdge{k}); }
inline hyperspec::Hypergraph k34() { return hyperspec::generate(hyperspec::CompleteUniform{4, 3}); }
inline hyperspec::Hypergraph k23() { return hyperspec::generate(hyperspec::CompleteBipartiteGraph{2, 3}); }
inline hyperspec::Hypergraph star7() { return make(7, {{1, 2, 3}, {3, 4, 5}, {3, 6, 7}}); }
inline hyperspec::Hypergraph gate5() { return make(5, {{1, 2, 3}, {1, 4, 5}, {3, 4, 5}}); }

}  // namespace fixtures
