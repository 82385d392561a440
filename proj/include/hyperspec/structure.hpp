#pragma once

#include <optional>
#include <utility>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

inline constexpr int kMaxSubsetSearchOrder = 24;
inline constexpr int kMaxColoringOrder = 16;

/// Largest S that is independent and whose every vertex is adjacent to every
/// vertex outside S; 0 when no nonempty S qualifies. TooLarge for n > 24.
int weak_independence_number(const Hypergraph& h);

/// Chromatic number of the 2-section graph by DSATUR branch and bound.
/// TooLarge for n > 16.
int strong_chromatic_number(const Hypergraph& h);

bool is_regular(const Hypergraph& h);
/// Every adjacent pair lies in exactly one edge.
bool is_linear(const Hypergraph& h);
/// Some split V = V1 + V2 has every edge meeting both sides (exhaustive).
bool is_bipartite_hypergraph(const Hypergraph& h);
bool two_section_bipartite(const Hypergraph& h);
/// (a, b) with a <= b when h is the complete bipartite graph K_{a,b}.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Hypergraph& h);
/// k = 2, bipartite, degrees constant on each side (regular bipartite included).
bool is_bipartite_semiregular_graph(const Hypergraph& h);

struct StructureProfile {
    int tau = 0;
    int chi = 0;
    bool is_regular = false;
    bool is_linear = false;
    bool is_bipartite_hypergraph = false;
    bool underlying_graph_bipartite = false;
    std::optional<std::pair<int, int>> complete_bipartite_graph;
    bool is_bipartite_semiregular_graph = false;
};

/// Throws TooLarge when any of the exhaustive searches refuses the input.
StructureProfile structure_profile(const Hypergraph& h);

}  // namespace hyperspec
