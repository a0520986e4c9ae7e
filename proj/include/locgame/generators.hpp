#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

/// Canonical AHU code of a tree, computed at its centre(s). Two trees are
/// isomorphic iff their codes are equal.
std::string canonical_tree_code(const Graph& tree);

/// Canonical labelling of a small graph by individualisation-refinement.
/// The returned graph is isomorphic to g, and isomorphic inputs give equal outputs.
Graph canonical_form(const Graph& g);

/// Upper-triangle adjacency bits of the canonical form; an isomorphism invariant
/// that separates non-isomorphic graphs. Requires order() <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of trees on n vertices, in
/// canonical-code order. 1 <= n <= 14.
std::vector<Graph> generate_trees(int n);

/// One representative per isomorphism class of connected graphs on n vertices.
/// 1 <= n <= 8.
std::vector<Graph> generate_connected_graphs(int n);

/// The cycle 0..n-1 plus every subset of pairwise non-crossing chords, one graph
/// per subset, ordered by the sorted chord list. With dedup, only the first
/// graph of each isomorphism class is kept. 3 <= n <= 10.
std::vector<Graph> generate_2connected_outerplanar(int n, bool dedup = false);

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

/// Random recursive tree plus each remaining vertex pair with probability 1/3.
Graph random_connected_graph(int n, Rng& rng);

/// Outerplanar graph built by gluing random blocks (single edges, or cycles with
/// random non-crossing chords) at existing vertices. The vertex count is drawn
/// uniformly from [min_n, max_n].
Graph random_block_outerplanar(int min_n, int max_n, Rng& rng);

/// Graphs from the literature on this game, by name:
///   T33            10-vertex spider: root 0, children 1,2,3, leaves 4..9
///   Gm:m           T33 with m-2 extra leaves on vertex 1 (m >= 2)
///   star:n         K_{1,n} with centre 0
///   path:n         path on n vertices
///   cycle:n        cycle on n >= 3 vertices
///   complete:n     K_n
///   example41      the 5-vertex tree 0-1, 0-2, 2-3, 2-4
Graph build_named(std::string_view name, std::optional<int> param = std::nullopt);
/// Parses "NAME" or "NAME:PARAM" and forwards to build_named.
Graph parse_named(std::string_view text);

}  // namespace locgame
