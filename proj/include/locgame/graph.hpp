#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locgame/vertex_set.hpp"

namespace locgame {

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects loops, repeated edges and
    /// endpoints outside 0..n-1. Edge orientation is irrelevant.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;
    bool is_connected() const;

    /// Whether the vertex set fits in a VertexSet.
    bool fits_vertex_set() const { return order() <= VertexSet::kCapacity; }
    VertexSet vertices() const;
    /// N[v]. Requires fits_vertex_set().
    VertexSet closed_neighborhood(Vertex v) const;
    /// N[S] = S together with every neighbor of S. Requires fits_vertex_set().
    VertexSet closed_neighborhood(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> closed_;
    std::size_t edge_count_ = 0;
};

/// Hop distances between every pair of vertices.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u * n_ + v)]; }
    std::span<const int> row(Vertex u) const { return {d_.data() + static_cast<std::ptrdiff_t>(u) * n_, static_cast<std::size_t>(n_)}; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

struct ParseOptions {
    /// Game routines are only defined on connected graphs, so the parsers
    /// reject disconnected input unless this is set.
    bool allow_disconnected = false;
};

/// Whitespace-separated "u v" pairs, one edge per line; '#' starts a comment.
/// The vertex count is the largest id plus one.
Graph parse_edge_list(std::string_view text, ParseOptions options = {});
std::string format_edge_list(const Graph& g);

/// graph6 decoding; a leading ">>graph6<<" header and trailing whitespace are accepted.
Graph parse_graph6(std::string_view text, ParseOptions options = {});
std::string encode_graph6(const Graph& g);

bool is_tree(const Graph& g);
/// Number of degree-1 vertices of a tree. Throws PreconditionError if g is not a tree.
int leaf_count(const Graph& g);
/// Whether the tree contains the 10-vertex spider (a centre with three children,
/// each having two children) as a subgraph. Throws PreconditionError if g is not a tree.
bool contains_t33(const Graph& g);

/// A tree hung from a root. Levels are distances from the root.
class RootedTree {
public:
    RootedTree(const Graph& tree, Vertex root);

    const Graph& graph() const { return graph_; }
    Vertex root() const { return root_; }
    int order() const { return graph_.order(); }
    Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
    int level(Vertex v) const { return level_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> children(Vertex v) const { return children_[static_cast<std::size_t>(v)]; }
    bool is_leaf(Vertex v) const { return children(v).empty(); }
    /// v together with all of its descendants.
    VertexSet subtree(Vertex v) const { return subtree_[static_cast<std::size_t>(v)]; }
    /// Leaves of the rooted tree inside subtree(v).
    int leaves_below(Vertex v) const { return leaves_below_[static_cast<std::size_t>(v)]; }
    /// Whether a lies on the path from v to the root (a == v included).
    bool is_ancestor(Vertex a, Vertex v) const { return subtree(a).contains(v); }
    /// Deepest vertex u with s contained in subtree(u) minus u, or nullopt if
    /// no such vertex exists (the root belongs to s).
    std::optional<Vertex> strict_meet(VertexSet s) const;

private:
    Graph graph_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<int> level_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<VertexSet> subtree_;
    std::vector<int> leaves_below_;
    std::vector<Vertex> bfs_order_;
};

/// Biconnected components. Every edge lies in exactly one block.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // in set_order
    VertexSet cut_vertices;
};
BlockDecomposition block_decomposition(const Graph& g);
bool is_biconnected(const Graph& g);

/// Outer Hamiltonian cycle of a 2-connected outerplanar graph and its chords.
struct OuterplanarEmbedding {
    std::vector<Vertex> outer_order;  // starts at 0, second entry is the smaller cycle neighbour of 0
    std::vector<Edge> chords;         // sorted, u < v
};
/// Returns nullopt when g is not outerplanar. Throws PreconditionError unless g is 2-connected.
std::optional<OuterplanarEmbedding> outerplanar_embedding(const Graph& g);

}  // namespace locgame
