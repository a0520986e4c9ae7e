#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locgame/generators.hpp"
#include "locgame/graph.hpp"

namespace locgame {

/// A coloring of V(G) kept as its partition into color classes. Blocks are
/// ordered by their smallest vertex, so equal partitions compare equal.
class Coloring {
public:
    Coloring() = default;

    /// Any per-vertex labels; vertices with equal labels share a block.
    template <typename Label>
    static Coloring from_labels(std::span<const Label> labels);
    /// Blocks must be nonempty, disjoint and cover 0..n-1.
    static Coloring from_blocks(int n, std::vector<VertexSet> blocks);

    static Coloring all_singletons(int n);
    static Coloring single_class(int n);

    int order() const { return static_cast<int>(class_of_.size()); }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    int class_of(Vertex v) const { return class_of_[static_cast<std::size_t>(v)]; }
    bool is_discrete() const { return static_cast<int>(blocks_.size()) == order(); }

    /// The probe set that produced a distance coloring, if any.
    const std::optional<VertexSet>& probe() const { return probe_; }
    void set_probe(VertexSet s) { probe_ = s; }

    /// "1|2,3|4,5": blocks separated by '|', 1-based vertices separated by ','.
    std::string to_string() const;

    bool operator==(const Coloring& other) const { return blocks_ == other.blocks_; }

private:
    std::vector<VertexSet> blocks_;
    std::vector<int> class_of_;
    std::optional<VertexSet> probe_;
};

/// Partition by the vector of distances to the vertices of s (ascending order).
Coloring distance_coloring(const DistanceMatrix& d, VertexSet s);
Coloring distance_coloring(const Graph& g, VertexSet s);

/// One coloring per nonempty S with |S| <= k, S taken in (size, lex) order.
/// With dedup, only the first S of each distinct partition is kept.
std::vector<Coloring> distance_colorings(const Graph& g, int k, bool dedup = true);

/// Classes of c restricted to w, ordered by smallest vertex; empty blocks dropped.
std::vector<VertexSet> restrict_to(const Coloring& c, VertexSet w);

/// Whether w lies inside a single class. Throws PreconditionError on empty w.
bool is_monochromatic(const Coloring& c, VertexSet w);

/// Parses one coloring in the "1|2,3|4,5" format over n vertices.
Coloring parse_coloring(std::string_view line, int n);
/// One coloring per non-blank line; '#' starts a comment.
std::vector<Coloring> parse_colorings(std::string_view text, int n);

/// Draws b uniformly from 2..n, then each vertex a color uniformly from 0..b-1.
Coloring random_coloring(int n, Rng& rng);

template <typename Label>
Coloring Coloring::from_labels(std::span<const Label> labels)
{
    const int n = static_cast<int>(labels.size());
    std::vector<VertexSet> blocks;
    std::vector<Vertex> first;
    for (Vertex v = 0; v < n; ++v) {
        std::size_t i = 0;
        while (i < first.size() && !(labels[static_cast<std::size_t>(first[i])] == labels[static_cast<std::size_t>(v)])) ++i;
        if (i == first.size()) {
            first.push_back(v);
            blocks.emplace_back();
        }
        blocks[i].insert(v);
    }
    return from_blocks(n, std::move(blocks));
}

}  // namespace locgame
