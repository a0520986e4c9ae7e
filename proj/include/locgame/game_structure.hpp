#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "locgame/coloring.hpp"
#include "locgame/graph.hpp"

namespace locgame {

/// Leveled family of vertex sets. Row 1 holds the singletons; a set enters row
/// i once, for some coloring, every class of that coloring on N[S] already sits
/// in rows below i. Rows are 1-based; sets within a row are in (size, lex) order.
class GameStructure {
public:
    static constexpr int kMaxOrder = 16;

    int order() const { return n_; }
    int height() const { return static_cast<int>(rows_.size()); }
    /// rows()[i - 1] is row i.
    const std::vector<std::vector<VertexSet>>& rows() const { return rows_; }
    /// Row of s, or 0 when s was never placed.
    int row_of(VertexSet s) const { return row_[s.bits()]; }
    /// Indices (0-based) of every coloring that placed s; empty for row 1.
    const std::vector<int>& adjoined(VertexSet s) const;
    std::size_t placed_count() const;
    /// Every nonempty subset of V(G) was placed.
    bool solvable() const;

private:
    friend GameStructure build_structure(const Graph& g, std::span<const Coloring> colorings);

    int n_ = 0;
    std::vector<std::vector<VertexSet>> rows_;
    std::vector<std::uint16_t> row_;
    std::map<std::uint64_t, std::vector<int>> adjoined_;
};

GameStructure build_structure(const Graph& g, std::span<const Coloring> colorings);

/// Top-down pruning of a structure: a set survives when all its proper subsets
/// sit in strictly lower rows and, below the top row, it has a parent among the
/// surviving sets one row up. S is a parent of T when T is monochromatic in one
/// of the colorings adjoined to S.
class ReducedGameStructure {
public:
    int height() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<VertexSet>>& rows() const { return rows_; }
    /// Surviving sets one row below s that have s as a parent.
    const std::vector<VertexSet>& children(VertexSet s) const;
    const std::vector<VertexSet>& parents(VertexSet s) const;

private:
    friend ReducedGameStructure reduce_structure(const GameStructure& gs, std::span<const Coloring> colorings);

    std::vector<std::vector<VertexSet>> rows_;
    std::map<std::uint64_t, std::vector<VertexSet>> children_;
    std::map<std::uint64_t, std::vector<VertexSet>> parents_;
};

ReducedGameStructure reduce_structure(const GameStructure& gs, std::span<const Coloring> colorings);

bool is_solvable(const Graph& g, std::span<const Coloring> colorings);

/// "Row h: ..." down to "Row 1: ...", one line each.
std::string format_rows(const std::vector<std::vector<VertexSet>>& rows, int n);
/// {"rows": [[labels of row 1], ...], "adjoined": {label: [1-based coloring ids]}}
std::string structure_json(const GameStructure& gs);

struct TwoColoringReport {
    int height = 0;
    int bound = 0;          // C(n,2) + 1
    bool height_ok = false;
    /// Reduced-structure sets in rows >= 3 whose size is not 2.
    std::vector<VertexSet> oversized;
    bool ok() const { return height_ok && oversized.empty(); }
};

/// Height bound and pair-only upper rows for a structure built from two colorings.
TwoColoringReport check_two_coloring_structure(const Graph& g, const Coloring& a, const Coloring& b);

}  // namespace locgame
