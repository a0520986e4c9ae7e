#include "locgame/game_structure.hpp"

#include <algorithm>

#include <json.hpp>

#include "locgame/error.hpp"

namespace locgame {

namespace {

const std::vector<int> kNone;
const std::vector<VertexSet> kNoSets;

std::vector<VertexSet> neighborhood_table(const Graph& g)
{
    const std::size_t count = std::size_t{1} << g.order();
    std::vector<VertexSet> nb(count);
    for (std::size_t mask = 1; mask < count; ++mask) {
        const VertexSet s(mask);
        const Vertex low = s.min();
        nb[mask] = nb[mask & (mask - 1)] | g.closed_neighborhood(low);
    }
    return nb;
}

}  // namespace

const std::vector<int>& GameStructure::adjoined(VertexSet s) const
{
    auto it = adjoined_.find(s.bits());
    return it == adjoined_.end() ? kNone : it->second;
}

std::size_t GameStructure::placed_count() const
{
    std::size_t total = 0;
    for (const auto& row : rows_) total += row.size();
    return total;
}

bool GameStructure::solvable() const
{
    return placed_count() == (std::size_t{1} << n_) - 1;
}

GameStructure build_structure(const Graph& g, std::span<const Coloring> colorings)
{
    const int n = g.order();
    if (n > GameStructure::kMaxOrder) throw CapacityError("game structure limited to 16 vertices");
    if (colorings.empty()) throw PreconditionError("game structure needs at least one coloring");
    for (const Coloring& c : colorings) {
        if (c.order() != n) throw PreconditionError("coloring order does not match the graph");
    }

    GameStructure gs;
    gs.n_ = n;
    const std::size_t count = std::size_t{1} << n;
    gs.row_.assign(count, 0);
    if (n == 0) return gs;

    std::vector<VertexSet> first;
    for (Vertex v = 0; v < n; ++v) {
        first.push_back(VertexSet::singleton(v));
        gs.row_[first.back().bits()] = 1;
    }
    gs.rows_.push_back(std::move(first));

    const std::vector<VertexSet> nb = neighborhood_table(g);
    // settled[j][N]: every class of coloring j on N is already placed.
    std::vector<std::vector<bool>> settled(colorings.size(), std::vector<bool>(count, false));

    for (int row = 2;; ++row) {
        std::vector<VertexSet> fresh;
        for (std::size_t mask = 1; mask < count; ++mask) {
            if (gs.row_[mask] != 0) continue;
            const VertexSet closed = nb[mask];
            std::vector<int> qualifying;
            for (std::size_t j = 0; j < colorings.size(); ++j) {
                if (!settled[j][closed.bits()]) {
                    const auto classes = restrict_to(colorings[j], closed);
                    settled[j][closed.bits()] = std::all_of(classes.begin(), classes.end(),
                                                            [&](VertexSet b) { return gs.row_[b.bits()] != 0; });
                }
                if (settled[j][closed.bits()]) qualifying.push_back(static_cast<int>(j));
            }
            if (qualifying.empty()) continue;
            fresh.push_back(VertexSet(mask));
            gs.adjoined_.emplace(mask, std::move(qualifying));
        }
        if (fresh.empty()) break;
        for (VertexSet s : fresh) gs.row_[s.bits()] = static_cast<std::uint16_t>(row);
        std::sort(fresh.begin(), fresh.end(), set_order_less);
        gs.rows_.push_back(std::move(fresh));
    }
    return gs;
}

bool is_solvable(const Graph& g, std::span<const Coloring> colorings)
{
    return build_structure(g, colorings).solvable();
}

const std::vector<VertexSet>& ReducedGameStructure::children(VertexSet s) const
{
    auto it = children_.find(s.bits());
    return it == children_.end() ? kNoSets : it->second;
}

const std::vector<VertexSet>& ReducedGameStructure::parents(VertexSet s) const
{
    auto it = parents_.find(s.bits());
    return it == parents_.end() ? kNoSets : it->second;
}

ReducedGameStructure reduce_structure(const GameStructure& gs, std::span<const Coloring> colorings)
{
    ReducedGameStructure out;
    const int h = gs.height();
    out.rows_.assign(static_cast<std::size_t>(h), {});

    auto subsets_lower = [&](VertexSet s, int row) {
        const std::uint64_t full = s.bits();
        for (std::uint64_t sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
            const int r = gs.row_of(VertexSet(sub));
            if (r == 0 || r >= row) return false;
        }
        return true;
    };

    for (int row = h; row >= 1; --row) {
        auto& kept = out.rows_[static_cast<std::size_t>(row - 1)];
        for (VertexSet s : gs.rows()[static_cast<std::size_t>(row - 1)]) {
            if (!subsets_lower(s, row)) continue;
            if (row == h) {
                kept.push_back(s);
                continue;
            }
            std::vector<VertexSet> parents;
            for (VertexSet p : out.rows_[static_cast<std::size_t>(row)]) {
                const auto& adj = gs.adjoined(p);
                const bool linked = std::any_of(adj.begin(), adj.end(), [&](int j) {
                    return is_monochromatic(colorings[static_cast<std::size_t>(j)], s);
                });
                if (linked) parents.push_back(p);
            }
            if (parents.empty()) continue;
            kept.push_back(s);
            for (VertexSet p : parents) out.children_[p.bits()].push_back(s);
            out.parents_.emplace(s.bits(), std::move(parents));
        }
    }
    return out;
}

std::string format_rows(const std::vector<std::vector<VertexSet>>& rows, int n)
{
    std::string out;
    for (std::size_t i = rows.size(); i-- > 0;) {
        out += "Row " + std::to_string(i + 1) + ":";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            out += j == 0 ? " " : ",";
            out += set_label(rows[i][j], n);
        }
        out += '\n';
    }
    return out;
}

std::string structure_json(const GameStructure& gs)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    nlohmann::ordered_json adjoined = nlohmann::ordered_json::object();
    for (const auto& row : gs.rows()) {
        nlohmann::ordered_json labels = nlohmann::ordered_json::array();
        for (VertexSet s : row) {
            const std::string label = set_label(s, gs.order());
            labels.push_back(label);
            const auto& adj = gs.adjoined(s);
            if (adj.empty()) continue;
            nlohmann::ordered_json ids = nlohmann::ordered_json::array();
            for (int j : adj) ids.push_back(j + 1);
            adjoined[label] = std::move(ids);
        }
        rows.push_back(std::move(labels));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    doc["adjoined"] = std::move(adjoined);
    return doc.dump();
}

TwoColoringReport check_two_coloring_structure(const Graph& g, const Coloring& a, const Coloring& b)
{
    const std::vector<Coloring> pair{a, b};
    const GameStructure gs = build_structure(g, pair);
    const ReducedGameStructure reduced = reduce_structure(gs, pair);
    TwoColoringReport report;
    const int n = g.order();
    report.height = gs.height();
    report.bound = n * (n - 1) / 2 + 1;
    report.height_ok = report.height <= report.bound;
    for (std::size_t i = 2; i < reduced.rows().size(); ++i) {
        for (VertexSet s : reduced.rows()[i]) {
            if (s.size() != 2) report.oversized.push_back(s);
        }
    }
    return report;
}

}  // namespace locgame
