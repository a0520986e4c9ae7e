#include "locgame/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "locgame/error.hpp"

namespace locgame {

Coloring Coloring::from_blocks(int n, std::vector<VertexSet> blocks)
{
    if (n < 0 || n > VertexSet::kCapacity) throw CapacityError("colorings are limited to 64 vertices");
    Coloring c;
    c.class_of_.assign(static_cast<std::size_t>(n), -1);
    VertexSet seen;
    for (VertexSet b : blocks) {
        if (b.empty()) throw PreconditionError("coloring has an empty block");
        if (b.intersects(seen)) throw PreconditionError("coloring blocks overlap");
        if (!b.is_subset_of(VertexSet::full(n))) throw PreconditionError("coloring block outside the vertex range");
        seen |= b;
    }
    if (seen != VertexSet::full(n)) throw PreconditionError("coloring does not cover every vertex");
    std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex v : blocks[i]) c.class_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    c.blocks_ = std::move(blocks);
    return c;
}

Coloring Coloring::all_singletons(int n)
{
    std::vector<VertexSet> blocks;
    for (Vertex v = 0; v < n; ++v) blocks.push_back(VertexSet::singleton(v));
    return from_blocks(n, std::move(blocks));
}

Coloring Coloring::single_class(int n)
{
    if (n == 0) return from_blocks(0, {});
    return from_blocks(n, {VertexSet::full(n)});
}

std::string Coloring::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) out += '|';
        out += set_list(blocks_[i]);
    }
    return out;
}

Coloring distance_coloring(const DistanceMatrix& d, VertexSet s)
{
    if (s.empty()) throw PreconditionError("distance coloring needs a nonempty probe set");
    const int n = d.order();
    if (!s.is_subset_of(VertexSet::full(n))) throw PreconditionError("probe set outside the vertex range");
    std::vector<std::vector<int>> vectors(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex p : s) vectors[static_cast<std::size_t>(v)].push_back(d(p, v));
    }
    Coloring c = Coloring::from_labels(std::span<const std::vector<int>>(vectors));
    c.set_probe(s);
    return c;
}

Coloring distance_coloring(const Graph& g, VertexSet s)
{
    return distance_coloring(DistanceMatrix(g), s);
}

std::vector<Coloring> distance_colorings(const Graph& g, int k, bool dedup)
{
    const int n = g.order();
    if (k < 1 || k > n) throw PreconditionError("distance_colorings: k must lie in 1..n");
    if (!g.fits_vertex_set()) throw CapacityError("distance colorings limited to 64 vertices");
    const DistanceMatrix d(g);
    std::vector<Coloring> out;
    std::vector<int> pick;
    auto emit = [&](auto&& self, int size, Vertex from) -> void {
        if (static_cast<int>(pick.size()) == size) {
            VertexSet s;
            for (Vertex v : pick) s.insert(v);
            Coloring c = distance_coloring(d, s);
            if (!dedup || std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, size, v + 1);
            pick.pop_back();
        }
    };
    for (int size = 1; size <= k; ++size) emit(emit, size, 0);
    return out;
}

std::vector<VertexSet> restrict_to(const Coloring& c, VertexSet w)
{
    std::vector<VertexSet> out;
    for (VertexSet b : c.blocks()) {
        VertexSet part = b & w;
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

bool is_monochromatic(const Coloring& c, VertexSet w)
{
    if (w.empty()) throw PreconditionError("is_monochromatic: empty set");
    return w.is_subset_of(c.blocks()[static_cast<std::size_t>(c.class_of(w.min()))]);
}

Coloring parse_coloring(std::string_view line, int n)
{
    std::vector<VertexSet> blocks;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t bar = line.find('|', pos);
        if (bar == std::string_view::npos) bar = line.size();
        std::string_view part = line.substr(pos, bar - pos);
        VertexSet block;
        std::size_t i = 0;
        while (i <= part.size()) {
            std::size_t comma = part.find(',', i);
            if (comma == std::string_view::npos) comma = part.size();
            std::string_view token = part.substr(i, comma - i);
            while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
            while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) token.remove_suffix(1);
            int v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || v < 1 || v > n) {
                throw ParseError("coloring: bad vertex '" + std::string(token) + "'");
            }
            if (block.contains(v - 1)) throw ParseError("coloring: vertex repeated in a block");
            block.insert(v - 1);
            i = comma + 1;
        }
        blocks.push_back(block);
        pos = bar + 1;
    }
    try {
        return Coloring::from_blocks(n, std::move(blocks));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("coloring: ") + e.what());
    }
}

std::vector<Coloring> parse_colorings(std::string_view text, int n)
{
    std::vector<Coloring> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        out.push_back(parse_coloring(line, n));
    }
    if (out.empty()) throw ParseError("coloring file has no colorings");
    return out;
}

Coloring random_coloring(int n, Rng& rng)
{
    if (n < 2) throw PreconditionError("random_coloring: n must be at least 2");
    const int b = rng.uniform(2, n);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& x : labels) x = rng.uniform(0, b - 1);
    return Coloring::from_labels(std::span<const int>(labels));
}

}  // namespace locgame
