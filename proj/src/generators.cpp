#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "locgame/error.hpp"
#include "locgame/generators.hpp"

namespace locgame {

namespace {

struct TreeLabelling {
    std::string code;
    std::vector<Vertex> preorder;
};

std::string subtree_code(const Graph& g, Vertex v, Vertex parent, std::vector<std::string>& codes)
{
    std::vector<std::string> parts;
    for (Vertex w : g.neighbors(v)) {
        if (w != parent) parts.push_back(subtree_code(g, w, v, codes));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ')';
    codes[static_cast<std::size_t>(v)] = out;
    return out;
}

void canonical_preorder(const Graph& g, Vertex v, Vertex parent, const std::vector<std::string>& codes,
                        std::vector<Vertex>& order)
{
    order.push_back(v);
    std::vector<Vertex> kids;
    for (Vertex w : g.neighbors(v)) {
        if (w != parent) kids.push_back(w);
    }
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
        return codes[static_cast<std::size_t>(a)] < codes[static_cast<std::size_t>(b)];
    });
    for (Vertex w : kids) canonical_preorder(g, w, v, codes, order);
}

TreeLabelling label_tree(const Graph& g)
{
    TreeLabelling best;
    for (Vertex c = 0; c < g.order(); ++c) {
        std::vector<std::string> codes(static_cast<std::size_t>(g.order()));
        std::string code = subtree_code(g, c, -1, codes);
        if (!best.preorder.empty() && code >= best.code) continue;
        best.code = std::move(code);
        best.preorder.clear();
        canonical_preorder(g, c, -1, codes, best.preorder);
    }
    return best;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order)
{
    std::vector<Vertex> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = pos[static_cast<std::size_t>(e.u)];
        Vertex b = pos[static_cast<std::size_t>(e.v)];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(g.order(), edges);
}

Graph with_extra_vertex(const Graph& g, std::span<const Vertex> attach)
{
    std::vector<Edge> edges = g.edges();
    for (Vertex v : attach) edges.push_back({v, g.order()});
    return Graph::from_edges(g.order() + 1, edges);
}

bool chords_cross(Edge a, Edge b)
{
    return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

std::vector<Edge> cycle_edges(int n, int offset = 0)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({offset + i, offset + (i + 1) % n});
    return edges;
}

Graph t33_plus(int extra_leaves)
{
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}};
    for (int i = 0; i < extra_leaves; ++i) edges.push_back({1, 10 + i});
    return Graph::from_edges(10 + extra_leaves, edges);
}

}  // namespace

std::vector<Graph> generate_trees(int n)
{
    if (n < 1 || n > 14) throw PreconditionError("generate_trees: n must lie in 1..14");
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> seen;
        for (const Graph& t : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                const Vertex attach[] = {v};
                Graph grown = with_extra_vertex(t, attach);
                TreeLabelling lab = label_tree(grown);
                if (!seen.contains(lab.code)) seen.emplace(lab.code, relabel(grown, lab.preorder));
            }
        }
        level.clear();
        for (auto& [code, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> generate_connected_graphs(int n)
{
    if (n < 1 || n > 8) throw PreconditionError("generate_connected_graphs: n must lie in 1..8");
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::map<std::uint64_t, Graph> seen;
        for (const Graph& g : level) {
            const int prev = g.order();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << prev); ++mask) {
                std::vector<Vertex> attach;
                for (Vertex v : VertexSet(mask)) attach.push_back(v);
                Graph grown = with_extra_vertex(g, attach);
                const std::uint64_t code = canonical_code(grown);
                if (!seen.contains(code)) seen.emplace(code, canonical_form(grown));
            }
        }
        level.clear();
        for (auto& [code, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> generate_2connected_outerplanar(int n, bool dedup)
{
    if (n < 3 || n > 10) throw PreconditionError("generate_2connected_outerplanar: n must lie in 3..10");
    std::vector<Edge> candidates;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (!(i == 0 && j == n - 1)) candidates.push_back({i, j});
        }
    }
    std::vector<std::vector<Edge>> subsets;
    std::vector<Edge> chosen;
    auto extend = [&](auto&& self, std::size_t next) -> void {
        subsets.push_back(chosen);
        for (std::size_t i = next; i < candidates.size(); ++i) {
            const bool ok = std::none_of(chosen.begin(), chosen.end(),
                                         [&](Edge c) { return chords_cross(c, candidates[i]); });
            if (!ok) continue;
            chosen.push_back(candidates[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(subsets.begin(), subsets.end());

    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    const std::vector<Edge> cycle = cycle_edges(n);
    for (const auto& chords : subsets) {
        std::vector<Edge> edges = cycle;
        edges.insert(edges.end(), chords.begin(), chords.end());
        Graph g = Graph::from_edges(n, edges);
        if (dedup && !seen.insert(canonical_code(g)).second) continue;
        out.push_back(std::move(g));
    }
    return out;
}

int Rng::uniform(int lo, int hi)
{
    if (lo > hi) throw PreconditionError("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = 0;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
}

Graph random_connected_graph(int n, Rng& rng)
{
    if (n < 1 || n > VertexSet::kCapacity) throw PreconditionError("random_connected_graph: n out of range");
    std::set<Edge> edges;
    for (int v = 1; v < n; ++v) edges.insert({rng.uniform(0, v - 1), v});
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (!edges.contains({u, v}) && rng.uniform(0, 2) == 0) edges.insert({u, v});
        }
    }
    const std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
}

Graph random_block_outerplanar(int min_n, int max_n, Rng& rng)
{
    if (min_n < 2 || min_n > max_n || max_n > VertexSet::kCapacity) {
        throw PreconditionError("random_block_outerplanar: bad vertex range");
    }
    const int target = rng.uniform(min_n, max_n);
    int n = 1;
    std::vector<Edge> edges;
    while (n < target) {
        const int size = rng.uniform(2, std::min(6, target - n + 1));
        const Vertex at = rng.uniform(0, n - 1);
        // Block vertices: the attachment vertex followed by size-1 new ones.
        std::vector<Vertex> ring{at};
        for (int i = 1; i < size; ++i) ring.push_back(n + i - 1);
        n += size - 1;
        if (size == 2) {
            edges.push_back({at, ring[1]});
            continue;
        }
        for (int i = 0; i < size; ++i) edges.push_back({ring[static_cast<std::size_t>(i)], ring[static_cast<std::size_t>((i + 1) % size)]});
        std::vector<Edge> chords;
        for (int i = 0; i < size; ++i) {
            for (int j = i + 2; j < size; ++j) {
                if (i == 0 && j == size - 1) continue;
                const Edge c{i, j};
                if (!rng.coin()) continue;
                if (std::any_of(chords.begin(), chords.end(), [&](Edge d) { return chords_cross(c, d); })) continue;
                chords.push_back(c);
            }
        }
        for (Edge c : chords) edges.push_back({ring[static_cast<std::size_t>(c.u)], ring[static_cast<std::size_t>(c.v)]});
    }
    return Graph::from_edges(n, edges);
}

Graph build_named(std::string_view name, std::optional<int> param)
{
    auto need = [&](int lo) {
        if (!param) throw PreconditionError(std::string(name) + " needs a parameter");
        if (*param < lo) throw PreconditionError(std::string(name) + " parameter must be at least " + std::to_string(lo));
        return *param;
    };
    if (name == "T33") return t33_plus(0);
    if (name == "Gm") return t33_plus(need(2) - 2);
    if (name == "example41") return Graph::from_edges(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    std::vector<Edge> edges;
    if (name == "star") {
        const int m = need(1);
        for (int i = 1; i <= m; ++i) edges.push_back({0, i});
        return Graph::from_edges(m + 1, edges);
    }
    if (name == "path") {
        const int m = need(1);
        for (int i = 1; i < m; ++i) edges.push_back({i - 1, i});
        return Graph::from_edges(m, edges);
    }
    if (name == "cycle") {
        const int m = need(3);
        return Graph::from_edges(m, cycle_edges(m));
    }
    if (name == "complete") {
        const int m = need(1);
        for (int j = 1; j < m; ++j) {
            for (int i = 0; i < j; ++i) edges.push_back({i, j});
        }
        return Graph::from_edges(m, edges);
    }
    throw PreconditionError("unknown graph name: " + std::string(name));
}

Graph parse_named(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return build_named(text, std::nullopt);
    const std::string_view digits = text.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("bad graph parameter: '" + std::string(digits) + "'");
    }
    return build_named(text.substr(0, colon), value);
}

}  // namespace locgame
