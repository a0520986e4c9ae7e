#include <algorithm>
#include <functional>
#include <set>
#include <numeric>

#include "locgame/error.hpp"
#include "locgame/generators.hpp"

namespace locgame {

namespace {

std::string rooted_code(const Graph& g, Vertex v, Vertex parent)
{
    std::vector<std::string> parts;
    for (Vertex w : g.neighbors(v)) {
        if (w != parent) parts.push_back(rooted_code(g, w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ')';
    return out;
}

std::vector<Vertex> tree_centres(const Graph& g)
{
    const int n = g.order();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            deg[static_cast<std::size_t>(v)] = 0;
            for (Vertex w : g.neighbors(v)) {
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

/// Ranks signatures so that equal signatures share a colour and colours follow
/// the signature order; the result only depends on the multiset of signatures.
template <typename Sig>
int rank_colours(const std::vector<Sig>& sigs, std::vector<int>& colour)
{
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < sigs.size(); ++v) {
        colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
    }
    return static_cast<int>(sorted.size());
}

void refine(const Graph& g, std::vector<int>& colour)
{
    const auto n = static_cast<std::size_t>(g.order());
    int classes = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    for (;;) {
        std::vector<std::vector<int>> sigs(n);
        for (std::size_t v = 0; v < n; ++v) {
            sigs[v].push_back(colour[v]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nb.push_back(colour[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            sigs[v].insert(sigs[v].end(), nb.begin(), nb.end());
        }
        const int next = rank_colours(sigs, colour);
        if (next == classes) return;
        classes = next;
    }
}

std::vector<bool> adjacency_code(const Graph& g, const std::vector<int>& label)
{
    const int n = g.order();
    std::vector<Vertex> at(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) at[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
    std::vector<bool> code;
    code.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) code.push_back(g.adjacent(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]));
    }
    return code;
}

}  // namespace

std::string canonical_tree_code(const Graph& tree)
{
    if (!is_tree(tree)) throw PreconditionError("graph is not a tree");
    std::string best;
    for (Vertex c : tree_centres(tree)) {
        std::string code = rooted_code(tree, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

Graph canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n == 0) return g;
    std::vector<int> start(static_cast<std::size_t>(n), 0);
    refine(g, start);

    std::vector<bool> best_code;
    std::vector<int> best_label;
    std::function<void(std::vector<int>)> search = [&](std::vector<int> colour) {
        // First smallest non-singleton cell.
        std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
        for (int c : colour) ++cell_size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < n; ++c) {
            if (cell_size[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            auto code = adjacency_code(g, colour);
            if (best_label.empty() || code < best_code) {
                best_code = std::move(code);
                best_label = colour;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> next(colour.size());
            for (std::size_t u = 0; u < colour.size(); ++u) next[u] = 2 * colour[u] + 1;
            next[static_cast<std::size_t>(v)] = 2 * target;
            std::vector<int> ranked(colour.size());
            rank_colours(next, ranked);
            refine(g, ranked);
            search(std::move(ranked));
        }
    };
    search(start);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = best_label[static_cast<std::size_t>(e.u)];
        Vertex b = best_label[static_cast<std::size_t>(e.v)];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(n, edges);
}

std::uint64_t canonical_code(const Graph& g)
{
    if (g.order() > 11) throw CapacityError("canonical_code limited to 11 vertices");
    const Graph c = canonical_form(g);
    std::uint64_t code = 0;
    for (int j = 1; j < c.order(); ++j) {
        for (int i = 0; i < j; ++i) code = (code << 1) | (c.adjacent(i, j) ? 1U : 0U);
    }
    return code;
}

}  // namespace locgame
