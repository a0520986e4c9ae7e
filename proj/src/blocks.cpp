#include <algorithm>
#include <functional>

#include "locgame/error.hpp"
#include "locgame/graph.hpp"

namespace locgame {

BlockDecomposition block_decomposition(const Graph& g)
{
    if (!g.fits_vertex_set()) throw CapacityError("block decomposition limited to 64 vertices");
    const int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };

    for (Vertex start = 0; start < n; ++start) {
        if (disc[static_cast<std::size_t>(start)] >= 0) continue;
        if (g.degree(start) == 0) {
            out.blocks.push_back(VertexSet::singleton(start));
            disc[static_cast<std::size_t>(start)] = timer++;
            continue;
        }
        std::vector<Frame> stack{{start, -1, 0, 0}};
        disc[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto v = static_cast<std::size_t>(f.v);
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const Vertex w = nb[f.next++];
                const auto wi = static_cast<std::size_t>(w);
                if (disc[wi] < 0) {
                    edge_stack.push_back({f.v, w});
                    ++f.children;
                    disc[wi] = low[wi] = timer++;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[wi] < disc[v]) {
                    edge_stack.push_back({f.v, w});
                    low[v] = std::min(low[v], disc[wi]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) out.cut_vertices.insert(done.v);
                continue;
            }
            Frame& up = stack.back();
            const auto u = static_cast<std::size_t>(up.v);
            low[u] = std::min(low[u], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >= disc[u]) {
                if (up.parent >= 0) out.cut_vertices.insert(up.v);
                VertexSet block;
                for (;;) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.insert(e.u);
                    block.insert(e.v);
                    if (e.u == up.v && e.v == done.v) break;
                }
                out.blocks.push_back(block);
            }
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end(), set_order_less);
    return out;
}

bool is_biconnected(const Graph& g)
{
    if (g.order() < 3 || !g.is_connected()) return false;
    const auto blocks = block_decomposition(g);
    return blocks.blocks.size() == 1;
}

std::optional<OuterplanarEmbedding> outerplanar_embedding(const Graph& g)
{
    if (!is_biconnected(g)) throw PreconditionError("outerplanar embedding requires a 2-connected graph");
    const int n = g.order();
    if (g.edge_count() > static_cast<std::size_t>(2 * n - 3)) return std::nullopt;

    std::vector<Vertex> path{0};
    VertexSet used = VertexSet::singleton(0);
    std::optional<OuterplanarEmbedding> found;

    auto chords_of = [&](const std::vector<Vertex>& cycle) -> std::optional<std::vector<Edge>> {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
        std::vector<std::pair<int, int>> spans;
        std::vector<Edge> chords;
        for (const Edge& e : g.edges()) {
            int a = pos[static_cast<std::size_t>(e.u)];
            int b = pos[static_cast<std::size_t>(e.v)];
            if (a > b) std::swap(a, b);
            if (b - a == 1 || (a == 0 && b == n - 1)) continue;
            for (auto [c, d] : spans) {
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return std::nullopt;
            }
            spans.emplace_back(a, b);
            chords.push_back(e);
        }
        return chords;
    };

    std::function<void()> extend = [&]() {
        if (found) return;
        const Vertex last = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (!g.adjacent(last, 0) || path[1] > last) return;
            if (auto chords = chords_of(path)) found = OuterplanarEmbedding{path, std::move(*chords)};
            return;
        }
        for (Vertex w : g.neighbors(last)) {
            if (used.contains(w)) continue;
            used.insert(w);
            path.push_back(w);
            extend();
            path.pop_back();
            used.erase(w);
            if (found) return;
        }
    };
    extend();
    return found;
}

}  // namespace locgame
