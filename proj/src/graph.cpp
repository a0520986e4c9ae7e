#include "locgame/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "locgame/error.hpp"

namespace locgame {

bool set_order_less(VertexSet a, VertexSet b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return false;
}

std::string set_label(VertexSet s, int n)
{
    std::string out;
    const bool compact = n <= 9;
    for (Vertex v : s) {
        if (!compact && !out.empty()) out += '.';
        out += std::to_string(v + 1);
    }
    return out;
}

std::string set_list(VertexSet s)
{
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
    }
    return out;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0) throw PreconditionError("negative vertex count");
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw PreconditionError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
        auto& nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw PreconditionError("repeated edge at vertex " + std::to_string(v));
        }
    }
    g.edge_count_ = edges.size();
    if (g.fits_vertex_set()) {
        g.closed_.resize(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            VertexSet s = VertexSet::singleton(v);
            for (Vertex w : g.neighbors(v)) s.insert(w);
            g.closed_[static_cast<std::size_t>(v)] = s;
        }
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

bool Graph::is_connected() const
{
    if (order() <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == order();
}

VertexSet Graph::vertices() const
{
    if (!fits_vertex_set()) throw CapacityError("graph has more than 64 vertices");
    return VertexSet::full(order());
}

VertexSet Graph::closed_neighborhood(Vertex v) const
{
    if (!fits_vertex_set()) throw CapacityError("graph has more than 64 vertices");
    return closed_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(VertexSet s) const
{
    if (!fits_vertex_set()) throw CapacityError("graph has more than 64 vertices");
    VertexSet out;
    for (Vertex v : s) out |= closed_[static_cast<std::size_t>(v)];
    return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kUnreachable)
{
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n_; ++s) {
        int* row = d_.data() + static_cast<std::ptrdiff_t>(s) * n_;
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

}  // namespace locgame
