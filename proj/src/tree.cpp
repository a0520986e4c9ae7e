#include <algorithm>

#include "locgame/error.hpp"
#include "locgame/graph.hpp"

namespace locgame {

namespace {

void require_tree(const Graph& g)
{
    if (!is_tree(g)) throw PreconditionError("graph is not a tree");
}

}  // namespace

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) && g.is_connected();
}

int leaf_count(const Graph& g)
{
    require_tree(g);
    int leaves = 0;
    for (Vertex v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
    return leaves;
}

// In a tree, the neighbours of v's neighbours (other than v) are pairwise
// distinct, so three neighbours of degree >= 3 already give the spider.
bool contains_t33(const Graph& g)
{
    require_tree(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        int heavy = 0;
        for (Vertex w : g.neighbors(v)) heavy += g.degree(w) >= 3 ? 1 : 0;
        if (heavy >= 3) return true;
    }
    return false;
}

RootedTree::RootedTree(const Graph& tree, Vertex root) : graph_(tree), root_(root)
{
    require_tree(tree);
    if (!tree.fits_vertex_set()) throw CapacityError("rooted tree limited to 64 vertices");
    if (root < 0 || root >= tree.order()) throw PreconditionError("root out of range");
    const auto n = static_cast<std::size_t>(tree.order());
    parent_.assign(n, -1);
    level_.assign(n, 0);
    children_.assign(n, {});
    subtree_.assign(n, {});
    leaves_below_.assign(n, 0);

    bfs_order_.push_back(root);
    for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
        const Vertex u = bfs_order_[head];
        for (Vertex w : tree.neighbors(u)) {
            if (w == parent_[static_cast<std::size_t>(u)]) continue;
            parent_[static_cast<std::size_t>(w)] = u;
            level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(u)] + 1;
            children_[static_cast<std::size_t>(u)].push_back(w);
            bfs_order_.push_back(w);
        }
    }
    for (auto it = bfs_order_.rbegin(); it != bfs_order_.rend(); ++it) {
        const auto u = static_cast<std::size_t>(*it);
        subtree_[u] = VertexSet::singleton(*it);
        leaves_below_[u] = children_[u].empty() ? 1 : 0;
        for (Vertex w : children_[u]) {
            subtree_[u] |= subtree_[static_cast<std::size_t>(w)];
            leaves_below_[u] += leaves_below_[static_cast<std::size_t>(w)];
        }
    }
}

std::optional<Vertex> RootedTree::strict_meet(VertexSet s) const
{
    if (s.empty() || s.contains(root_)) return std::nullopt;
    Vertex u = root_;
    // Descend while a single child's subtree still holds all of s.
    for (;;) {
        Vertex next = -1;
        for (Vertex c : children(u)) {
            if (s.is_subset_of(subtree(c))) {
                next = c;
                break;
            }
        }
        if (next < 0 || s.contains(next)) return u;
        u = next;
    }
}

}  // namespace locgame
