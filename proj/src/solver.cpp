#include "locgame/solver.hpp"

#include <algorithm>
#include <set>

#include "locgame/error.hpp"

namespace locgame {

namespace {

constexpr int kMaxRounds = 254;

// Blocks of the partition of V(G) by distance vectors to s, ordered by smallest vertex.
std::vector<VertexSet> split_by_distances(const DistanceMatrix& d, VertexSet s)
{
    const int n = d.order();
    std::vector<std::vector<int>> keys;
    std::vector<VertexSet> blocks;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> key;
        for (Vertex p : s) key.push_back(d(p, v));
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(std::move(key));
            blocks.push_back(VertexSet::singleton(v));
        } else {
            blocks[static_cast<std::size_t>(it - keys.begin())].insert(v);
        }
    }
    return blocks;
}

template <typename Visit>
void for_each_subset_of_size(int n, int size, Visit&& visit)
{
    std::vector<Vertex> pick;
    auto rec = [&](auto&& self, Vertex from) -> bool {
        if (static_cast<int>(pick.size()) == size) {
            VertexSet s;
            for (Vertex v : pick) s.insert(v);
            return visit(s);
        }
        for (Vertex v = from; v < n; ++v) {
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(rec, 0);
}

}  // namespace

ExactSolver::ExactSolver(const Graph& g, int k, SolverLimits limits) : n_(g.order()), k_(k)
{
    if (k < 1) throw PreconditionError("at least one cop is needed");
    if (n_ < 1) throw PreconditionError("graph has no vertices");
    if (!g.is_connected()) throw PreconditionError("graph is disconnected");
    if (n_ > limits.cap_for(k)) {
        throw CapacityError("exhaustive search with k=" + std::to_string(k) + " is capped at n=" +
                            std::to_string(limits.cap_for(k)));
    }

    const std::size_t count = std::size_t{1} << n_;
    closed_.assign(count, VertexSet());
    for (std::size_t mask = 1; mask < count; ++mask) {
        closed_[mask] = closed_[mask & (mask - 1)] | g.closed_neighborhood(VertexSet(mask).min());
    }

    const DistanceMatrix d(g);
    std::set<std::vector<std::uint64_t>> seen;
    for (int size = 1; size <= std::min(k, n_); ++size) {
        for_each_subset_of_size(n_, size, [&](VertexSet s) {
            auto blocks = split_by_distances(d, s);
            std::vector<std::uint64_t> key;
            for (VertexSet b : blocks) key.push_back(b.bits());
            if (seen.insert(key).second) probes_.push_back({s, std::move(blocks)});
            return false;
        });
    }

    value_.assign(count, kInfinite);
    for (Vertex v = 0; v < n_; ++v) value_[VertexSet::singleton(v).bits()] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t mask = 1; mask < count; ++mask) {
            const VertexSet c(mask);
            if (c.is_singleton()) continue;
            int best = kInfinite;
            for (const Probe& p : probes_) {
                const int r = raw_outcome(p, c);
                if (r != kInfinite && (best == kInfinite || r < best)) best = r;
            }
            if (best != kInfinite && (value_[mask] == kInfinite || best < value_[mask])) {
                value_[mask] = static_cast<std::uint8_t>(best);
                changed = true;
            }
        }
    }
}

int ExactSolver::raw_outcome(const Probe& p, VertexSet c) const
{
    int worst = 1;
    for (VertexSet block : p.blocks) {
        const VertexSet b = block & c;
        if (b.empty() || b.is_singleton()) continue;
        const int next = value_[closed_[b.bits()].bits()];
        if (next == kInfinite) return kInfinite;
        if (next + 1 > kMaxRounds) throw CapacityError("game value exceeds the representable range");
        worst = std::max(worst, next + 1);
    }
    return worst;
}

std::optional<int> ExactSolver::outcome(const Probe& p, VertexSet c) const
{
    const int r = raw_outcome(p, c);
    if (r == kInfinite) return std::nullopt;
    return r;
}

std::optional<int> ExactSolver::value(VertexSet c) const
{
    if (c.empty() || !c.is_subset_of(VertexSet::full(n_))) throw PreconditionError("candidate set outside the graph");
    const int v = value_[c.bits()];
    if (v == kInfinite) return std::nullopt;
    return v;
}

std::optional<VertexSet> ExactSolver::best_probe(VertexSet c) const
{
    const auto target = value(c);
    if (!target) return std::nullopt;
    for (const Probe& p : probes_) {
        if (raw_outcome(p, c) == *target) return p.set;
    }
    return std::nullopt;
}

std::optional<int> game_value(const Graph& g, int k, SolverLimits limits)
{
    return ExactSolver(g, k, limits).game_value();
}

std::optional<int> zeta(const Graph& g, int k_max, SolverLimits limits)
{
    if (k_max < 1) throw PreconditionError("k_max must be at least 1");
    for (int k = 1; k <= k_max; ++k) {
        if (game_value(g, k, limits)) return k;
    }
    return std::nullopt;
}

int metric_dimension(const Graph& g)
{
    const int n = g.order();
    if (n < 1) throw PreconditionError("graph has no vertices");
    if (n > 20) throw CapacityError("metric dimension brute force is capped at n=20");
    if (!g.is_connected()) throw PreconditionError("graph is disconnected");
    if (n == 1) return 0;
    const DistanceMatrix d(g);
    for (int size = 1; size <= n; ++size) {
        bool found = false;
        for_each_subset_of_size(n, size, [&](VertexSet s) {
            found = static_cast<int>(split_by_distances(d, s).size()) == n;
            return found;
        });
        if (found) return size;
    }
    return n;
}

}  // namespace locgame
