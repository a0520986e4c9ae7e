#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

/// Per-k caps on the vertex count for exhaustive search.
struct SolverLimits {
    int max_order_k1 = 14;
    int max_order_k2 = 14;
    int max_order_other = 12;
    int cap_for(int k) const { return k <= 1 ? max_order_k1 : (k == 2 ? max_order_k2 : max_order_other); }
};

/// One distinct way of splitting V(G) by probing: the first probe set, in
/// (size, lex) order, that induces this partition.
struct Probe {
    VertexSet set;
    std::vector<VertexSet> blocks;
};

/// Minimax values of the localization game for every candidate set.
/// value(C) is the number of rounds k cops need to finish when the robber is
/// known to lie in C before the next probe; one round is one probe.
class ExactSolver {
public:
    static constexpr int kInfinite = 0;

    ExactSolver(const Graph& g, int k, SolverLimits limits = {});

    int order() const { return n_; }
    int cops() const { return k_; }
    const std::vector<Probe>& probes() const { return probes_; }

    /// Rounds from candidate set c, or nullopt when the cops cannot finish.
    std::optional<int> value(VertexSet c) const;
    std::optional<int> game_value() const { return value(VertexSet::full(n_)); }
    /// The first probe (in probes() order) attaining value(c); nullopt when
    /// value(c) is infinite.
    std::optional<VertexSet> best_probe(VertexSet c) const;
    /// N[b]: the candidate set once the robber moves from class b.
    VertexSet moved(VertexSet b) const { return closed_[b.bits()]; }
    /// Rounds needed after probing p from candidate set c; nullopt when infinite.
    std::optional<int> outcome(const Probe& p, VertexSet c) const;

private:
    int raw_outcome(const Probe& p, VertexSet c) const;

    int n_ = 0;
    int k_ = 0;
    std::vector<VertexSet> closed_;
    std::vector<Probe> probes_;
    std::vector<std::uint8_t> value_;
};

std::optional<int> game_value(const Graph& g, int k, SolverLimits limits = {});
/// Least k <= k_max with a finite game value.
std::optional<int> zeta(const Graph& g, int k_max, SolverLimits limits = {});
/// Size of a smallest resolving set (0 for a single vertex). n <= 20.
int metric_dimension(const Graph& g);

}  // namespace locgame
