#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locgame/graph.hpp"
#include "locgame/solver.hpp"

namespace locgame {

/// Strategy memory between probes. Tree strategies keep an anchor vertex whose
/// descendants hold the robber; the other fields are per-epoch bookkeeping.
struct StrategyState {
    Vertex anchor = -1;     // -1 before the first probe
    int epoch_level = 0;    // smallest level of the last class, relative to the anchor
    int step = 0;           // probes since the anchor last moved
    bool probe_anchor = false;
    auto operator<=>(const StrategyState&) const = default;
};

/// A deterministic cop policy. next_probe and observe are pure functions of
/// their arguments, so the simulator may branch on copies of the state.
class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string name() const = 0;
    virtual int cops() const = 0;
    virtual StrategyState init() const { return {}; }
    /// Probe to play when the robber is known to lie in belief.
    virtual VertexSet next_probe(const StrategyState& state, VertexSet belief) const = 0;
    /// State after probe answered with distance class cls (not a singleton).
    virtual StrategyState observe(const StrategyState& state, VertexSet probe, VertexSet cls) const = 0;
};

/// One cop on a tree without the 10-vertex spider. Hangs the tree from its
/// lowest-index leaf and pushes an anchor down the tree; the robber is always
/// confined near the anchor's descendants.
class OneCopTreeStrategy final : public CopStrategy {
public:
    explicit OneCopTreeStrategy(const Graph& tree);
    std::string name() const override { return "one-cop-tree"; }
    int cops() const override { return 1; }
    const RootedTree& tree() const { return tree_; }
    VertexSet next_probe(const StrategyState& state, VertexSet belief) const override;
    StrategyState observe(const StrategyState& state, VertexSet probe, VertexSet cls) const override;

private:
    RootedTree tree_;
};

/// Two cops on a tree containing the spider. Hangs the tree from the spider's
/// centre and probes two branches of the anchor at a time.
class TwoCopTreeStrategy final : public CopStrategy {
public:
    explicit TwoCopTreeStrategy(const Graph& tree);
    std::string name() const override { return "two-cop-tree"; }
    int cops() const override { return 2; }
    const RootedTree& tree() const { return tree_; }
    VertexSet first_probe() const { return first_; }
    VertexSet next_probe(const StrategyState& state, VertexSet belief) const override;
    StrategyState observe(const StrategyState& state, VertexSet probe, VertexSet cls) const override;

private:
    RootedTree tree_;
    VertexSet first_;
};

/// Plays a minimizing probe of an exact solver on every candidate set.
class OptimalStrategy final : public CopStrategy {
public:
    explicit OptimalStrategy(std::shared_ptr<const ExactSolver> solver);
    std::string name() const override { return "optimal"; }
    int cops() const override { return solver_->cops(); }
    VertexSet next_probe(const StrategyState& state, VertexSet belief) const override;
    StrategyState observe(const StrategyState& state, VertexSet, VertexSet) const override { return state; }

private:
    std::shared_ptr<const ExactSolver> solver_;
};

/// Root of the two-cop strategy: the lowest-index vertex with at least three
/// neighbours of degree >= 3, or nullopt.
std::optional<Vertex> spider_centre(const Graph& tree);

struct TraceStep {
    VertexSet belief;
    VertexSet probe;
    VertexSet cls;
};

struct SimulationReport {
    int worst_rounds = 0;
    /// Robber replies along one worst-case line of play; the last class is a singleton.
    std::vector<TraceStep> trace;
};

/// Called on every probe the simulator explores: state before the probe,
/// state after observing cls (equal to before when cls is a singleton), the
/// belief, probe, class and the 1-based round.
using StepObserver = std::function<void(const StrategyState& before, const StrategyState& after, VertexSet belief,
                                        VertexSet probe, VertexSet cls, int round)>;

/// Worst case over every robber: each probe splits the belief into distance
/// classes, a singleton class ends the game that round, any other class B
/// continues with belief N[B]. Throws StrategyError on invalid probes, on a
/// repeated position, or after n^2 rounds.
SimulationReport simulate_adversarial(const Graph& g, const CopStrategy& strategy, const StepObserver& observer = {});

/// Optional fields are written as null when absent.
std::string simulation_json(const Graph& g, const CopStrategy& strategy, const SimulationReport& report,
                            std::optional<int> bound, std::optional<int> game_value);

}  // namespace locgame
