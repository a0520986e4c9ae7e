#include "locgame/strategy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "locgame/error.hpp"

namespace locgame {

namespace {

Vertex lowest_leaf(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= 1) return v;
    }
    return 0;
}

Vertex meet_or_root(const RootedTree& t, VertexSet cls)
{
    return t.strict_meet(cls).value_or(t.root());
}

std::vector<Vertex> active_children(const RootedTree& t, Vertex a, VertexSet belief)
{
    std::vector<Vertex> out;
    for (Vertex c : t.children(a)) {
        if (t.subtree(c).intersects(belief)) out.push_back(c);
    }
    return out;
}

Vertex deepest_in(const RootedTree& t, Vertex v)
{
    Vertex best = v;
    for (Vertex u : t.subtree(v)) {
        if (t.level(u) > t.level(best)) best = u;
    }
    return best;
}

std::vector<VertexSet> classes_of(const DistanceMatrix& d, VertexSet probe, VertexSet belief)
{
    std::vector<std::vector<int>> keys;
    std::vector<VertexSet> out;
    for (Vertex v : belief) {
        std::vector<int> key;
        for (Vertex p : probe) key.push_back(d(p, v));
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(std::move(key));
            out.push_back(VertexSet::singleton(v));
        } else {
            out[static_cast<std::size_t>(it - keys.begin())].insert(v);
        }
    }
    return out;
}

}  // namespace

std::optional<Vertex> spider_centre(const Graph& tree)
{
    for (Vertex v = 0; v < tree.order(); ++v) {
        int heavy = 0;
        for (Vertex w : tree.neighbors(v)) heavy += tree.degree(w) >= 3 ? 1 : 0;
        if (heavy >= 3) return v;
    }
    return std::nullopt;
}

OneCopTreeStrategy::OneCopTreeStrategy(const Graph& tree) : tree_(tree, is_tree(tree) ? lowest_leaf(tree) : 0)
{
    if (contains_t33(tree)) throw PreconditionError("one-cop tree strategy needs a tree without the spider T33");
}

VertexSet OneCopTreeStrategy::next_probe(const StrategyState& state, VertexSet belief) const
{
    const RootedTree& t = tree_;
    const Vertex a = state.anchor;
    if (a < 0) return VertexSet::singleton(t.root());
    if (state.probe_anchor) return VertexSet::singleton(a);

    const std::vector<Vertex> active = active_children(t, a, belief);
    std::vector<Vertex> mains;
    for (Vertex c : active) {
        if (t.children(c).size() >= 2) mains.push_back(c);
    }

    const bool outside = !belief.is_subset_of(t.subtree(a));
    if (mains.size() == 2 || (state.step > 0 && outside)) {
        std::vector<Vertex> pair = mains;
        if (pair.size() < 2) {
            pair.clear();
            for (Vertex c : t.children(a)) {
                if (t.children(c).size() >= 2) pair.push_back(c);
            }
        }
        if (pair.size() >= 2) {
            std::sort(pair.begin(), pair.end(), [&](Vertex x, Vertex y) {
                if (t.leaves_below(x) != t.leaves_below(y)) return t.leaves_below(x) > t.leaves_below(y);
                return x < y;
            });
            const Vertex rich = pair[0];
            const Vertex poor = pair[1];
            const Vertex up = t.parent(a);
            const Vertex grand = up < 0 ? a : (up == t.root() ? t.root() : t.parent(up));
            std::vector<Vertex> script;
            if (t.leaves_below(rich) >= 3) {
                if (state.epoch_level == 1) {
                    script = {poor, rich, grand};
                } else if (state.epoch_level == 2) {
                    script = {rich, poor, rich, grand};
                } else {
                    script = {rich, poor};
                }
            } else {
                std::vector<Vertex> leaves;
                for (Vertex v : t.subtree(rich)) {
                    if (t.is_leaf(v)) leaves.push_back(v);
                }
                script = {leaves[0], leaves[1], grand};
            }
            const auto step = static_cast<std::size_t>(state.step);
            return VertexSet::singleton(step < script.size() ? script[step] : a);
        }
    }

    // Sweep every branch except the last one; the robber is then pinned to it.
    Vertex last = -1;
    if (!mains.empty()) {
        last = mains.front();
    } else {
        for (Vertex c : active) {
            if (t.children(c).size() != 1) continue;
            if (last < 0 || t.leaves_below(c) >= t.leaves_below(last)) last = c;
        }
        if (last < 0) {
            for (Vertex c : active) {
                if (t.is_leaf(c)) last = c;
            }
        }
    }
    for (Vertex c : active) {
        if (c != last && t.is_leaf(c)) return VertexSet::singleton(c);
    }
    for (Vertex c : active) {
        if (c != last && t.children(c).size() == 1) return VertexSet::singleton(t.children(c)[0]);
    }
    return VertexSet::singleton(a);
}

StrategyState OneCopTreeStrategy::observe(const StrategyState& state, VertexSet probe, VertexSet cls) const
{
    const RootedTree& t = tree_;
    const Vertex a = state.anchor;
    const Vertex next = meet_or_root(t, cls);
    if (a < 0 || (next != a && t.is_ancestor(a, next))) {
        int lowest = t.order();
        for (Vertex v : cls) lowest = std::min(lowest, t.level(v) - t.level(next));
        return {next, lowest, 0, false};
    }
    // A grandchild probe through a degree-2 child w that answers "w or beyond"
    // is followed by a probe of the anchor itself.
    const Vertex p = probe.min();
    const Vertex w = t.parent(p);
    const bool again = !state.probe_anchor && w >= 0 && t.parent(w) == a && t.children(w).size() == 1 && cls.contains(w);
    return {a, state.epoch_level, state.step + 1, again};
}

TwoCopTreeStrategy::TwoCopTreeStrategy(const Graph& tree)
    : tree_(tree, is_tree(tree) ? spider_centre(tree).value_or(0) : 0)
{
    if (!contains_t33(tree)) throw PreconditionError("two-cop tree strategy needs a tree containing the spider T33");
    const Vertex root = tree_.root();
    for (Vertex w : tree.neighbors(root)) {
        if (tree.degree(w) >= 3 && first_.size() < 2) first_.insert(w);
    }
}

VertexSet TwoCopTreeStrategy::next_probe(const StrategyState& state, VertexSet belief) const
{
    const RootedTree& t = tree_;
    const Vertex a = state.anchor;
    if (a < 0) return first_;

    const std::vector<Vertex> active = active_children(t, a, belief);
    if (active.size() >= 3) return VertexSet{active[0], active[1]};
    if (active.size() == 2) {
        const Vertex c1 = active[0];
        const Vertex c2 = active[1];
        const int l1 = t.leaves_below(c1);
        const int l2 = t.leaves_below(c2);
        if (l1 == 1 && l2 == 1) return VertexSet{deepest_in(t, c1), deepest_in(t, c2)};
        if (l1 > 1 && l2 > 1) return VertexSet{c1, c2};
        const Vertex thin = l1 == 1 ? c1 : c2;
        Vertex u = l1 == 1 ? c2 : c1;
        while (t.children(u).size() == 1) u = t.children(u)[0];
        if (t.children(u).size() == 2) return VertexSet{t.children(u)[0], t.children(u)[1]};
        return VertexSet{thin, t.children(u)[0]};
    }
    if (active.size() == 1) return VertexSet{a, active[0]};
    return t.parent(a) >= 0 ? VertexSet{a, t.parent(a)} : VertexSet::singleton(a);
}

StrategyState TwoCopTreeStrategy::observe(const StrategyState& state, VertexSet, VertexSet cls) const
{
    const Vertex next = meet_or_root(tree_, cls);
    if (state.anchor < 0 || (next != state.anchor && tree_.is_ancestor(state.anchor, next))) {
        return {next, 0, 0, false};
    }
    return state;
}

OptimalStrategy::OptimalStrategy(std::shared_ptr<const ExactSolver> solver) : solver_(std::move(solver))
{
    if (!solver_->game_value()) throw PreconditionError("no finite game value: the cops cannot win");
}

VertexSet OptimalStrategy::next_probe(const StrategyState&, VertexSet belief) const
{
    const auto probe = solver_->best_probe(belief);
    if (!probe) throw StrategyError("optimal strategy reached a losing candidate set");
    return *probe;
}

SimulationReport simulate_adversarial(const Graph& g, const CopStrategy& strategy, const StepObserver& observer)
{
    const int n = g.order();
    if (n < 1 || !g.fits_vertex_set()) throw PreconditionError("simulation needs 1..64 vertices");
    const DistanceMatrix d(g);
    const int cap = std::max(1, n * n);
    const VertexSet all = VertexSet::full(n);

    using Key = std::pair<StrategyState, std::uint64_t>;
    struct Result {
        int rounds = 0;
        VertexSet probe;
        VertexSet cls;
        StrategyState after;
    };
    std::map<Key, Result> memo;
    std::set<Key> open;

    auto solve = [&](auto&& self, const StrategyState& state, VertexSet belief, int round) -> int {
        if (round > cap) throw StrategyError("strategy exceeded the round cap of " + std::to_string(cap));
        const Key key{state, belief.bits()};
        if (auto it = memo.find(key); it != memo.end()) return it->second.rounds;
        if (!open.insert(key).second) throw StrategyError("strategy revisits a position and never finishes");

        const VertexSet probe = strategy.next_probe(state, belief);
        if (probe.empty() || probe.size() > strategy.cops() || !probe.is_subset_of(all)) {
            throw StrategyError("strategy emitted an invalid probe");
        }
        Result best;
        for (VertexSet cls : classes_of(d, probe, belief)) {
            int rounds = 1;
            StrategyState after = state;
            if (!cls.is_singleton()) {
                after = strategy.observe(state, probe, cls);
                if (observer) observer(state, after, belief, probe, cls, round);
                rounds = 1 + self(self, after, g.closed_neighborhood(cls), round + 1);
            } else if (observer) {
                observer(state, state, belief, probe, cls, round);
            }
            if (rounds > best.rounds) best = {rounds, probe, cls, after};
        }
        open.erase(key);
        memo.emplace(key, best);
        return best.rounds;
    };

    SimulationReport report;
    const StrategyState start = strategy.init();
    report.worst_rounds = solve(solve, start, all, 1);

    StrategyState state = start;
    VertexSet belief = all;
    for (;;) {
        const Result& r = memo.at(Key{state, belief.bits()});
        report.trace.push_back({belief, r.probe, r.cls});
        if (r.cls.is_singleton()) break;
        state = r.after;
        belief = g.closed_neighborhood(r.cls);
    }
    return report;
}

std::string simulation_json(const Graph& g, const CopStrategy& strategy, const SimulationReport& report,
                            std::optional<int> bound, std::optional<int> game_value)
{
    auto optional_int = [](std::optional<int> v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
    auto ids = [](VertexSet s) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (Vertex v : s) out.push_back(v);
        return out;
    };
    nlohmann::ordered_json doc;
    doc["graph6"] = encode_graph6(g);
    doc["k"] = strategy.cops();
    doc["strategy"] = strategy.name();
    doc["worst_rounds"] = report.worst_rounds;
    doc["bound"] = optional_int(bound);
    doc["game_value"] = optional_int(game_value);
    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    for (const TraceStep& s : report.trace) {
        nlohmann::ordered_json step;
        step["probe"] = ids(s.probe);
        step["class"] = ids(s.cls);
        trace.push_back(std::move(step));
    }
    doc["trace"] = std::move(trace);
    return doc.dump();
}

}  // namespace locgame
