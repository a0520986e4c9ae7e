#include <doctest.h>

#include <numeric>

#include <json.hpp>

#include "locgame/error.hpp"
#include "locgame/generators.hpp"
#include "locgame/strategy.hpp"

using namespace locgame;

namespace {

Graph relabelled(const Graph& g, Rng& rng)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const Vertex a = perm[static_cast<std::size_t>(e.u)];
        const Vertex b = perm[static_cast<std::size_t>(e.v)];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph::from_edges(g.order(), edges);
}

int rounds_of(const Graph& t)
{
    if (contains_t33(t)) return simulate_adversarial(t, TwoCopTreeStrategy(t)).worst_rounds;
    return simulate_adversarial(t, OneCopTreeStrategy(t)).worst_rounds;
}

}  // namespace

TEST_CASE("one-cop strategy within the leaf bound on spider-free trees")
{
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& t : generate_trees(n)) {
            if (contains_t33(t)) continue;
            const int rounds = simulate_adversarial(t, OneCopTreeStrategy(t)).worst_rounds;
            CHECK(rounds <= leaf_count(t));
            const auto value = game_value(t, 1);
            REQUIRE(value);
            CHECK(rounds >= *value);
        }
    }
}

TEST_CASE("two-cop strategy within half the leaves minus one")
{
    for (int n = 10; n <= 12; ++n) {
        for (const Graph& t : generate_trees(n)) {
            if (!contains_t33(t)) continue;
            const TwoCopTreeStrategy s(t);
            CHECK(s.first_probe().size() == 2);
            const int rounds = simulate_adversarial(t, s).worst_rounds;
            CHECK(rounds <= leaf_count(t) / 2 - 1);
            if (n <= 11) CHECK(rounds >= *game_value(t, 2));
        }
    }
    const Graph gm = build_named("Gm", 5);
    CHECK(simulate_adversarial(gm, TwoCopTreeStrategy(gm)).worst_rounds == 3);
    CHECK(simulate_adversarial(build_named("T33"), TwoCopTreeStrategy(build_named("T33"))).worst_rounds == 2);
}

TEST_CASE("bounds survive relabelling")
{
    Rng rng(17);
    for (int n = 4; n <= 11; ++n) {
        const auto trees = generate_trees(n);
        for (int i = 0; i < 25; ++i) {
            const Graph& t = trees[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(trees.size()) - 1))];
            const Graph shuffled = relabelled(t, rng);
            const int rounds = rounds_of(shuffled);
            if (contains_t33(shuffled)) {
                CHECK(rounds <= leaf_count(shuffled) / 2 - 1);
            } else {
                CHECK(rounds <= leaf_count(shuffled));
            }
        }
    }
}

TEST_CASE("anchor moves strictly down and the belief stays near it")
{
    for (int n = 3; n <= 10; ++n) {
        for (const Graph& t : generate_trees(n)) {
            if (contains_t33(t)) continue;
            const OneCopTreeStrategy s(t);
            const RootedTree& tree = s.tree();
            int violations = 0;
            simulate_adversarial(t, s, [&](const StrategyState& before, const StrategyState& after, VertexSet belief,
                                           VertexSet probe, VertexSet, int) {
                if (probe.size() != 1) ++violations;
                if (before.anchor >= 0 && after.anchor != before.anchor) {
                    if (!tree.is_ancestor(before.anchor, after.anchor)) ++violations;
                    if (tree.level(after.anchor) <= tree.level(before.anchor)) ++violations;
                }
                if (before.anchor >= 0) {
                    VertexSet near = tree.subtree(before.anchor);
                    if (tree.parent(before.anchor) >= 0) near.insert(tree.parent(before.anchor));
                    // The robber may have stepped one level above the anchor before the last move.
                    if (!belief.is_subset_of(t.closed_neighborhood(near))) ++violations;
                }
            });
            CHECK(violations == 0);
        }
    }
}

TEST_CASE("small cases and replay of the exact solver")
{
    const Graph k2 = build_named("path", 2);
    CHECK(simulate_adversarial(k2, OneCopTreeStrategy(k2)).worst_rounds == 1);

    const Graph ex = build_named("example41");
    auto solver = std::make_shared<const ExactSolver>(ex, 1);
    const OptimalStrategy best(solver);
    const SimulationReport r = simulate_adversarial(ex, best);
    CHECK(r.worst_rounds == 2);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace.back().cls.is_singleton());
    CHECK(r.trace.front().belief == VertexSet::full(5));

    const Graph star = build_named("star", 4);
    CHECK(simulate_adversarial(star, OneCopTreeStrategy(star)).worst_rounds == 3);

    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : generate_connected_graphs(n)) {
            for (int k = 1; k <= 2; ++k) {
                auto sv = std::make_shared<const ExactSolver>(g, k);
                if (!sv->game_value()) continue;
                CHECK(simulate_adversarial(g, OptimalStrategy(sv)).worst_rounds == *sv->game_value());
            }
        }
    }

    const auto doc = nlohmann::json::parse(simulation_json(ex, best, r, 2, 2));
    CHECK(doc["worst_rounds"] == 2);
    CHECK(doc["strategy"] == "optimal");
    CHECK(doc["trace"].size() == 2);
    CHECK(doc["graph6"] == encode_graph6(ex));
}

TEST_CASE("strategy preconditions")
{
    CHECK_THROWS_AS(OneCopTreeStrategy(build_named("T33")), PreconditionError);
    CHECK_THROWS_AS(OneCopTreeStrategy(build_named("cycle", 5)), PreconditionError);
    CHECK_THROWS_AS(TwoCopTreeStrategy(build_named("path", 6)), PreconditionError);
    CHECK_THROWS_AS(OptimalStrategy(std::make_shared<const ExactSolver>(build_named("T33"), 1)), PreconditionError);
    CHECK(spider_centre(build_named("T33")) == 0);
    CHECK_FALSE(spider_centre(build_named("star", 5)));
}
