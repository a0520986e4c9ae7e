#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "locgame/error.hpp"
#include "locgame/generators.hpp"

using namespace locgame;

namespace {

Graph from_pruefer(const std::vector<int>& seq)
{
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.push_back({std::min(leaf, x), std::max(leaf, x)});
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    }
    edges.push_back({last[0], last[1]});
    return Graph::from_edges(n, edges);
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    VertexSet used;
    std::function<bool(Vertex)> place = [&](Vertex v) {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used.contains(w) || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[static_cast<std::size_t>(u)], w);
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used.insert(w);
            if (place(v + 1)) return true;
            used.erase(w);
        }
        return false;
    };
    return place(0);
}

Graph shuffled(const Graph& g, Rng& rng)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = perm[static_cast<std::size_t>(e.u)];
        Vertex b = perm[static_cast<std::size_t>(e.v)];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph::from_edges(g.order(), edges);
}

}  // namespace

TEST_CASE("tree counts")
{
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) CHECK(generate_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
    CHECK_THROWS_AS(generate_trees(0), PreconditionError);
    CHECK_THROWS_AS(generate_trees(15), PreconditionError);
}

TEST_CASE("trees on 7 vertices match a labelled enumeration")
{
    std::vector<Graph> classes;
    std::vector<int> seq(5, 0);
    for (int code = 0; code < 16807; ++code) {
        int rest = code;
        for (int& x : seq) {
            x = rest % 7;
            rest /= 7;
        }
        const Graph t = from_pruefer(seq);
        REQUIRE(is_tree(t));
        if (std::none_of(classes.begin(), classes.end(), [&](const Graph& c) { return isomorphic(c, t); })) classes.push_back(t);
    }
    CHECK(classes.size() == 11);
    const auto generated = generate_trees(7);
    for (const Graph& c : classes) {
        CHECK(std::count_if(generated.begin(), generated.end(), [&](const Graph& g) { return isomorphic(g, c); }) == 1);
    }
}

TEST_CASE("generated trees are pairwise non-isomorphic and emitted in a stable order")
{
    for (int n = 1; n <= 9; ++n) {
        const auto trees = generate_trees(n);
        std::set<std::string> codes;
        for (const Graph& t : trees) {
            CHECK(is_tree(t));
            CHECK(t.order() == n);
            codes.insert(canonical_tree_code(t));
        }
        CHECK(codes.size() == trees.size());
        CHECK(generate_trees(n) == trees);
    }
}

TEST_CASE("connected graph counts")
{
    const int expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = generate_connected_graphs(n);
        CHECK(graphs.size() == static_cast<std::size_t>(expected[n - 1]));
        for (const Graph& g : graphs) CHECK(g.is_connected());
    }
    const auto five = generate_connected_graphs(5);
    for (std::size_t i = 0; i < five.size(); ++i) {
        for (std::size_t j = i + 1; j < five.size(); ++j) CHECK_FALSE(isomorphic(five[i], five[j]));
    }
}

TEST_CASE("canonical form is invariant under relabelling")
{
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_connected_graph(rng.uniform(1, 9), rng);
        const Graph h = shuffled(g, rng);
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(isomorphic(canonical_form(g), g));
    }
    CHECK(canonical_code(build_named("cycle", 6)) != canonical_code(build_named("path", 6)));
    CHECK(canonical_tree_code(build_named("path", 4)) != canonical_tree_code(build_named("star", 3)));
}

TEST_CASE("two-connected outerplanar corpus")
{
    const std::size_t expected[] = {1, 3, 11, 45, 197, 903};
    for (int n = 3; n <= 8; ++n) {
        const auto graphs = generate_2connected_outerplanar(n);
        CHECK(graphs.size() == expected[n - 3]);
        for (const Graph& g : graphs) {
            const auto e = outerplanar_embedding(g);
            REQUIRE(e);
            CHECK(e->chords.size() == g.edge_count() - static_cast<std::size_t>(n));
            CHECK(g.edge_count() <= static_cast<std::size_t>(2 * n - 3));
        }
    }
    CHECK(generate_2connected_outerplanar(3).front() == build_named("complete", 3));
    CHECK(generate_2connected_outerplanar(4, true).size() == 2);
    CHECK(generate_2connected_outerplanar(6, true).size() == 9);
    CHECK_THROWS_AS(generate_2connected_outerplanar(2), PreconditionError);
}

TEST_CASE("random generators are deterministic")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 20; ++i) {
        CHECK(random_connected_graph(7, a) == random_connected_graph(7, b));
        CHECK(random_block_outerplanar(3, 10, a) == random_block_outerplanar(3, 10, b));
    }
    Rng r(5);
    for (int i = 0; i < 1000; ++i) {
        const int x = r.uniform(-2, 3);
        CHECK(x >= -2);
        CHECK(x <= 3);
    }
}

TEST_CASE("random block-composed graphs are outerplanar")
{
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_block_outerplanar(3, 10, rng);
        CHECK(g.is_connected());
        CHECK(g.order() >= 3);
        CHECK(g.order() <= 10);
        for (VertexSet block : block_decomposition(g).blocks) {
            if (block.size() < 3) continue;
            std::vector<Vertex> ids = block.to_vector();
            std::vector<Edge> edges;
            for (const Edge& e : g.edges()) {
                if (block.contains(e.u) && block.contains(e.v)) {
                    auto at = [&](Vertex v) { return static_cast<Vertex>(std::find(ids.begin(), ids.end(), v) - ids.begin()); };
                    edges.push_back({at(e.u), at(e.v)});
                }
            }
            CHECK(outerplanar_embedding(Graph::from_edges(block.size(), edges)));
        }
    }
}

TEST_CASE("named graphs")
{
    CHECK(build_named("T33").order() == 10);
    CHECK(build_named("Gm", 2) == build_named("T33"));
    CHECK(parse_named("star:4") == build_named("star", 4));
    CHECK(parse_named("Gm:5").order() == 13);
    CHECK(build_named("example41").edge_count() == 4);
    CHECK_THROWS_AS(build_named("Gm", 1), PreconditionError);
    CHECK_THROWS_AS(build_named("nope"), PreconditionError);
    CHECK_THROWS_AS(parse_named("star:x"), ParseError);
    CHECK_THROWS_AS(build_named("cycle", 2), PreconditionError);
}
