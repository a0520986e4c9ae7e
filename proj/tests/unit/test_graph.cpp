#include <doctest.h>

#include <functional>

#include "locgame/error.hpp"
#include "locgame/generators.hpp"
#include "locgame/graph.hpp"

using namespace locgame;

namespace {

// Injective edge-preserving map of pattern into host, by backtracking.
bool has_subgraph(const Graph& pattern, const Graph& host)
{
    std::vector<Vertex> image(static_cast<std::size_t>(pattern.order()), -1);
    VertexSet used;
    std::function<bool(Vertex)> place = [&](Vertex v) {
        if (v == pattern.order()) return true;
        for (Vertex h = 0; h < host.order(); ++h) {
            if (used.contains(h)) continue;
            bool ok = true;
            for (Vertex w : pattern.neighbors(v)) {
                if (w < v && !host.adjacent(image[static_cast<std::size_t>(w)], h)) ok = false;
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = h;
            used.insert(h);
            if (place(v + 1)) return true;
            used.erase(h);
        }
        return false;
    };
    return place(0);
}

bool connected_without(const Graph& g, Vertex gone)
{
    VertexSet seen;
    Vertex start = gone == 0 ? 1 : 0;
    std::vector<Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (w != gone && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen.size() == g.order() - 1;
}

}  // namespace

TEST_CASE("vertex set basics")
{
    VertexSet s{4, 1, 3};
    CHECK(s.size() == 3);
    CHECK(s.min() == 1);
    CHECK(s.max() == 4);
    CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 4});
    CHECK(VertexSet{1, 3}.is_subset_of(s));
    CHECK_FALSE(VertexSet{0, 3}.is_subset_of(s));
    CHECK(set_label(s, 5) == "245");
    CHECK(set_label(s, 12) == "2.4.5");
    CHECK(set_list(s) == "2,4,5");
    CHECK(set_order_less(VertexSet{4}, VertexSet{0, 1}));
    CHECK(set_order_less(VertexSet{0, 4}, VertexSet{1, 2}));
}

TEST_CASE("edge list parsing")
{
    const Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);

    const Graph ex = parse_edge_list("# example\n0 1\n0 2\n2 3\n2 4\n");
    CHECK(ex == build_named("example41"));

    CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n2 3"), ParseError);
    CHECK(parse_edge_list("0 1\n2 3", {.allow_disconnected = true}).order() == 4);
    CHECK(format_edge_list(p3) == "0 1\n1 2\n");
}

TEST_CASE("graph6 against reference encodings")
{
    // Reference strings produced by networkx.
    CHECK(parse_graph6("Bw") == build_named("complete", 3));
    CHECK(encode_graph6(build_named("path", 3)) == "Bg");
    CHECK(encode_graph6(build_named("cycle", 6)) == "EhEG");
    CHECK(parse_graph6(">>graph6<<Bg\n") == build_named("path", 3));
    CHECK(encode_graph6(build_named("complete", 70)).substr(0, 4) == "~?@E");

    const Graph big = build_named("complete", 70);
    CHECK(parse_graph6(encode_graph6(big)) == big);

    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B "), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B?"), ParseError);
}

TEST_CASE("graph6 round trip on generated corpora")
{
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& t : generate_trees(n)) CHECK(parse_graph6(encode_graph6(t)) == t);
    }
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : generate_connected_graphs(n)) CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("distances")
{
    const DistanceMatrix ex(build_named("example41"));
    CHECK(ex(1, 4) == 3);
    const DistanceMatrix star(build_named("star", 4));
    CHECK(star(1, 2) == 2);
    const DistanceMatrix c6(build_named("cycle", 6));
    CHECK(c6(0, 3) == 3);

    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_connected_graph(8, rng);
        const DistanceMatrix d(g);
        for (Vertex u = 0; u < 8; ++u) {
            CHECK(d(u, u) == 0);
            for (Vertex v = 0; v < 8; ++v) {
                CHECK(d(u, v) == d(v, u));
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
                for (Vertex w = 0; w < 8; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
            }
        }
    }
}

TEST_CASE("leaves and the spider")
{
    CHECK(leaf_count(build_named("T33")) == 6);
    CHECK(leaf_count(build_named("star", 4)) == 4);
    CHECK(leaf_count(build_named("Gm", 5)) == 9);
    CHECK(build_named("Gm", 5).order() == 13);
    CHECK(contains_t33(build_named("T33")));
    CHECK(contains_t33(build_named("Gm", 5)));
    CHECK_FALSE(contains_t33(build_named("path", 12)));
    CHECK_THROWS_AS(leaf_count(build_named("cycle", 4)), PreconditionError);
    CHECK_THROWS_AS(contains_t33(build_named("cycle", 4)), PreconditionError);
}

TEST_CASE("spider test agrees with subgraph search on every tree up to 11 vertices")
{
    const Graph spider = build_named("T33");
    for (int n = 1; n <= 11; ++n) {
        for (const Graph& t : generate_trees(n)) {
            const bool fast = contains_t33(t);
            CHECK(fast == has_subgraph(spider, t));
            if (fast) {
                CHECK(leaf_count(t) >= 6);
                CHECK(n >= 10);
            }
        }
    }
}

TEST_CASE("rooted tree")
{
    const RootedTree t(build_named("example41"), 1);
    CHECK(t.root() == 1);
    CHECK(t.parent(0) == 1);
    CHECK(t.level(3) == 3);
    CHECK(t.leaves_below(0) == 2);
    CHECK(t.subtree(2) == VertexSet{2, 3, 4});
    CHECK(t.strict_meet(VertexSet{3, 4}) == 2);
    CHECK(t.strict_meet(VertexSet{2, 3}) == 0);
    CHECK(t.strict_meet(VertexSet{1}) == std::nullopt);
    CHECK(t.is_ancestor(0, 4));
    CHECK_FALSE(t.is_ancestor(4, 0));
}

TEST_CASE("block decomposition")
{
    const Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const auto bd = block_decomposition(bowtie);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == VertexSet{0, 1, 2});
    CHECK(bd.blocks[1] == VertexSet{2, 3, 4});
    CHECK(bd.cut_vertices == VertexSet{2});

    CHECK(block_decomposition(build_named("path", 3)).blocks.size() == 2);
    CHECK(block_decomposition(build_named("cycle", 6)).blocks.size() == 1);

    for (int n = 2; n <= 9; ++n) {
        for (const Graph& t : generate_trees(n)) {
            int sum = 0;
            for (VertexSet b : block_decomposition(t).blocks) sum += b.size() - 1;
            CHECK(sum == n - 1);
        }
    }

    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_block_outerplanar(3, 10, rng);
        const auto d = block_decomposition(g);
        VertexSet cuts;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!connected_without(g, v)) cuts.insert(v);
        }
        CHECK(d.cut_vertices == cuts);
        // Every edge in exactly one block; blocks share at most a vertex.
        for (const Edge& e : g.edges()) {
            int holders = 0;
            for (VertexSet b : d.blocks) holders += b.contains(e.u) && b.contains(e.v) ? 1 : 0;
            CHECK(holders == 1);
        }
        for (std::size_t a = 0; a < d.blocks.size(); ++a) {
            for (std::size_t b = a + 1; b < d.blocks.size(); ++b) CHECK((d.blocks[a] & d.blocks[b]).size() <= 1);
        }
    }
}

TEST_CASE("outerplanar embedding")
{
    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    const auto e5 = outerplanar_embedding(c5);
    REQUIRE(e5);
    CHECK(e5->outer_order == std::vector<Vertex>{0, 1, 2, 3, 4});
    REQUIRE(e5->chords.size() == 1);
    CHECK(e5->chords[0] == Edge{0, 2});

    CHECK_FALSE(outerplanar_embedding(build_named("complete", 4)));
    const auto e6 = outerplanar_embedding(build_named("cycle", 6));
    REQUIRE(e6);
    CHECK(e6->chords.empty());
    CHECK_THROWS_AS(outerplanar_embedding(build_named("path", 4)), PreconditionError);

    const Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(outerplanar_embedding(k23));
}
