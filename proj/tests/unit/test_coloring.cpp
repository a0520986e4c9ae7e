#include <doctest.h>

#include "locgame/coloring.hpp"
#include "locgame/error.hpp"

using namespace locgame;

namespace {

// Example tree in 1-based labels: 1-2, 1-3, 3-4, 3-5.
const Graph& ex()
{
    static const Graph g = build_named("example41");
    return g;
}

}  // namespace

TEST_CASE("distance colorings of the five-vertex example")
{
    CHECK(distance_coloring(ex(), VertexSet{0}).to_string() == "1|2,3|4,5");
    CHECK(distance_coloring(ex(), VertexSet{1}).to_string() == "1|2|3|4,5");
    CHECK(distance_coloring(ex(), VertexSet{2}).to_string() == "1,4,5|2|3");
    CHECK(distance_coloring(ex(), VertexSet{3}).to_string() == "1,5|2|3|4");
    CHECK(distance_coloring(ex(), VertexSet{4}).to_string() == "1,4|2|3|5");
    CHECK(distance_coloring(ex(), VertexSet::full(5)).is_discrete());
    CHECK(distance_coloring(ex(), VertexSet{0}).probe() == VertexSet{0});
    CHECK_THROWS_AS(distance_coloring(ex(), VertexSet{}), PreconditionError);

    const auto all = distance_colorings(ex(), 1);
    REQUIRE(all.size() == 5);
    CHECK(all[2].to_string() == "1,4,5|2|3");
}

TEST_CASE("distance coloring counts")
{
    const Graph k2 = build_named("path", 2);
    CHECK(distance_colorings(k2, 1, false).size() == 2);
    CHECK(distance_colorings(k2, 1, true).size() == 1);
    CHECK(distance_colorings(ex(), 1, false).size() == 5);
    CHECK(distance_colorings(ex(), 2, false).size() == 15);
    CHECK_THROWS_AS(distance_colorings(ex(), 0), PreconditionError);
    CHECK_THROWS_AS(distance_colorings(ex(), 6), PreconditionError);
}

TEST_CASE("restriction and monochromatic sets")
{
    const Coloring c1 = distance_coloring(ex(), VertexSet{0});
    const auto r = restrict_to(c1, VertexSet{1, 2});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == VertexSet{1, 2});
    CHECK(restrict_to(c1, VertexSet{}).empty());
    CHECK(restrict_to(c1, VertexSet{3}) == std::vector<VertexSet>{VertexSet{3}});
    CHECK(restrict_to(c1, VertexSet{0, 1, 3}) == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{3}});

    CHECK(is_monochromatic(c1, VertexSet{3, 4}));
    CHECK_FALSE(is_monochromatic(c1, VertexSet{0, 1}));
    CHECK(is_monochromatic(c1, VertexSet{2}));
    CHECK_THROWS_AS(is_monochromatic(c1, VertexSet{}), PreconditionError);
}

TEST_CASE("partition invariants")
{
    const std::vector<int> labels{7, 3, 7, 3, 9};
    const std::vector<char> relabelled{'b', 'a', 'b', 'a', 'z'};
    CHECK(Coloring::from_labels(std::span<const int>(labels)) == Coloring::from_labels(std::span<const char>(relabelled)));
    CHECK(Coloring::from_labels(std::span<const int>(labels)).to_string() == "1,3|2,4|5");

    Rng rng(1);
    for (int round = 0; round < 50; ++round) {
        const Graph g = random_connected_graph(8, rng);
        const DistanceMatrix d(g);
        for (Vertex s = 0; s < 8; ++s) {
            const Coloring single = distance_coloring(d, VertexSet::singleton(s));
            CHECK(single.blocks()[static_cast<std::size_t>(single.class_of(s))] == VertexSet::singleton(s));
            const Vertex extra = (s + 3) % 8;
            const Coloring wider = distance_coloring(d, VertexSet{s, extra});
            for (VertexSet b : wider.blocks()) CHECK(is_monochromatic(single, b));
        }
    }
}

TEST_CASE("coloring text format")
{
    const Coloring c = parse_coloring("1|2,3|4,5", 5);
    CHECK(c == distance_coloring(ex(), VertexSet{0}));
    CHECK(parse_coloring(" 4 , 5 | 1|3,2", 5) == c);
    const auto many = parse_colorings("# two\n1|2,3|4,5\n\n1,2,3,4,5\n", 5);
    REQUIRE(many.size() == 2);
    CHECK(many[1] == Coloring::single_class(5));
    CHECK_THROWS_AS(parse_coloring("1|2,3", 5), ParseError);
    CHECK_THROWS_AS(parse_coloring("1,2|2,3,4,5", 5), ParseError);
    CHECK_THROWS_AS(parse_coloring("1|2|3|4|6", 5), ParseError);
    CHECK_THROWS_AS(parse_coloring("1||2,3,4,5", 5), ParseError);
    CHECK_THROWS_AS(parse_colorings("# nothing\n", 5), ParseError);
}

TEST_CASE("random colorings")
{
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const Coloring c = random_coloring(6, rng);
        CHECK(c.order() == 6);
        CHECK(c.blocks().size() <= 6);
    }
    Rng a(8);
    Rng b(8);
    CHECK(random_coloring(9, a) == random_coloring(9, b));
}
