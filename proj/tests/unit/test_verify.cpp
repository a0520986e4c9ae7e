#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "locgame/error.hpp"
#include "locgame/generators.hpp"
#include "locgame/verify.hpp"

using namespace locgame;

namespace {

std::filesystem::path temp_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("results cache round trip")
{
    const auto path = temp_file("locgame_cache_test.jsonl");
    {
        ResultsCache cache(path);
        CHECK(cache.size() == 0);
        CHECK_FALSE(cache.lookup("Bg", 1));
        cache.store("Bg", 1, 1);
        cache.store("I???", 1, std::nullopt);
        cache.store("Bg", 1, 7);
        CHECK(cache.lookup("Bg", 1) == std::optional<std::optional<int>>(1));
    }
    ResultsCache again(path);
    CHECK(again.size() == 2);
    REQUIRE(again.lookup("I???", 1));
    CHECK_FALSE(*again.lookup("I???", 1));
    CHECK_FALSE(again.lookup("Bg", 2));

    const Graph ex = build_named("example41");
    CHECK(cached_game_value(ex, 1, &again) == 2);
    CHECK(again.lookup(encode_graph6(ex), 1) == std::optional<std::optional<int>>(2));
    CHECK(cached_game_value(ex, 1, nullptr) == 2);

    std::ofstream(path, std::ios::app) << "{broken\n";
    CHECK_THROWS_AS(ResultsCache{path}, ParseError);
    std::filesystem::remove(path);
}

TEST_CASE("tree suite on small trees")
{
    const VerificationReport r = verify_tree_bounds(8, {2, nullptr});
    CHECK(r.suite == "trees");
    CHECK(r.failures() == 0);
    CHECK(r.records.front().claim == "tree.single_vertex");
    const auto doc = nlohmann::json::parse(r.json());
    CHECK(doc["summary"]["total"] == r.records.size());
    CHECK(doc["summary"]["failed"] == 0);
    CHECK_FALSE(doc.contains("seconds"));
    const std::string csv = r.csv();
    CHECK(csv.rfind("claim,graph,computed,bound,ok,note\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.records.size()) + 1);

    // Thread count does not change the report.
    CHECK(verify_tree_bounds(8, {1, nullptr}).json() == r.json());
    CHECK_THROWS_AS(verify_tree_bounds(13), PreconditionError);
}

TEST_CASE("outerplanar suite at small sizes")
{
    const VerificationReport r = verify_outerplanar(6, 10, 8, {});
    CHECK(r.failures() == 0);
    CHECK(r.records.size() == 2 * (1 + 3 + 11 + 45) + 10);
    CHECK_THROWS_AS(verify_outerplanar(2, 0), PreconditionError);
}

TEST_CASE("two-coloring suite records both claims per instance")
{
    const VerificationReport r = verify_two_colorings({4}, 20, {});
    CHECK(r.records.size() == 40);
    for (std::size_t i = 0; i < r.records.size(); i += 2) {
        CHECK(r.records[i].claim == "two_coloring.height_le_pairs_plus_1");
        CHECK(r.records[i].ok);
        CHECK(r.records[i + 1].claim == "two_coloring.upper_rows_are_pairs");
    }
    CHECK(two_coloring_seed(5, 3) == 5000018);
    CHECK_THROWS_AS(verify_two_colorings({1}, 1), PreconditionError);
}

TEST_CASE("parallel_for visits each index once and forwards errors")
{
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7) throw StrategyError("boom");
                    }),
                    StrategyError);
}
