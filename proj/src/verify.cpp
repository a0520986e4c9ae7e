#include "locgame/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "locgame/coloring.hpp"
#include "locgame/error.hpp"
#include "locgame/game_structure.hpp"
#include "locgame/generators.hpp"
#include "locgame/strategy.hpp"

namespace locgame {

namespace {

using Clock = std::chrono::steady_clock;

std::string show(std::optional<int> v)
{
    return v ? std::to_string(*v) : "inf";
}

bool at_most(std::optional<int> value, std::optional<int> bound)
{
    if (!bound) return true;
    return value && *value <= *bound;
}

ClaimRecord upper(std::string claim, const std::string& g6, std::optional<int> value, std::optional<int> bound,
                  std::string note = {})
{
    return {std::move(claim), g6, value, bound, at_most(value, bound), std::move(note)};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

template <typename Item, typename Check>
VerificationReport run_suite(std::string suite, const std::vector<Item>& items, const VerifyOptions& options,
                             Check check)
{
    const auto start = Clock::now();
    std::vector<std::vector<ClaimRecord>> per_item(items.size());
    parallel_for(items.size(), options.threads, [&](std::size_t i) { per_item[i] = check(items[i]); });
    VerificationReport report;
    report.suite = std::move(suite);
    for (auto& records : per_item) {
        for (auto& r : records) report.records.push_back(std::move(r));
    }
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

std::vector<ClaimRecord> check_tree(const Graph& t, ResultsCache* cache)
{
    const std::string g6 = encode_graph6(t);
    const int n = t.order();
    std::vector<ClaimRecord> out;
    if (n == 1) {
        out.push_back({"tree.single_vertex", g6, cached_game_value(t, 1, cache), std::nullopt, true,
                       "leaf bounds are not applied to the single-vertex tree"});
        return out;
    }
    const int leaves = leaf_count(t);
    const auto value1 = cached_game_value(t, 1, cache);
    const bool spider = contains_t33(t);
    const int k = spider ? 2 : 1;
    const auto value = spider ? cached_game_value(t, 2, cache) : value1;
    const int zeta_found = value1 ? 1 : (value ? 2 : 3);
    out.push_back({"tree.localization_number", g6, zeta_found, k, zeta_found == k,
                   spider ? "contains the spider" : "spider-free"});

    const std::string claim = spider ? "tree.two_cop_rounds_le_half_leaves_minus_1" : "tree.one_cop_rounds_le_leaves";
    const int bound = spider ? leaves / 2 - 1 : leaves;
    try {
        std::unique_ptr<CopStrategy> strategy;
        if (spider) {
            strategy = std::make_unique<TwoCopTreeStrategy>(t);
        } else {
            strategy = std::make_unique<OneCopTreeStrategy>(t);
        }
        const int rounds = simulate_adversarial(t, *strategy, {}).worst_rounds;
        out.push_back(upper(claim, g6, rounds, bound));
        const bool sound = value && rounds >= *value;
        out.push_back({"tree.rounds_ge_value", g6, rounds, value, sound, "lower bound: rounds >= exact value"});
    } catch (const StrategyError& e) {
        out.push_back({claim, g6, std::nullopt, bound, false, e.what()});
    }
    if (spider) {
        out.push_back(upper("tree.value_le_half_n_minus_3", g6, value, n / 2 - 3));
    } else {
        out.push_back(upper("tree.value_le_n_minus_1", g6, value, n - 1));
    }
    return out;
}

}  // namespace

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(*path_);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto doc = nlohmann::json::parse(line);
            const auto& v = doc.at("value");
            entries_[{doc.at("graph6").get<std::string>(), doc.at("k").get<int>()}] =
                v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("cache line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

std::optional<std::optional<int>> ResultsCache::lookup(const std::string& graph6, int k) const
{
    std::lock_guard lock(mutex_);
    auto it = entries_.find({graph6, k});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultsCache::store(const std::string& graph6, int k, std::optional<int> value)
{
    std::lock_guard lock(mutex_);
    if (!entries_.emplace(std::pair{graph6, k}, value).second) return;
    if (!path_) return;
    nlohmann::ordered_json doc;
    doc["graph6"] = graph6;
    doc["k"] = k;
    doc["value"] = value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json();
    const std::string line = doc.dump() + "\n";
    std::ofstream out(*path_, std::ios::app | std::ios::binary);
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
}

std::size_t ResultsCache::size() const
{
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::optional<int> cached_game_value(const Graph& g, int k, ResultsCache* cache, SolverLimits limits)
{
    if (!cache) return game_value(g, k, limits);
    const std::string g6 = encode_graph6(g);
    if (auto hit = cache->lookup(g6, k)) return *hit;
    const auto value = game_value(g, k, limits);
    cache->store(g6, k, value);
    return value;
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const ClaimRecord& r) { return !r.ok; }));
}

std::string VerificationReport::json() const
{
    auto optional_int = [](std::optional<int> v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const ClaimRecord& r : records) {
        nlohmann::ordered_json item;
        item["claim"] = r.claim;
        item["graph"] = r.graph;
        item["computed"] = optional_int(r.computed);
        item["bound"] = optional_int(r.bound);
        item["ok"] = r.ok;
        item["note"] = r.note;
        list.push_back(std::move(item));
    }
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["records"] = std::move(list);
    doc["summary"] = {{"total", records.size()}, {"passed", records.size() - failures()}, {"failed", failures()}};
    return doc.dump();
}

std::string VerificationReport::csv() const
{
    std::ostringstream out;
    out << "claim,graph,computed,bound,ok,note\n";
    for (const ClaimRecord& r : records) {
        out << csv_field(r.claim) << ',' << csv_field(r.graph) << ',' << show(r.computed) << ',' << show(r.bound) << ','
            << (r.ok ? "true" : "false") << ',' << csv_field(r.note) << '\n';
    }
    return out.str();
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task)
{
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

VerificationReport verify_tree_bounds(int n_max, const VerifyOptions& options)
{
    if (n_max < 1 || n_max > 12) throw PreconditionError("tree suite: n_max must lie in 1..12");
    std::vector<Graph> trees;
    for (int n = 1; n <= n_max; ++n) {
        for (Graph& t : generate_trees(n)) trees.push_back(std::move(t));
    }
    return run_suite("trees", trees, options, [&](const Graph& t) { return check_tree(t, options.cache); });
}

VerificationReport verify_outerplanar(int n_max, int samples, int block_n_max, const VerifyOptions& options)
{
    if (n_max < 3 || n_max > 10) throw PreconditionError("outerplanar suite: n_max must lie in 3..10");
    if (samples < 0 || block_n_max < 3 || block_n_max > 12) throw PreconditionError("outerplanar suite: bad sample settings");

    std::vector<Graph> exhaustive;
    for (int n = 3; n <= n_max; ++n) {
        for (Graph& g : generate_2connected_outerplanar(n)) exhaustive.push_back(std::move(g));
    }
    VerificationReport report = run_suite("outerplanar", exhaustive, options, [&](const Graph& g) {
        const std::string g6 = encode_graph6(g);
        const int n = g.order();
        const auto value = cached_game_value(g, 2, options.cache);
        const auto embedding = outerplanar_embedding(g);
        std::vector<ClaimRecord> out;
        if (!embedding) {
            out.push_back({"outerplanar.embedding", g6, std::nullopt, std::nullopt, false, "no outerplanar embedding found"});
            return out;
        }
        const int chords = static_cast<int>(embedding->chords.size());
        const bool consistent = static_cast<std::size_t>(chords) == g.edge_count() - static_cast<std::size_t>(n);
        out.push_back(upper("outerplanar.value_le_chords_plus_1", g6, value, chords + 1,
                            consistent ? "c=" + std::to_string(chords) : "chord count differs from |E|-n"));
        if (!consistent) out.back().ok = false;
        out.push_back(upper("outerplanar.value_le_n_minus_2", g6, value, n - 2));
        return out;
    });

    std::vector<int> seeds(static_cast<std::size_t>(samples));
    std::iota(seeds.begin(), seeds.end(), 0);
    VerificationReport blocks = run_suite("outerplanar", seeds, options, [&](int seed) {
        Rng rng(static_cast<std::uint64_t>(seed));
        const Graph g = random_block_outerplanar(3, block_n_max, rng);
        int sum = 0;
        for (VertexSet b : block_decomposition(g).blocks) sum += b.size() - 1;
        const auto value = cached_game_value(g, 2, options.cache);
        return std::vector<ClaimRecord>{
            upper("outerplanar.value_le_block_sum", encode_graph6(g), value, sum, "seed=" + std::to_string(seed))};
    });
    for (auto& r : blocks.records) report.records.push_back(std::move(r));
    report.seconds += blocks.seconds;
    return report;
}

std::uint64_t two_coloring_seed(int n, int seed)
{
    return static_cast<std::uint64_t>(n) * 1'000'003ULL + static_cast<std::uint64_t>(seed);
}

VerificationReport verify_two_colorings(const std::vector<int>& sizes, int seeds, const VerifyOptions& options)
{
    std::vector<std::pair<int, int>> items;
    for (int n : sizes) {
        if (n < 2 || n > GameStructure::kMaxOrder) throw PreconditionError("two-coloring suite: n must lie in 2..16");
        for (int s = 0; s < seeds; ++s) items.emplace_back(n, s);
    }
    return run_suite("two-colorings", items, options, [](std::pair<int, int> item) {
        const auto [n, seed] = item;
        Rng rng(two_coloring_seed(n, seed));
        const Graph g = random_connected_graph(n, rng);
        const Coloring a = random_coloring(n, rng);
        const Coloring b = random_coloring(n, rng);
        const TwoColoringReport r = check_two_coloring_structure(g, a, b);
        const std::string g6 = encode_graph6(g);
        const std::string note = "seed=" + std::to_string(seed) + " colorings=" + a.to_string() + " ; " + b.to_string();
        std::string oversized;
        for (VertexSet s : r.oversized) oversized += (oversized.empty() ? " sets=" : " ") + set_list(s);
        return std::vector<ClaimRecord>{
            {"two_coloring.height_le_pairs_plus_1", g6, r.height, r.bound, r.height_ok, note},
            {"two_coloring.upper_rows_are_pairs", g6, static_cast<int>(r.oversized.size()), 0, r.oversized.empty(),
             note + oversized},
        };
    });
}

}  // namespace locgame
