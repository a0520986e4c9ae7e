#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locgame/graph.hpp"
#include "locgame/solver.hpp"

namespace locgame {

/// Game values keyed by (graph6, k). Loaded from a JSON-lines file on
/// construction; new values are appended one whole line at a time.
class ResultsCache {
public:
    ResultsCache() = default;
    explicit ResultsCache(std::filesystem::path path);

    /// Outer nullopt: not cached. Inner nullopt: cached as infinite.
    std::optional<std::optional<int>> lookup(const std::string& graph6, int k) const;
    void store(const std::string& graph6, int k, std::optional<int> value);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::pair<std::string, int>, std::optional<int>> entries_;
    std::optional<std::filesystem::path> path_;
};

/// Game value through an optional cache.
std::optional<int> cached_game_value(const Graph& g, int k, ResultsCache* cache, SolverLimits limits = {});

struct ClaimRecord {
    std::string claim;
    std::string graph;  // graph6
    std::optional<int> computed;  // nullopt = infinite
    std::optional<int> bound;     // nullopt = infinite
    bool ok = false;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::vector<ClaimRecord> records;
    double seconds = 0.0;

    std::size_t failures() const;
    /// {"suite", "records": [...], "summary": {"total", "passed", "failed"}}
    std::string json() const;
    /// Header "claim,graph,computed,bound,ok,note"; infinite values as "inf".
    std::string csv() const;
};

struct VerifyOptions {
    int threads = 0;  // 0 = hardware concurrency
    ResultsCache* cache = nullptr;
};

/// Every tree on 1..n_max vertices (n_max <= 12): strategy rounds against the
/// leaf bounds, against the exact value, and the value against n-1 or
/// floor(n/2)-3.
VerificationReport verify_tree_bounds(int n_max, const VerifyOptions& options = {});

/// Cycle-plus-chords graphs on 3..n_max vertices against c+1 and n-2, then
/// `samples` seeded block-composed graphs on 3..block_n_max vertices against
/// the sum of (block size - 1).
VerificationReport verify_outerplanar(int n_max, int samples, int block_n_max = 10, const VerifyOptions& options = {});

/// For each n in sizes and seed in 0..seeds-1: random connected graph plus two
/// random colorings; structure height against C(n,2)+1 and pair-only upper
/// rows of the reduced structure.
VerificationReport verify_two_colorings(const std::vector<int>& sizes, int seeds, const VerifyOptions& options = {});

/// Seed of instance (n, seed) in the two-coloring suite.
std::uint64_t two_coloring_seed(int n, int seed);

/// Runs task(i) for i in 0..count-1 on a pool of worker threads.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

}  // namespace locgame
