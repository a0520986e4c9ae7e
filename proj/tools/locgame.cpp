#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "locgame/coloring.hpp"
#include "locgame/error.hpp"
#include "locgame/game_structure.hpp"
#include "locgame/generators.hpp"
#include "locgame/graph.hpp"
#include "locgame/solver.hpp"
#include "locgame/strategy.hpp"
#include "locgame/verify.hpp"

namespace {

using namespace locgame;

enum Exit : int { kOk = 0, kFailures = 1, kParse = 2, kCap = 3, kPrecondition = 4 };

struct GraphInput {
    std::string graph6;
    std::string edges;
    std::string named;

    void attach(CLI::App* cmd)
    {
        auto* g6 = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* el = cmd->add_option("--edges", edges, "edge-list file");
        auto* nm = cmd->add_option("--named", named, "named graph, NAME[:PARAM]");
        g6->excludes(el, nm);
        el->excludes(nm);
    }

    Graph load() const
    {
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!edges.empty()) return parse_edge_list(read_file(edges));
        if (!named.empty()) return parse_named(named);
        throw ParseError("one of --graph6, --edges or --named is required");
    }

    static std::string read_file(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot read " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

std::string show(std::optional<int> v)
{
    return v ? std::to_string(*v) : "inf";
}

nlohmann::ordered_json optional_json(std::optional<int> v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json();
}

int run(int argc, char** argv)
{
    CLI::App app{"Localization game solver and strategy verifier"};
    app.require_subcommand(1);

    GraphInput input;
    int k = 1;
    bool json = false;

    auto* lcapt = app.add_subcommand("lcapt", "exact capture time with k cops");
    input.attach(lcapt);
    lcapt->add_option("-k", k, "number of cops")->check(CLI::PositiveNumber);
    lcapt->add_flag("--json", json, "JSON output");

    auto* structure = app.add_subcommand("structure", "rows of the game structure");
    input.attach(structure);
    int distance_k = 0;
    std::string colorings_file;
    bool reduced = false;
    auto* dk = structure->add_option("--distance-k", distance_k, "use distance colorings of probe sets up to this size");
    auto* cf = structure->add_option("--colorings", colorings_file, "coloring file, one '1|2,3' partition per line");
    dk->excludes(cf);
    structure->add_flag("--reduced", reduced, "print the reduced structure");
    structure->add_flag("--json", json, "JSON output");

    auto* simulate = app.add_subcommand("simulate", "worst case of a strategy against every robber");
    input.attach(simulate);
    std::string strategy_name;
    simulate->add_option("--strategy", strategy_name, "one-cop-tree, two-cop-tree or optimal")
        ->required()
        ->check(CLI::IsMember({"one-cop-tree", "two-cop-tree", "optimal"}));
    std::optional<int> sim_k;
    simulate->add_option("-k", sim_k, "number of cops")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "batch verification of the bounds");
    std::string suite;
    int n_max = 0;
    int seeds = 200;
    int samples = 200;
    int threads = 0;
    std::string cache_file;
    std::string csv_file;
    verify->add_option("--suite", suite, "trees, outerplanar or two-colorings")
        ->required()
        ->check(CLI::IsMember({"trees", "outerplanar", "two-colorings", "lemma44"}));
    verify->add_option("--n-max", n_max, "largest vertex count");
    verify->add_option("--seeds", seeds, "random instances per vertex count (two-colorings)");
    verify->add_option("--samples", samples, "block-composed samples (outerplanar)");
    verify->add_option("--threads", threads, "worker threads, 0 for all cores");
    verify->add_option("--cache", cache_file, "JSON-lines results cache");
    verify->add_option("--csv", csv_file, "write a CSV report");
    verify->add_flag("--json", json, "JSON output");

    auto* zeta_cmd = app.add_subcommand("zeta", "localization number");
    input.attach(zeta_cmd);
    int k_max = 3;
    zeta_cmd->add_option("--k-max", k_max, "largest number of cops tried")->check(CLI::PositiveNumber);

    auto* md_cmd = app.add_subcommand("metric-dim", "metric dimension");
    input.attach(md_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    if (lcapt->parsed()) {
        const Graph g = input.load();
        const auto value = game_value(g, k);
        std::optional<int> height;
        if (g.order() <= GameStructure::kMaxOrder) {
            const auto colorings = distance_colorings(g, std::min(k, g.order()));
            const GameStructure gs = build_structure(g, colorings);
            if (gs.solvable()) height = gs.height();
        }
        if (json) {
            nlohmann::ordered_json doc;
            doc["graph6"] = encode_graph6(g);
            doc["k"] = k;
            doc["value"] = optional_json(value);
            doc["structure_height"] = optional_json(height);
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << show(value) << '\n';
        }
        return kOk;
    }

    if (structure->parsed()) {
        const Graph g = input.load();
        std::vector<Coloring> colorings;
        if (!colorings_file.empty()) {
            colorings = parse_colorings(GraphInput::read_file(colorings_file), g.order());
        } else {
            colorings = distance_colorings(g, distance_k > 0 ? distance_k : 1);
        }
        const GameStructure gs = build_structure(g, colorings);
        if (json) {
            if (!reduced) {
                std::cout << structure_json(gs) << '\n';
                return kOk;
            }
            const ReducedGameStructure rs = reduce_structure(gs, colorings);
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : rs.rows()) {
                nlohmann::ordered_json labels = nlohmann::ordered_json::array();
                for (VertexSet s : row) labels.push_back(set_label(s, g.order()));
                rows.push_back(std::move(labels));
            }
            std::cout << nlohmann::ordered_json{{"rows", rows}}.dump() << '\n';
            return kOk;
        }
        std::cout << format_rows(reduced ? reduce_structure(gs, colorings).rows() : gs.rows(), g.order());
        return kOk;
    }

    if (simulate->parsed()) {
        const Graph g = input.load();
        std::unique_ptr<CopStrategy> strategy;
        std::optional<int> bound;
        if (strategy_name == "one-cop-tree") {
            strategy = std::make_unique<OneCopTreeStrategy>(g);
            bound = leaf_count(g);
        } else if (strategy_name == "two-cop-tree") {
            strategy = std::make_unique<TwoCopTreeStrategy>(g);
            bound = leaf_count(g) / 2 - 1;
        } else {
            auto solver = std::make_shared<const ExactSolver>(g, sim_k.value_or(1));
            strategy = std::make_unique<OptimalStrategy>(solver);
            bound = solver->game_value();
        }
        if (sim_k && *sim_k != strategy->cops()) {
            throw PreconditionError(strategy_name + " plays with " + std::to_string(strategy->cops()) + " cop(s)");
        }
        const SimulationReport report = simulate_adversarial(g, *strategy);
        const auto value = game_value(g, strategy->cops());
        std::cout << simulation_json(g, *strategy, report, bound, value) << '\n';
        return kOk;
    }

    if (verify->parsed()) {
        std::optional<ResultsCache> cache;
        if (!cache_file.empty()) cache.emplace(cache_file);
        VerifyOptions options{threads, cache ? &*cache : nullptr};
        VerificationReport report;
        if (suite == "trees") {
            report = verify_tree_bounds(n_max > 0 ? n_max : 10, options);
        } else if (suite == "outerplanar") {
            report = verify_outerplanar(n_max > 0 ? n_max : 8, samples, 10, options);
        } else {
            std::vector<int> sizes;
            if (n_max > 0) {
                sizes.push_back(n_max);
            } else {
                sizes = {4, 5, 6};
            }
            report = verify_two_colorings(sizes, seeds, options);
        }
        if (!csv_file.empty()) {
            std::ofstream out(csv_file, std::ios::binary);
            out << report.csv();
        }
        if (json) {
            std::cout << report.json() << '\n';
        } else {
            std::cout << "suite " << report.suite << ": " << report.records.size() << " checks, " << report.failures()
                      << " failures\n";
            for (const ClaimRecord& r : report.records) {
                if (!r.ok) {
                    std::cout << "FAIL " << r.claim << ' ' << r.graph << " computed=" << show(r.computed)
                              << " bound=" << show(r.bound) << (r.note.empty() ? "" : " " + r.note) << '\n';
                }
            }
        }
        std::cerr << "elapsed " << report.seconds << " s\n";
        return report.failures() == 0 ? kOk : kFailures;
    }

    if (zeta_cmd->parsed()) {
        const auto z = zeta(input.load(), k_max);
        std::cout << (z ? std::to_string(*z) : "none") << '\n';
        return kOk;
    }

    if (md_cmd->parsed()) {
        std::cout << metric_dimension(input.load()) << '\n';
        return kOk;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    } catch (const StrategyError& e) {
        std::cerr << "strategy error: " << e.what() << '\n';
        return kFailures;
    }
}
