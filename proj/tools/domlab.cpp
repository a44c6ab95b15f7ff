#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "acceptance.hpp"
#include "domlab/collections.hpp"
#include "domlab/connectivity.hpp"
#include "domlab/cycle_audits.hpp"
#include "domlab/domination.hpp"
#include "domlab/generators.hpp"
#include "domlab/graph6.hpp"
#include "domlab/harness.hpp"
#include "domlab/reduction.hpp"

using namespace domlab;

namespace {

constexpr int kUsageError = 2;

// Named graph, graph6 line, or a file whose first graph6 line is used.
Graph read_input(const std::string& input) {
    if (is_named_graph(input)) return named_graph(input);
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        std::ifstream in(input);
        auto lines = read_graph6_lines(in);
        if (lines.empty()) throw std::runtime_error("no graph6 line in " + input);
        return parse_graph6(lines.front());
    }
    return parse_graph6(input);
}

int cmd_solve(const std::string& input, std::int64_t budget_ms, bool independent) {
    const Graph g = read_input(input);
    const char* label = independent ? "idom" : "gamma";
    try {
        const Deadline deadline = Deadline::after_ms(budget_ms);
        auto cert = independent ? idom_exact(g, deadline) : gamma_exact(g, deadline);
        std::cout << label << '=' << cert.size << " set=" << to_string(cert.set) << " n=" << g.order()
                  << " bound=" << reed_bound(g.order()) << '\n';
    } catch (const BudgetExceeded&) {
        std::cout << label << "=timeout budget_ms=" << budget_ms << " n=" << g.order() << '\n';
    }
    return 0;
}

int cmd_sweep(const std::string& corpus_source, const std::string& checks, int jobs, const std::string& cache_path,
              std::uint64_t seed, std::int64_t budget_ms, const std::string& format, bool strict, bool timings,
              const std::string& summary_path) {
    SweepOptions options;
    options.checks = parse_check_list(checks);
    options.jobs = jobs;
    options.budget_ms = budget_ms;
    options.timings = timings;
    const auto corpus = load_corpus(corpus_source, seed);

    std::string path = cache_path;
    if (path.empty())
        if (const char* env = std::getenv("DOMLAB_CACHE")) path = env;
    ResultCache cache = path.empty() ? ResultCache() : ResultCache(path);

    const SweepResult result = run_sweep(corpus, options, &cache);
    const std::string csv = summary_csv(result, options.checks);
    if (format == "csv")
        std::cout << csv;
    else
        std::cout << records_to_jsonl(result);
    if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw std::runtime_error("cannot write " + summary_path);
        out << csv;
    }
    if (cache.enabled()) {
        const std::size_t lookups = result.cache_hits + result.cache_misses;
        std::cerr << "cache: " << result.cache_hits << '/' << lookups << " hits";
        if (lookups) std::cerr << " (" << (100 * result.cache_hits / lookups) << "%)";
        std::cerr << '\n';
    }
    return strict && result.any_violation() ? 1 : 0;
}

int cmd_csg(const std::string& input, std::size_t cycle_limit, std::int64_t budget_ms) {
    const Graph g = read_input(input);
    const Deadline deadline = Deadline::after_ms(budget_ms);
    const CsgResult csg = build_CSG(g, {cycle_limit, deadline});
    if (csg.collections.empty()) {
        std::cout << "no mod-3 cycles\n";
        return 0;
    }
    nlohmann::json collections = nlohmann::json::array(), dsgs = nlohmann::json::array();
    for (const CycleCollection& c : csg.collections) {
        collections.push_back(to_json(c));
        for (const CycleCollection& d : build_DSG(c)) {
            nlohmann::json j = to_json(d);
            const X3Assignments xs = enumerate_x3_assignments(d, 100000, deadline);
            j["assignments"] = xs.sets;
            j["assignments_truncated"] = xs.truncated;
            dsgs.push_back(std::move(j));
        }
    }
    const int kappa = g.order() >= 1 ? vertex_connectivity(g) : 0;
    DsetPipelineOptions po;
    po.cycle_limit = cycle_limit;
    po.deadline = deadline;
    nlohmann::json report{{"graph6", encode_graph6(g)},
                          {"connectivity", kappa},
                          {"cycles_truncated", csg.truncated},
                          {"csg", collections},
                          {"dsg", dsgs},
                          {"dset_from_DSG", to_json(dset_pipeline(g, po))}};
    if (kappa < 3) report["note"] = "connectivity below 3; the pipeline verdict is outside its hypothesis";
    std::cout << report.dump(2) << '\n';
    return 0;
}

int cmd_gen(const std::vector<std::string>& words, std::uint64_t seed) {
    std::string spec;
    for (const auto& w : words) spec += (spec.empty() ? "" : " ") + w;
    if (!is_generator_spec(spec)) throw CorpusError("not a generator spec: '" + spec + "'");
    for (const CorpusEntry& e : generate_corpus(spec, seed)) std::cout << encode_graph6(e.graph) << '\n';
    return 0;
}

int cmd_verify(const acceptance::Options& options) {
    const auto results = acceptance::run_all(options);
    return acceptance::report(results, options, std::cout) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph domination laboratory: exact solvers, audits and corpus sweeps"};
    app.require_subcommand(1);

    std::string input;
    std::int64_t budget_ms = 0;

    auto* gamma = app.add_subcommand("gamma", "minimum dominating set of one graph");
    gamma->add_option("input", input, "named graph, graph6 line or file")->required();
    gamma->add_option("--budget-ms", budget_ms, "time budget, 0 = unlimited");

    auto* idom = app.add_subcommand("idom", "minimum independent dominating set of one graph");
    idom->add_option("input", input, "named graph, graph6 line or file")->required();
    idom->add_option("--budget-ms", budget_ms, "time budget, 0 = unlimited");

    std::string corpus, checks = "all", cache, format = "jsonl", summary;
    int jobs = 1;
    std::uint64_t seed = 1;
    bool strict = false, timings = false;
    auto* sweep = app.add_subcommand("sweep", "audit every graph of a corpus");
    sweep->add_option("--corpus", corpus, "graph6/named-graph file or generator spec")->required();
    sweep->add_option("--checks", checks, "all or a comma-separated list");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--cache", cache, "JSONL cache file (default $DOMLAB_CACHE)");
    sweep->add_option("--seed", seed, "seed for generator specs without seed=");
    sweep->add_option("--budget-ms", budget_ms, "per-graph time budget, 0 = unlimited");
    sweep->add_option("--format", format, "stdout format")->check(CLI::IsMember({"jsonl", "csv"}));
    sweep->add_option("--summary", summary, "also write the CSV summary here");
    sweep->add_flag("--strict", strict, "exit 1 when any audit is violated");
    sweep->add_flag("--timings", timings, "add elapsed_ms to records");

    std::size_t cycle_limit = 20000;
    auto* csg = app.add_subcommand("csg", "cycle collections and the D_SG pipeline for one graph");
    csg->add_option("input", input, "named graph, graph6 line or file")->required();
    csg->add_option("--cycle-limit", cycle_limit, "cap on enumerated cycles");
    csg->add_option("--budget-ms", budget_ms, "time budget, 0 = unlimited");

    std::vector<std::string> spec;
    auto* gen = app.add_subcommand("gen", "print graph6 lines for a generator spec");
    gen->add_option("spec", spec, "e.g. random-cubic n=10 count=5 seed=1")->required();
    gen->add_option("--seed", seed, "seed when the spec has none");

    acceptance::Options verify_options;
    std::string fixtures, counterexample;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--timings", verify_options.timings, "print wall time per criterion");
    verify->add_option("--fixtures", fixtures, "'name graph6' lines replacing the built-in table");
    verify->add_option("--counterexample", counterexample, "graph6 file (default $DOMLAB_COUNTEREXAMPLE)");
    verify->add_option("--budget-ms", verify_options.counterexample_budget_ms, "budget for the external graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*gamma) return cmd_solve(input, budget_ms, false);
        if (*idom) return cmd_solve(input, budget_ms, true);
        if (*sweep)
            return cmd_sweep(corpus, checks, jobs, cache, seed, budget_ms, format, strict, timings, summary);
        if (*csg) return cmd_csg(input, cycle_limit, budget_ms);
        if (*gen) return cmd_gen(spec, seed);
        if (*verify) {
            if (!fixtures.empty()) verify_options.fixture_file = fixtures;
            if (!counterexample.empty()) verify_options.counterexample = counterexample;
            return cmd_verify(verify_options);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
