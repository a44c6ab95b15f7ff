#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domlab/audit.hpp"
#include "domlab/collections.hpp"
#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// Bumped whenever a check's semantics change; part of every cache key.
inline constexpr const char* kCodeVersion = "domlab-1";

// ---- corpus ---------------------------------------------------------------

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CorpusEntry {
    std::string label;
    Graph graph;
};

/// A named graph ("petersen", "c6", ...) or a graph6 line.
/// Throws Graph6Error for anything else.
Graph parse_graph_spec(std::string_view text);

/// Generator specs:
///   random-cubic n=N count=K [seed=S]
///   random-gnp n=N p=P count=K [seed=S]
///   random-maxdeg n=N d=D count=K [attempts=A] [seed=S]
/// Graph i of a spec with seed S is drawn from seed mix(S, i).
bool is_generator_spec(std::string_view text);
std::vector<CorpusEntry> generate_corpus(std::string_view spec, std::uint64_t default_seed = 1);

/// A generator spec, or a file of graph6 lines and named graphs
/// ('#' comments and blank lines skipped). Throws CorpusError.
std::vector<CorpusEntry> load_corpus(const std::string& source, std::uint64_t default_seed = 1);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// ---- serialization --------------------------------------------------------

nlohmann::json to_json(const DominationCertificate& c);
nlohmann::json to_json(const AuditVerdict& v);
nlohmann::json to_json(const EarLink& l);
nlohmann::json to_json(const CycleCollection& c);

/// 16 hex digits of FNV-1a over the compact JSON dump.
std::string digest(const nlohmann::json& j);

/// The per-check summary stored in records: status, holds, vacuous, witness_digest.
nlohmann::json verdict_summary(const AuditVerdict& v);

// ---- checks ---------------------------------------------------------------

/// Check names accepted by --checks, in report order.
const std::vector<std::string>& all_check_names();

/// Parses "all" or a comma-separated list; throws std::invalid_argument.
std::vector<std::string> parse_check_list(std::string_view text);

// ---- cache ----------------------------------------------------------------

/// Append-only JSONL store keyed by (graph6, check, version). Lines that do
/// not parse are dropped and the file is rewritten from the valid ones.
class ResultCache {
public:
    ResultCache() = default;
    explicit ResultCache(std::filesystem::path path);

    bool enabled() const { return !path_.empty(); }
    std::optional<nlohmann::json> find(const std::string& graph6, const std::string& check) const;
    /// Buffers an entry; flush() appends buffered entries in insertion order.
    void put(const std::string& graph6, const std::string& check, nlohmann::json value);
    void flush();

    std::size_t corrupt_lines() const { return corrupt_; }

private:
    std::filesystem::path path_;
    std::map<std::pair<std::string, std::string>, nlohmann::json> entries_;
    std::vector<nlohmann::json> pending_;
    std::size_t corrupt_ = 0;
};

// ---- sweep ----------------------------------------------------------------

struct SweepOptions {
    std::vector<std::string> checks = all_check_names();
    int jobs = 1;
    std::int64_t budget_ms = 0;  // per graph; 0 = unlimited
    bool timings = false;
    std::size_t cycle_limit = 20000;
};

struct CheckCounts {
    std::size_t holds = 0, vacuous = 0, violated = 0, timeout = 0, not_applicable = 0;
    std::size_t total() const { return holds + vacuous + violated + timeout + not_applicable; }
};

struct SweepResult {
    std::vector<nlohmann::json> records;
    std::map<std::string, CheckCounts> counts;
    std::size_t cache_hits = 0;
    std::size_t cache_misses = 0;
    bool any_violation() const;
};

/// One SweepRecord for a graph. Cache lookups are read-only here; new
/// results are returned through `fresh` as (check, value) pairs.
nlohmann::json audit_graph(const Graph& g, const SweepOptions& options, const ResultCache* cache,
                           std::vector<std::pair<std::string, nlohmann::json>>* fresh, std::size_t* hits,
                           std::size_t* misses);

/// Audits the corpus on a worker pool and returns records in input order.
/// The calling thread is the only writer of the cache.
SweepResult run_sweep(const std::vector<CorpusEntry>& corpus, const SweepOptions& options, ResultCache* cache = nullptr);

std::string records_to_jsonl(const SweepResult& r);
std::string summary_csv(const SweepResult& r, const std::vector<std::string>& checks);

}  // namespace domlab
