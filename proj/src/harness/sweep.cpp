#include <chrono>
#include <condition_variable>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "domlab/connectivity.hpp"
#include "domlab/cycle_audits.hpp"
#include "domlab/graph6.hpp"
#include "domlab/harness.hpp"
#include "domlab/reduction.hpp"

namespace domlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json not_applicable(const std::string& reason) {
    return {{"status", "not_applicable"}, {"holds", true}, {"vacuous", false}, {"witness_digest", nullptr},
            {"reason", reason}};
}

nlohmann::json timed_out() { return verdict_summary(AuditVerdict::timeout()); }

struct Base {
    int connectivity = 0;
    bool cubic = false;
    bool connected = false;
    std::optional<int> gamma, idom;
    bool timed_out = false;
};

nlohmann::json base_to_json(const Base& b) {
    return {{"connectivity", b.connectivity},
            {"cubic", b.cubic},
            {"connected", b.connected},
            {"gamma", b.gamma ? nlohmann::json(*b.gamma) : nlohmann::json(nullptr)},
            {"idom", b.idom ? nlohmann::json(*b.idom) : nlohmann::json(nullptr)}};
}

Base base_from_json(const nlohmann::json& j) {
    Base b;
    b.connectivity = j["connectivity"];
    b.cubic = j["cubic"];
    b.connected = j["connected"];
    if (!j["gamma"].is_null()) b.gamma = j["gamma"].get<int>();
    if (!j["idom"].is_null()) b.idom = j["idom"].get<int>();
    return b;
}

Base compute_base(const Graph& g, const Deadline& deadline) {
    Base b;
    b.connectivity = g.order() >= 1 ? vertex_connectivity(g) : 0;
    b.cubic = is_cubic(g);
    b.connected = is_connected(g);
    if (g.order() > 64) return b;
    try {
        b.gamma = static_cast<int>(gamma_exact(g, deadline).size);
        b.idom = static_cast<int>(idom_exact(g, deadline).size);
    } catch (const BudgetExceeded&) {
        b.timed_out = true;
    }
    return b;
}

// Checks reuse the base gamma and idom instead of re-solving.
nlohmann::json run_check(const std::string& name, const Graph& g, const Base& b, const SweepOptions& options,
                         const Deadline& deadline) {
    const int n = g.order();
    const int bound = reed_bound(n);
    const bool solved = b.gamma && b.idom;

    if (name == "reed_bound" || name == "theorem_T1") {
        if (!b.cubic || !b.connected) return not_applicable("not connected cubic");
        if (!solved) return timed_out();
        if (name == "reed_bound") {
            nlohmann::json d{{"gamma", *b.gamma}, {"bound", bound}};
            return verdict_summary(*b.gamma <= bound ? AuditVerdict::pass(d) : AuditVerdict::fail(d, d));
        }
        nlohmann::json d{{"gamma", *b.gamma}, {"idom", *b.idom}, {"bound", bound}};
        if (*b.gamma <= bound) return verdict_summary(AuditVerdict::vacuous_pass(d));
        return verdict_summary(*b.gamma == *b.idom ? AuditVerdict::pass(d) : AuditVerdict::fail(d, d));
    }
    if (name == "claw_free" || name == "no_forbidden_I") {
        const bool configuration = name == "claw_free" ? find_induced_claw(g).has_value() : find_forbidden_I(g).has_value();
        if (configuration) return verdict_summary(AuditVerdict::vacuous_pass());
        if (!solved) return timed_out();
        nlohmann::json d{{"gamma", *b.gamma}, {"idom", *b.idom}};
        return verdict_summary(*b.gamma == *b.idom ? AuditVerdict::pass(d) : AuditVerdict::fail(d, d));
    }
    if (name == "lemma_disjoint") {
        if (g.max_degree() > 3) return not_applicable("max degree above 3");
        if (n > kEnumerationMaxOrder) return not_applicable("order above enumeration guard");
        return verdict_summary(check_lemma_disjoint(g, gamma_min_edges(g, deadline).set));
    }
    if (name == "claim_nonempty") {
        if (b.connectivity < 3) return not_applicable("connectivity below 3");
        return verdict_summary(audit_claim_nonempty(g, deadline));
    }
    if (name == "dset_from_DSG") {
        if (b.connectivity < 3) return not_applicable("connectivity below 3");
        if (n > kEnumerationMaxOrder) return not_applicable("order above enumeration guard");
        DsetPipelineOptions po;
        po.cycle_limit = options.cycle_limit;
        po.deadline = deadline;
        return verdict_summary(dset_from_DSG(g, po));
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

void count(CheckCounts& c, const std::string& status) {
    if (status == "holds") ++c.holds;
    else if (status == "vacuous") ++c.vacuous;
    else if (status == "violated") ++c.violated;
    else if (status == "timeout") ++c.timeout;
    else ++c.not_applicable;
}

}  // namespace

bool SweepResult::any_violation() const {
    for (const auto& [name, c] : counts)
        if (c.violated > 0) return true;
    return false;
}

nlohmann::json audit_graph(const Graph& g, const SweepOptions& options, const ResultCache* cache,
                           std::vector<std::pair<std::string, nlohmann::json>>* fresh, std::size_t* hits,
                           std::size_t* misses) {
    const std::string g6 = encode_graph6(g);
    const Deadline deadline = Deadline::after_ms(options.budget_ms);
    nlohmann::json elapsed = nlohmann::json::object();

    auto lookup = [&](const std::string& key) -> std::optional<nlohmann::json> {
        if (!cache || !cache->enabled()) return std::nullopt;
        auto hit = cache->find(g6, key);
        ++*(hit ? hits : misses);
        return hit;
    };

    auto start = Clock::now();
    Base base;
    if (auto hit = lookup("base")) {
        base = base_from_json(*hit);
    } else {
        base = compute_base(g, deadline);
        if (!base.timed_out && fresh) fresh->emplace_back("base", base_to_json(base));
    }
    elapsed["base"] = ms_since(start);

    nlohmann::json checks = nlohmann::json::object();
    for (const std::string& name : options.checks) {
        start = Clock::now();
        if (auto hit = lookup(name)) {
            checks[name] = *hit;
        } else {
            nlohmann::json v;
            try {
                v = run_check(name, g, base, options, deadline);
            } catch (const BudgetExceeded&) {
                v = timed_out();
            }
            if (v["status"] != "timeout" && fresh) fresh->emplace_back(name, v);
            checks[name] = std::move(v);
        }
        elapsed[name] = ms_since(start);
    }

    nlohmann::json rec{{"graph6", g6},
                       {"n", g.order()},
                       {"m", g.size()},
                       {"connectivity", base.connectivity},
                       {"cubic", base.cubic},
                       {"gamma", base.gamma ? nlohmann::json(*base.gamma) : nlohmann::json(nullptr)},
                       {"idom", base.idom ? nlohmann::json(*base.idom) : nlohmann::json(nullptr)},
                       {"reed_bound", reed_bound(g.order())},
                       {"checks", checks}};
    if (options.timings) rec["elapsed_ms"] = elapsed;
    return rec;
}

SweepResult run_sweep(const std::vector<CorpusEntry>& corpus, const SweepOptions& options, ResultCache* cache) {
    struct Slot {
        bool ready = false;
        nlohmann::json record;
        std::vector<std::pair<std::string, nlohmann::json>> fresh;
        std::size_t hits = 0, misses = 0;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(corpus.size());
    std::mutex mu;
    std::condition_variable cv;
    std::size_t next = 0;

    auto worker = [&] {
        while (true) {
            std::size_t i;
            {
                std::lock_guard lock(mu);
                if (next == corpus.size()) return;
                i = next++;
            }
            Slot local;
            try {
                local.record = audit_graph(corpus[i].graph, options, cache, &local.fresh, &local.hits, &local.misses);
            } catch (...) {
                local.error = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(local);
                slots[i].ready = true;
            }
            cv.notify_all();
        }
    };

    const int jobs = std::max(1, options.jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

    // Reorder buffer: consume slots strictly in input order.
    SweepResult result;
    for (const std::string& name : options.checks) result.counts[name];
    std::exception_ptr first_error;
    std::vector<std::tuple<std::string, std::string, nlohmann::json>> fresh;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Slot slot;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[i].ready; });
            slot = std::move(slots[i]);
        }
        if (slot.error) {
            if (!first_error) first_error = slot.error;
            continue;
        }
        result.cache_hits += slot.hits;
        result.cache_misses += slot.misses;
        for (auto& [check, value] : slot.fresh) fresh.emplace_back(slot.record["graph6"], check, std::move(value));
        for (const std::string& name : options.checks) count(result.counts[name], slot.record["checks"][name]["status"]);
        result.records.push_back(std::move(slot.record));
    }
    for (auto& t : pool) t.join();
    // Workers only read the cache; new entries land after they are done, in input order.
    if (cache) {
        for (auto& [g6, check, value] : fresh) cache->put(g6, check, std::move(value));
        cache->flush();
    }
    if (first_error) std::rethrow_exception(first_error);
    return result;
}

std::string records_to_jsonl(const SweepResult& r) {
    std::string out;
    for (const auto& rec : r.records) out += rec.dump() + "\n";
    return out;
}

std::string summary_csv(const SweepResult& r, const std::vector<std::string>& checks) {
    std::ostringstream os;
    os << "check,holds,vacuous,violated,timeout,not_applicable,total\n";
    for (const std::string& name : checks) {
        const CheckCounts& c = r.counts.at(name);
        os << name << ',' << c.holds << ',' << c.vacuous << ',' << c.violated << ',' << c.timeout << ','
           << c.not_applicable << ',' << c.total() << '\n';
    }
    return os.str();
}

}  // namespace domlab
