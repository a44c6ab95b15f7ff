#include <algorithm>
#include <cstdio>
#include <sstream>

#include "domlab/harness.hpp"

namespace domlab {

nlohmann::json to_json(const DominationCertificate& c) {
    return {{"set", c.set},
            {"size", c.size},
            {"independent", c.independent},
            {"induced_edges", c.induced_edges},
            {"kind", to_string(c.kind)}};
}

nlohmann::json to_json(const AuditVerdict& v) {
    nlohmann::json j{{"status", v.status()}, {"holds", v.holds}, {"vacuous", v.vacuous}, {"detail", v.detail}};
    j["witness"] = v.witness ? *v.witness : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const EarLink& l) {
    return {{"base", l.base}, {"derived", l.derived}, {"ear", l.ear}, {"replaced_arc", l.replaced_arc}};
}

nlohmann::json to_json(const CycleCollection& c) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const Cycle& cyc : c.cycles) cycles.push_back(cyc.vertices);
    nlohmann::json links = nlohmann::json::array();
    for (const EarLink& l : c.links) links.push_back(to_json(l));
    return {{"kind", to_string(c.kind)}, {"cycles", cycles}, {"links", links}, {"vertex_union", c.vertex_union}};
}

std::string digest(const nlohmann::json& j) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json verdict_summary(const AuditVerdict& v) {
    return {{"status", v.status()},
            {"holds", v.holds},
            {"vacuous", v.vacuous},
            {"witness_digest", v.witness ? nlohmann::json(digest(*v.witness)) : nlohmann::json(nullptr)}};
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{"reed_bound",     "theorem_T1",     "lemma_disjoint", "claw_free",
                                                "no_forbidden_I", "claim_nonempty", "dset_from_DSG"};
    return names;
}

std::vector<std::string> parse_check_list(std::string_view text) {
    if (text == "all") return all_check_names();
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string name;
    while (std::getline(in, name, ',')) {
        const auto& known = all_check_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown check '" + name + "'");
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    if (out.empty()) throw std::invalid_argument("empty check list");
    // Report order follows all_check_names().
    std::vector<std::string> ordered;
    for (const auto& n : all_check_names())
        if (std::find(out.begin(), out.end(), n) != out.end()) ordered.push_back(n);
    return ordered;
}

}  // namespace domlab
