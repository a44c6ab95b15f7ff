#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace domlab {

/// Uniform result of every lemma, fact, claim and theorem check.
/// holds == false implies a witness; vacuous implies holds.
struct AuditVerdict {
    bool holds = true;
    bool vacuous = false;
    bool timed_out = false;
    std::optional<nlohmann::json> witness;
    nlohmann::json detail = nlohmann::json::object();

    static AuditVerdict pass(nlohmann::json detail = nlohmann::json::object()) {
        AuditVerdict v;
        v.detail = std::move(detail);
        return v;
    }
    static AuditVerdict vacuous_pass(nlohmann::json detail = nlohmann::json::object()) {
        AuditVerdict v = pass(std::move(detail));
        v.vacuous = true;
        return v;
    }
    static AuditVerdict fail(nlohmann::json witness, nlohmann::json detail = nlohmann::json::object()) {
        AuditVerdict v;
        v.holds = false;
        v.witness = std::move(witness);
        v.detail = std::move(detail);
        return v;
    }
    static AuditVerdict timeout() {
        AuditVerdict v = fail({{"reason", "budget"}});
        v.timed_out = true;
        return v;
    }

    /// "holds", "vacuous", "violated" or "timeout".
    std::string status() const {
        if (timed_out) return "timeout";
        if (!holds) return "violated";
        return vacuous ? "vacuous" : "holds";
    }
};

}  // namespace domlab
