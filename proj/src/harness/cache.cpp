#include <fstream>
#include <iostream>

#include "domlab/harness.hpp"

namespace domlab {

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::vector<nlohmann::json> valid;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("graph6") || !j.contains("check") ||
            !j.contains("version") || !j.contains("value") || !j["graph6"].is_string() || !j["check"].is_string()) {
            ++corrupt_;
            continue;
        }
        valid.push_back(j);
        if (j["version"] == kCodeVersion) entries_[{j["graph6"], j["check"]}] = j["value"];
    }
    in.close();
    if (corrupt_ > 0) {
        std::cerr << "warning: cache " << path_.string() << ": dropped " << corrupt_
                  << " corrupt line(s), rebuilding\n";
        std::ofstream out(path_, std::ios::trunc);
        for (const auto& j : valid) out << j.dump() << '\n';
    }
}

std::optional<nlohmann::json> ResultCache::find(const std::string& graph6, const std::string& check) const {
    auto it = entries_.find({graph6, check});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::put(const std::string& graph6, const std::string& check, nlohmann::json value) {
    if (!enabled()) return;
    if (entries_.count({graph6, check})) return;
    pending_.push_back({{"graph6", graph6}, {"check", check}, {"version", kCodeVersion}, {"value", value}});
    entries_[{graph6, check}] = std::move(value);
}

void ResultCache::flush() {
    if (!enabled() || pending_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to cache " + path_.string());
    for (const auto& j : pending_) out << j.dump() << '\n';
    pending_.clear();
}

}  // namespace domlab
