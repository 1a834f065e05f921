#include "qsgd/report.hpp"

namespace qsgd {

bool Report::any_fail() const {
    for (const auto& e : entries)
        if (e.status == "fail") return true;
    return false;
}

void Report::add(const std::string& suite, const nlohmann::json& params, const CheckList& checks,
                 long long elapsed_ms) {
    for (const auto& c : checks) {
        ReportEntry e;
        e.suite = suite;
        e.params = params;
        e.check = c.name;
        if (!c.pass)
            e.status = "fail";
        else if (c.witness.rfind("skipped", 0) == 0)
            e.status = "skipped";
        else
            e.status = "pass";
        e.witness = c.witness;
        e.elapsed_ms = elapsed_ms;
        entries.push_back(std::move(e));
    }
}

void Report::merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

nlohmann::json Report::to_json(bool with_timing) const {
    nlohmann::json out;
    out["entries"] = nlohmann::json::array();
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& e : entries) {
        nlohmann::json j;
        j["suite"] = e.suite;
        j["params"] = e.params;
        j["check"] = e.check;
        j["status"] = e.status;
        if (!e.witness.empty()) j["witness"] = e.witness;
        if (with_timing) j["elapsed_ms"] = e.elapsed_ms;
        out["entries"].push_back(std::move(j));
        if (e.status == "pass")
            ++pass;
        else if (e.status == "fail")
            ++fail;
        else
            ++skipped;
    }
    out["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    return out;
}

std::string Report::body_string() const { return to_json(false).dump(2) + "\n"; }

nlohmann::json partition_json(const Partition& p) {
    nlohmann::json out = nlohmann::json::object();
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        nlohmann::json block = nlohmann::json::array();
        for (int g : p.blocks[i]) block.push_back(p.group.element_name(g));
        out[p.keys[i]] = std::move(block);
    }
    return out;
}

nlohmann::json partition_json(const SymPartition& p) {
    nlohmann::json out = nlohmann::json::object();
    for (size_t i = 0; i < p.blocks.size(); ++i) {
        nlohmann::json block = nlohmann::json::array();
        for (const Permutation& sigma : p.blocks[i]) block.push_back(sigma.str());
        std::string key = "(" + std::to_string(p.keys[i].first) + "," +
                          std::to_string(p.keys[i].second) + ")";
        out[key] = std::move(block);
    }
    return out;
}

std::string Report::text() const {
    std::string out;
    for (const auto& e : entries) {
        out += e.status == "pass" ? "  ok  " : e.status == "fail" ? " FAIL " : " skip ";
        out += e.suite;
        if (!e.params.empty()) out += " " + e.params.dump();
        out += " :: " + e.check;
        if (!e.witness.empty()) out += "  [" + e.witness + "]";
        out += "\n";
    }
    nlohmann::json summary = to_json(false)["summary"];
    out += "pass " + std::to_string(summary["pass"].get<int>()) + ", fail " +
           std::to_string(summary["fail"].get<int>()) + ", skipped " +
           std::to_string(summary["skipped"].get<int>()) + "\n";
    return out;
}

} // namespace qsgd
