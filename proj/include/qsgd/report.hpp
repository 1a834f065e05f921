#pragma once

#include "qsgd/filtration.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qsgd {

struct ReportEntry {
    std::string suite;
    nlohmann::json params; // object
    std::string check;
    std::string status; // "pass" | "fail" | "skipped"
    std::string witness;
    long long elapsed_ms = 0;
};

/// A flat machine-readable run log. Every fail carries a witness. The
/// canonical body excludes timing, so identical manifests produce byte-
/// identical bodies.
struct Report {
    std::vector<ReportEntry> entries;

    bool any_fail() const;
    void add(const std::string& suite, const nlohmann::json& params, const CheckList& checks,
             long long elapsed_ms = 0);
    void merge(const Report& other);

    nlohmann::json to_json(bool with_timing) const;
    std::string body_string() const; // canonical serialization, no timing
    std::string text() const;        // human-readable projection
};

/// Partition serialization: block key -> list of element literals.
nlohmann::json partition_json(const Partition& p);
nlohmann::json partition_json(const SymPartition& p);

} // namespace qsgd
