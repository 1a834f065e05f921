#pragma once

#include "qsgd/report.hpp"
#include "qsgd/towers.hpp"

#include <string>

namespace qsgd {

/// Group literals: "Z<l>" (cyclic) or "S<n>" (symmetric on {1..n}).
FiniteGroup make_group(const std::string& spec);

/// Automorphism literals: "inverse", "flip", "id".
GroupAutomorphism make_theta(const FiniteGroup& group, const std::string& spec);

/// Soft carrier-dimension guard: 1000, overridable by QSGD_MAX_DIM up to the
/// hard cap 1440.
long long axiom_dim_guard();

Report run_axioms_suite(const std::string& group_spec, const std::string& theta_spec);
Report run_double_suite(const std::string& group_spec, const std::string& theta_spec);
Report run_padic_suite(int p, int stages);
Report run_finsym_suite(int l);
Report run_symtower_suite(const std::string& parity, int max_n);
Report run_nonexistence_suite(int n);
Report run_partitions_suite(int n);
Report run_faithful_suite(const std::string& group_spec, const std::string& theta_spec);
Report run_obstruction_suite(int n);

/// Manifest document: {"entries": [{"suite": name, "params": {...}}, ...]}.
Report run_manifest(const nlohmann::json& manifest);

/// The default full manifest exercised by the acceptance run.
nlohmann::json default_manifest();

} // namespace qsgd
