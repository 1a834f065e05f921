#include "qsgd/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace qsgd {

namespace {

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

class Timer {
public:
    Timer() : start_(now_ms()) {}
    long long elapsed() const { return now_ms() - start_; }

private:
    long long start_;
};

} // namespace

FiniteGroup make_group(const std::string& spec) {
    if (spec.size() < 2 || (spec[0] != 'Z' && spec[0] != 'S'))
        throw std::invalid_argument("group literal must be Z<l> or S<n>: " + spec);
    int n = std::stoi(spec.substr(1));
    if (spec[0] == 'Z') return FiniteGroup::cyclic(n);
    return FiniteGroup::symmetric(interval(1, n));
}

GroupAutomorphism make_theta(const FiniteGroup& group, const std::string& spec) {
    if (spec == "id") return GroupAutomorphism::identity(group);
    if (spec == "inverse") return inverse_automorphism(group);
    if (spec == "flip") {
        if (group.kind() != FiniteGroup::Kind::Symmetric)
            throw std::invalid_argument("flip automorphism needs a symmetric group");
        return flip_automorphism(static_cast<int>(group.ground().size()));
    }
    throw std::invalid_argument("automorphism literal must be inverse, flip or id: " + spec);
}

long long axiom_dim_guard() {
    long long guard = 1000;
    if (const char* env = std::getenv("QSGD_MAX_DIM")) {
        try {
            guard = std::stoll(env);
        } catch (...) {
            guard = 1000;
        }
    }
    return std::min<long long>(guard, 1440); // hard cap: doubled S6
}

Report run_axioms_suite(const std::string& group_spec, const std::string& theta_spec) {
    Report r;
    Timer t;
    nlohmann::json params{{"group", group_spec}};
    if (!theta_spec.empty()) params["double"] = theta_spec;
    GroupAlgebra a = group_algebra(make_group(group_spec));
    AxiomOptions opts;
    opts.max_dim = axiom_dim_guard();
    CheckList checks;
    if (theta_spec.empty()) {
        checks = verify_hopf_axioms(a.hopf, opts);
    } else {
        DoubledHopf d = make_double(a, make_theta(a.group, theta_spec));
        checks = verify_hopf_axioms(d.carrier, opts);
    }
    r.add("axioms", params, checks, t.elapsed());
    return r;
}

Report run_double_suite(const std::string& group_spec, const std::string& theta_spec) {
    Report r;
    Timer t;
    nlohmann::json params{{"group", group_spec}, {"theta", theta_spec}};
    GroupAlgebra a = group_algebra(make_group(group_spec));

    CheckList checks;
    DoubledHopf d;
    try {
        d = make_double(a, make_theta(a.group, theta_spec));
        checks.push_back({"theta_involution", true, ""});
    } catch (const std::invalid_argument& e) {
        checks.push_back({"theta_involution", false, e.what()});
        r.add("double", params, checks, t.elapsed());
        return r;
    }

    AxiomOptions ax;
    ax.max_dim = axiom_dim_guard();
    CheckList axioms = verify_hopf_axioms(d.carrier, ax);
    for (auto& c : axioms) c.name = "carrier." + c.name;
    checks.insert(checks.end(), axioms.begin(), axioms.end());

    for (auto& c : check_haar_invariance(d)) checks.push_back(c);
    Coaction coact = doubling_coaction(d);
    for (auto& c : check_coaction(coact)) checks.push_back({"coaction." + c.name, c.pass, c.witness});
    for (auto& c : check_embedding(d)) checks.push_back(c);
    for (auto& c : check_central_projections(d)) checks.push_back(c);

    GeneratingSet gens = a.group.kind() == FiniteGroup::Kind::Cyclic
                             ? pm_one(a.group)
                             : adjacent_transpositions(a.group);
    {
        Check chk{"preserves_wordlength_filtration", true, ""};
        std::string w;
        OrthogonalFiltration f = filtration_from_partition(a, wordlength_partition(gens));
        if (!action_preserves_filtration(coact, f, &w)) {
            chk.pass = false;
            chk.witness = w;
        }
        checks.push_back(std::move(chk));
    }
    {
        bool trivial = theta_is_identity(d);
        bool fixes = theta_fixes_generators(d, gens);
        checks.push_back({"hypothesis_readings_agree", trivial == fixes,
                          trivial == fixes ? "" : "readings disagree"});
        if (a.group.size() <= 120) {
            int expected = trivial ? a.group.size() : 2 * a.group.size();
            int got = action_faithful_span(coact);
            checks.push_back({"faithful_dichotomy", got == expected,
                              "generated slice dim " + std::to_string(got) + ", |G| = " +
                                  std::to_string(a.group.size())});
            checks.push_back({"slice_span_dim", true,
                              "dim " + std::to_string(action_slice_rank(coact))});
        } else {
            checks.push_back({"faithful_dichotomy", true, "skipped: |G| exceeds guard"});
        }
    }
    r.add("double", params, checks, t.elapsed());
    return r;
}

namespace {

// split the "stageN." / "connectN-M." / "tripleN-M-K." prefixes into
// structured params, so tower entries read {tower, stage, check, status}
void add_tower_entries(Report& r, const std::string& suite, const nlohmann::json& base_params,
                       const std::string& tower_name, const CheckList& checks, long long ms) {
    for (const auto& c : checks) {
        nlohmann::json params = base_params;
        params["tower"] = tower_name;
        std::string name = c.name;
        auto dot = name.find('.');
        if (dot != std::string::npos) {
            std::string head = name.substr(0, dot);
            if (head.rfind("stage", 0) == 0) {
                params["stage"] = std::stoi(head.substr(5));
                name = name.substr(dot + 1);
            } else if (head.rfind("connect", 0) == 0) {
                params["connect"] = head.substr(7);
                name = name.substr(dot + 1);
            } else if (head.rfind("triple", 0) == 0) {
                params["triple"] = head.substr(6);
                name = name.substr(dot + 1);
            }
        }
        r.add(suite, params, {Check{name, c.pass, c.witness}}, ms);
    }
}

} // namespace

Report run_padic_suite(int p, int stages) {
    Report r;
    Timer t;
    Tower tower = padic_tower(p, stages);
    CheckList checks = check_tower(tower);
    add_tower_entries(r, "padic", {{"p", p}, {"stages", stages}}, tower.name, checks, t.elapsed());
    return r;
}

Report run_finsym_suite(int l) {
    Report r;
    Timer t;
    r.add("finsym", {{"l", l}}, finsym_check(l), t.elapsed());
    return r;
}

Report run_symtower_suite(const std::string& parity, int max_n) {
    Report r;
    Timer t;
    Parity par;
    if (parity == "odd")
        par = Parity::Odd;
    else if (parity == "even")
        par = Parity::Even;
    else
        throw std::invalid_argument("parity must be odd or even: " + parity);
    Tower tower = symmetric_tower(par, max_n);
    CheckList checks = check_tower(tower);
    add_tower_entries(r, "symtower", {{"parity", parity}, {"max_n", max_n}}, tower.name, checks,
                      t.elapsed());
    return r;
}

Report run_nonexistence_suite(int n) {
    Report r;
    Timer t;
    r.add("nonexistence", {{"n", n}}, nonexistence_scan(n), t.elapsed());
    return r;
}

Report run_partitions_suite(int n) {
    Report r;
    {
        Timer t;
        r.add("partitions", {{"mode", "odd"}, {"n", n}},
              partition_tower_check(GroundMode::Odd, n), t.elapsed());
    }
    {
        Timer t;
        r.add("partitions", {{"mode", "even"}, {"n", n}},
              partition_tower_check(GroundMode::Even, n), t.elapsed());
    }
    return r;
}

Report run_faithful_suite(const std::string& group_spec, const std::string& theta_spec) {
    Report r;
    Timer t;
    GroupAlgebra a = group_algebra(make_group(group_spec));
    DoubledHopf d = make_double(a, make_theta(a.group, theta_spec));
    Coaction coact = doubling_coaction(d);
    CheckList checks;
    bool trivial = theta_is_identity(d);
    int expected = trivial ? a.group.size() : 2 * a.group.size();
    int got = action_faithful_span(coact);
    checks.push_back({"generated_slice_dim", got == expected,
                      std::to_string(got) + " (expected " + std::to_string(expected) + ")"});
    checks.push_back({"slice_span_dim", true, "dim " + std::to_string(action_slice_rank(coact))});
    r.add("faithful", {{"group", group_spec}, {"theta", theta_spec}}, checks, t.elapsed());
    return r;
}

Report run_obstruction_suite(int n) {
    Report r;
    Timer t;
    r.add("obstruction", {{"n", n}}, reflection_obstruction(n), t.elapsed());
    return r;
}

Report run_manifest(const nlohmann::json& manifest) {
    Report r;
    if (!manifest.contains("entries") || !manifest["entries"].is_array())
        throw std::invalid_argument("manifest must contain an entries array");
    for (const auto& entry : manifest["entries"]) {
        std::string suite = entry.at("suite").get<std::string>();
        nlohmann::json params = entry.value("params", nlohmann::json::object());
        if (suite == "axioms") {
            r.merge(run_axioms_suite(params.at("group").get<std::string>(),
                                     params.value("double", "")));
        } else if (suite == "double") {
            r.merge(run_double_suite(params.at("group").get<std::string>(),
                                     params.at("theta").get<std::string>()));
        } else if (suite == "padic") {
            r.merge(run_padic_suite(params.at("p").get<int>(), params.at("stages").get<int>()));
        } else if (suite == "finsym") {
            r.merge(run_finsym_suite(params.at("l").get<int>()));
        } else if (suite == "symtower") {
            r.merge(run_symtower_suite(params.at("parity").get<std::string>(),
                                       params.at("max_n").get<int>()));
        } else if (suite == "nonexistence") {
            r.merge(run_nonexistence_suite(params.at("n").get<int>()));
        } else if (suite == "partitions") {
            r.merge(run_partitions_suite(params.at("n").get<int>()));
        } else if (suite == "faithful") {
            r.merge(run_faithful_suite(params.at("group").get<std::string>(),
                                       params.at("theta").get<std::string>()));
        } else if (suite == "obstruction") {
            r.merge(run_obstruction_suite(params.at("n").get<int>()));
        } else {
            throw std::invalid_argument("unknown suite in manifest: " + suite);
        }
    }
    return r;
}

nlohmann::json default_manifest() {
    nlohmann::json entries = nlohmann::json::array();
    auto add = [&](const std::string& suite, nlohmann::json params) {
        entries.push_back({{"suite", suite}, {"params", std::move(params)}});
    };
    add("axioms", {{"group", "Z6"}});
    add("axioms", {{"group", "S3"}, {"double", "flip"}});
    add("double", {{"group", "Z4"}, {"theta", "inverse"}});
    add("double", {{"group", "S4"}, {"theta", "flip"}});
    add("padic", {{"p", 3}, {"stages", 3}});
    add("finsym", {{"l", 5}});
    add("symtower", {{"parity", "odd"}, {"max_n", 5}});
    add("nonexistence", {{"n", 4}});
    add("partitions", {{"n", 2}});
    add("faithful", {{"group", "Z3"}, {"theta", "inverse"}});
    add("obstruction", {{"n", 3}});
    return nlohmann::json{{"entries", std::move(entries)}};
}

} // namespace qsgd
