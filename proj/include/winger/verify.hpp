#pragma once

#include "winger/check.hpp"
#include "winger/fp_groups.hpp"
#include "winger/surface.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace winger {

// rep-a5, surface-models, isotypic, monodromy, fp-groups
const std::vector<std::string>& suite_names();

struct RunConfig {
    std::set<std::string> modules;  // empty: all suites
    std::size_t coset_limit = kDefaultCosetLimit;
    std::optional<std::string> report_path;
    bool emit_tables = false;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
    double millis = 0;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
};

struct Headline {
    std::size_t index_in_sl2o = 0, index_sl2oo_in_sl2o = 0, index_in_sl2oo = 0;
};

struct RunResult {
    RunConfig config;
    std::vector<SuiteResult> suites;
    std::optional<Headline> headline;
    std::size_t passed() const;
    std::size_t failed() const;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Individual suites; the fp-groups one throws Overflow when the coset limit is hit.
std::vector<Check> rep_a5_checks();
std::vector<Check> surface_checks();
std::vector<Check> intersection_table_checks(Model m);
std::vector<Check> isotypic_checks();
std::vector<Check> monodromy_checks();
std::vector<Check> fp_group_checks(std::size_t coset_limit, Headline* headline = nullptr, CosetTable* table = nullptr);

SuiteResult run_suite(const std::string& name, const RunConfig& config, Headline* headline = nullptr);
// Runs the selected suites in dependency order; throws on duplicate check names.
RunResult run(const RunConfig& config);

// Deterministic JSON text (no timings).
std::string render_report(const RunResult& r);

}  // namespace winger
