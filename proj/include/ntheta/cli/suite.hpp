#ifndef NTHETA_CLI_SUITE_HPP
#define NTHETA_CLI_SUITE_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include <ntheta/nonic/report.hpp>
#include <ntheta/puiseux/exponent.hpp>

namespace ntheta
{

inline constexpr const char *version = "0.1.0";

enum class OutputFormat { text, json };

struct RunConfig {
    Exponent order{60};
    int digits = 40;
    /// Empty means every registered check.
    std::vector<std::string> check_filter;
    OutputFormat output = OutputFormat::text;
    int parallelism = 1;

    /// Throws std::invalid_argument on digits < 10, order < 10 or parallelism < 1.
    void validate() const;
};

enum class CheckKind { formal, numeric };

struct CheckEntry {
    std::string id;
    CheckKind kind;
    std::function<CheckReport(const RunConfig &)> run;
};

/// Every addressable check, sorted by id.
const std::vector<CheckEntry> &check_registry();
const CheckEntry *find_check(const std::string &id);

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
};

struct SuiteReport {
    std::vector<CheckReport> reports;
    SuiteSummary summary;
    RunConfig config;
    std::string version;
};

/// Runs one check, turning any exception into a failing report and timing it.
CheckReport run_check(const CheckEntry &entry, const RunConfig &config);

/// Runs the selected checks (all when the filter is empty) on `parallelism`
/// threads. Reports come back sorted by id. Unknown ids throw CatalogMiss.
SuiteReport run_suite(const RunConfig &config);

nlohmann::json suite_to_json(const SuiteReport &s);
std::string suite_to_text(const SuiteReport &s);

} // namespace ntheta

#endif
