#include <ntheta/cli/suite.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <ntheta/errors.hpp>
#include <ntheta/nonic/checks.hpp>
#include <ntheta/numeric/catalog.hpp>
#include <ntheta/numeric/checks.hpp>

namespace ntheta
{

void RunConfig::validate() const
{
    if (digits < 10) throw std::invalid_argument("digits must be at least 10");
    if (order < Exponent(10)) throw std::invalid_argument("order must be at least 10");
    if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
}

namespace
{

using FormalFn = CheckReport (*)(const Exponent &);
using NumericFn = CheckReport (*)(int);

CheckEntry formal(std::string id, FormalFn f)
{
    return {std::move(id), CheckKind::formal, [f](const RunConfig &c) { return f(c.order); }};
}

CheckEntry numeric(std::string id, NumericFn f)
{
    return {std::move(id), CheckKind::numeric, [f](const RunConfig &c) { return f(c.digits); }};
}

std::vector<CheckEntry> build_registry()
{
    std::vector<CheckEntry> r = {
        formal("nonic-i", check_nonic_i),
        formal("nonic-ii", check_nonic_ii),
        formal("nonic-iii", check_nonic_iii),
        formal("nonic-iv-v", verify_root_construction),
        formal("lemma-u3-i", check_u3_i),
        formal("lemma-u3-ii", check_u3_ii),
        formal("lemma-u3-iii", check_u3_iii),
        formal("lemma-u3-iv", check_u3_iv),
        formal("lemma-p-i", check_p_i),
        formal("lemma-p-ii", check_p_ii),
        formal("lemma-p-iii", check_p_iii),
        formal("lemma-p-iv", check_p_iv),
        formal("lemma-sum124-i", check_sum124_i),
        formal("lemma-sum124-ii", check_sum124_ii),
        formal("lemma-bridge", verify_u3_p_bridge),
        formal("lemma-splits-i", check_splits_i),
        formal("lemma-splits-ii", check_splits_ii),
        formal("lemma-splits-iii", check_splits_iii),
        formal("cor-reciprocal", verify_reciprocal_sum),
        formal("septic-i", check_septic_i),
        formal("septic-ii", check_septic_ii),
        formal("septic-iii", check_septic_iii),
        formal("triple-product", check_triple_product),
        numeric("gamma-forms", [](int d) { return verify_gamma_forms(d); }),
        numeric("invariant-product-formula", check_invariant_product_formula),
        numeric("lemma-transform", check_transformation),
        numeric("lemma-9n-ratio", check_ratio_9n),
        numeric("lemma-p-u3-invariants", check_p_u3_invariants),
        numeric("g9-relation", check_g9_relation),
        numeric("cubic-reference-roots", check_reference_cubics),
        numeric("entry356-trivial", check_entry356_trivial),
        numeric("entry356-g9", check_entry356_g9),
        numeric("entry356-random", [](int d) { return check_entry356_random(d); }),
        numeric("restated-nonic", check_restated_nonic),
        numeric("root-ordering-sweep", check_root_ordering_sweep),
        numeric("ordering-identities", check_ordering_identities),
        numeric("monotonicity", check_monotonicity),
    };
    for (int n : {1, 3, 5, 7, 9, 11}) {
        r.push_back({"phi-decomp-" + std::to_string(n), CheckKind::formal,
                     [n](const RunConfig &c) { return verify_phi_decomposition(n, c.order); }});
    }
    for (int n : {1, 3, 9, 27, 81, 243}) {
        r.push_back({"invariant-g" + std::to_string(n), CheckKind::numeric,
                     [n](const RunConfig &c) { return check_class_invariant(n, c.digits); }});
    }
    const Catalog &catalog = Catalog::shipped();
    for (const auto &id : catalog.ids("example")) {
        r.push_back({id, CheckKind::numeric, [id](const RunConfig &c) { return verify_example(id, c.digits); }});
    }
    for (const auto &id : catalog.ids("trig")) {
        r.push_back({id, CheckKind::numeric, [id](const RunConfig &c) { return verify_trig(id, c.digits); }});
    }
    std::sort(r.begin(), r.end(), [](const CheckEntry &a, const CheckEntry &b) { return a.id < b.id; });
    return r;
}

} // namespace

const std::vector<CheckEntry> &check_registry()
{
    static const std::vector<CheckEntry> registry = build_registry();
    return registry;
}

const CheckEntry *find_check(const std::string &id)
{
    const auto &r = check_registry();
    const auto it = std::lower_bound(r.begin(), r.end(), id, [](const CheckEntry &e, const std::string &k) { return e.id < k; });
    return it != r.end() && it->id == id ? &*it : nullptr;
}

CheckReport run_check(const CheckEntry &entry, const RunConfig &config)
{
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    try {
        report = entry.run(config);
    } catch (const std::exception &e) {
        report = CheckReport{};
        report.id = entry.id;
        report.pass = false;
        if (entry.kind == CheckKind::formal) {
            report.order = config.order;
        } else {
            report.digits = config.digits;
        }
        report.message = e.what();
    }
    report.id = entry.id;
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SuiteReport run_suite(const RunConfig &config)
{
    config.validate();
    std::vector<const CheckEntry *> selected;
    if (config.check_filter.empty()) {
        for (const auto &e : check_registry()) selected.push_back(&e);
    } else {
        for (const auto &id : config.check_filter) {
            const CheckEntry *e = find_check(id);
            if (!e) throw CatalogMiss("unknown check id: " + id);
            if (std::find(selected.begin(), selected.end(), e) == selected.end()) selected.push_back(e);
        }
        std::sort(selected.begin(), selected.end(), [](const CheckEntry *a, const CheckEntry *b) { return a->id < b->id; });
    }

    // Build the shared catalog on this thread before workers touch it.
    if (std::any_of(selected.begin(), selected.end(), [](const CheckEntry *e) { return e->kind == CheckKind::numeric; })) {
        (void)Catalog::shipped();
    }

    SuiteReport out;
    out.config = config;
    out.version = version;
    out.reports.resize(selected.size());
    const auto count = static_cast<std::int64_t>(selected.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.parallelism)
    for (std::int64_t i = 0; i < count; ++i) {
        out.reports[static_cast<std::size_t>(i)] = run_check(*selected[static_cast<std::size_t>(i)], config);
    }
    for (const auto &r : out.reports) {
        ++out.summary.total;
        ++(r.pass ? out.summary.passed : out.summary.failed);
    }
    return out;
}

nlohmann::json suite_to_json(const SuiteReport &s)
{
    nlohmann::json reports = nlohmann::json::array();
    for (const auto &r : s.reports) reports.push_back(report_to_json(r));
    nlohmann::json filter = nlohmann::json::array();
    for (const auto &id : s.config.check_filter) filter.push_back(id);
    return {
        {"version", s.version},
        {"config",
         {{"order", s.config.order.str()},
          {"digits", s.config.digits},
          {"checks", s.config.check_filter.empty() ? nlohmann::json("all") : filter},
          {"parallelism", s.config.parallelism}}},
        {"summary", {{"total", s.summary.total}, {"passed", s.summary.passed}, {"failed", s.summary.failed}}},
        {"reports", reports},
    };
}

std::string suite_to_text(const SuiteReport &s)
{
    std::ostringstream os;
    for (const auto &r : s.reports) os << report_to_text(r) << "\n";
    os << s.summary.passed << "/" << s.summary.total << " passed";
    if (s.summary.failed > 0) os << ", " << s.summary.failed << " failed";
    os << " (order " << (s.config.order.is_integer() ? std::to_string(s.config.order.num()) : s.config.order.str()) << ", " << s.config.digits << " digits)\n";
    return os.str();
}

} // namespace ntheta
