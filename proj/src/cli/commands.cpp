#include <ntheta/cli/commands.hpp>

#include <cmath>
#include <exception>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include <ntheta/errors.hpp>
#include <ntheta/nonic/context.hpp>
#include <ntheta/numeric/catalog.hpp>
#include <ntheta/numeric/expr.hpp>
#include <ntheta/numeric/invariants.hpp>
#include <ntheta/puiseux/json.hpp>
#include <ntheta/puiseux/theta.hpp>

namespace ntheta
{

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    SuiteReport suite;
    try {
        suite = run_suite(config);
    } catch (const CatalogMiss &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (config.output == OutputFormat::json) {
        out << suite_to_json(suite).dump(2) << "\n";
    } else {
        out << suite_to_text(suite);
    }
    return suite.summary.failed == 0 ? exit_pass : exit_fail;
}

namespace
{

QSeries named_series_untrimmed(const std::string &id, const Exponent &order)
{
    if (id == "phi") return phi_series(Exponent(1), order);
    if (id == "chi") return chi_series(Exponent(1), order);
    if (id.size() == 2 && id[0] == 'u' && id[1] >= '1' && id[1] <= '4') return decomposition_term(9, id[1] - '0', order);
    if (id == "p") {
        return decomposition_term(9, 1, order) * decomposition_term(9, 2, order) * decomposition_term(9, 4, order);
    }
    if (id == "septic-p") {
        return decomposition_term(7, 1, order) * decomposition_term(7, 2, order) * decomposition_term(7, 3, order);
    }
    if (id.rfind("theta:", 0) == 0) {
        const std::string args = id.substr(6);
        auto sep = args.find(',');
        if (sep == std::string::npos) sep = args.find('/');
        if (sep == std::string::npos) throw CatalogMiss("theta needs two arguments: " + id);
        try {
            return theta_f(Exponent::parse(args.substr(0, sep)), Exponent::parse(args.substr(sep + 1)), order);
        } catch (const DivergentTheta &) {
            throw;
        } catch (const std::exception &) {
            throw CatalogMiss("cannot parse theta arguments: " + id);
        }
    }
    throw CatalogMiss("unknown series id: " + id);
}

} // namespace

QSeries named_series(const std::string &id, const Exponent &order)
{
    // Products can be guaranteed past the request; report exactly what was asked.
    return named_series_untrimmed(id, order).truncate(order);
}

int cmd_series(const std::string &id, const Exponent &order, std::ostream &out, std::ostream &err)
{
    try {
        out << series_to_json(named_series(id, order)).dump() << "\n";
        return exit_pass;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

namespace
{

struct Evaluation {
    Real value;
    std::optional<std::string> closed_form;
    std::optional<Real> closed_value;
};

Evaluation evaluate_target(const std::string &target, const Precision &prec)
{
    const auto colon = target.find(':');
    if (colon == std::string::npos) throw CatalogMiss("unknown eval target: " + target);
    const std::string kind = target.substr(0, colon);
    const std::string arg = target.substr(colon + 1);

    if (kind == "phi-ratio") {
        const CatalogEntry &entry = Catalog::shipped().at(arg);
        ExprEvaluator ev(prec, entry.let);
        return {ev.eval(entry.lhs), entry.statement, ev.eval(entry.rhs)};
    }
    mpq_class n;
    try {
        n = mpq_class(arg);
        n.canonicalize();
    } catch (const std::exception &) {
        throw CatalogMiss("bad rational in eval target: " + target);
    }
    if (kind == "G") {
        ClassInvariant g = class_invariant(n, prec);
        return {g.value, invariant_closed_form(n), std::nullopt};
    }
    if (kind == "p") return {p_u3_from_invariants(n, prec).p, std::nullopt, std::nullopt};
    if (kind == "u3") return {p_u3_from_invariants(n, prec).u3, std::nullopt, std::nullopt};
    throw CatalogMiss("unknown eval target: " + target);
}

} // namespace

int cmd_eval(const std::string &target, int digits, bool json, std::ostream &out, std::ostream &err)
{
    if (digits < 10) {
        err << "error: digits must be at least 10\n";
        return exit_usage;
    }
    const Precision prec{digits};
    try {
        const Evaluation r = evaluate_target(target, prec);
        const double lg = r.value.error_log10();
        const std::string value = r.value.str(digits);
        if (json) {
            nlohmann::json j = {{"target", target}, {"digits", digits}, {"value", value}};
            j["error_exponent"] = std::isfinite(lg) ? nlohmann::json(static_cast<long>(std::floor(lg)) + 1) : nlohmann::json(nullptr);
            j["closed_form"] = r.closed_form ? nlohmann::json(*r.closed_form) : nlohmann::json(nullptr);
            if (r.closed_value) j["closed_form_value"] = r.closed_value->str(digits);
            out << j.dump(2) << "\n";
        } else {
            out << target << " = " << value << "\n";
            out << "error bound: " << (std::isfinite(lg) ? "1e" + std::to_string(static_cast<long>(std::floor(lg)) + 1) : "0") << "\n";
            if (r.closed_form) out << "closed form: " << *r.closed_form << "\n";
            if (r.closed_value) out << "closed form value: " << r.closed_value->str(digits) << "\n";
        }
        return exit_pass;
    } catch (const CatalogMiss &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UnsupportedInvariant &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_fail;
    }
}

} // namespace ntheta
