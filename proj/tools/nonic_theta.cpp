#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ntheta/cli/commands.hpp>
#include <ntheta/puiseux/exponent.hpp>

namespace
{

ntheta::Exponent parse_order(const std::string &text)
{
    return ntheta::Exponent::parse(text);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Formal and numeric verification of nonic theta-function identities"};
    app.set_version_flag("--version", ntheta::version);
    app.require_subcommand(1);

    ntheta::RunConfig config;
    std::string order_text = "60";
    bool all = false;
    bool json = false;

    auto *verify = app.add_subcommand("verify", "Run checks and report pass/fail");
    verify->add_flag("--all", all, "Run every registered check (default when no --check is given)");
    verify->add_option("--check", config.check_filter, "Check id to run (repeatable)");
    verify->add_option("--order", order_text, "Truncation order for formal checks, e.g. 60 or 121/2");
    verify->add_option("--digits", config.digits, "Decimal digits for numeric checks");
    verify->add_flag("--json", json, "Emit a JSON report");
    verify->add_option("--parallelism", config.parallelism, "Worker threads");
    bool list = false;
    verify->add_flag("--list", list, "List check ids and exit");

    std::string series_id;
    auto *series = app.add_subcommand("series", "Print a named series as JSON");
    series->add_option("id", series_id, "phi, chi, u1..u4, p, septic-p or theta:x/y")->required();
    series->add_option("--order", order_text, "Truncation order");

    std::string target;
    int eval_digits = 50;
    auto *eval = app.add_subcommand("eval", "Evaluate a constant with a rigorous error bound");
    eval->add_option("target", target, "phi-ratio:<id>, G:<n>, p:<n> or u3:<n>")->required();
    eval->add_option("--digits", eval_digits, "Decimal digits");
    eval->add_flag("--json", json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ntheta::exit_usage;
    }

    ntheta::Exponent order;
    try {
        order = parse_order(order_text);
    } catch (const std::exception &e) {
        std::cerr << "error: bad --order: " << e.what() << "\n";
        return ntheta::exit_usage;
    }

    if (*verify) {
        if (list) {
            for (const auto &entry : ntheta::check_registry()) {
                std::cout << entry.id << (entry.kind == ntheta::CheckKind::formal ? "  formal" : "  numeric") << "\n";
            }
            return ntheta::exit_pass;
        }
        if (all && !config.check_filter.empty()) {
            std::cerr << "error: --all and --check are mutually exclusive\n";
            return ntheta::exit_usage;
        }
        config.order = order;
        config.output = json ? ntheta::OutputFormat::json : ntheta::OutputFormat::text;
        return ntheta::cmd_verify(config, std::cout, std::cerr);
    }
    if (*series) return ntheta::cmd_series(series_id, order, std::cout, std::cerr);
    return ntheta::cmd_eval(target, eval_digits, json, std::cout, std::cerr);
}
