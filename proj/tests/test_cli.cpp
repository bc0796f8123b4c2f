#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <ntheta/cli/commands.hpp>
#include <ntheta/cli/suite.hpp>
#include <ntheta/errors.hpp>
#include <ntheta/puiseux/json.hpp>

using namespace ntheta;

namespace
{

RunConfig config_for(std::vector<std::string> ids, int order = 20)
{
    RunConfig c;
    c.order = Exponent(order);
    c.digits = 30;
    c.check_filter = std::move(ids);
    return c;
}

nlohmann::json strip_ms(nlohmann::json j)
{
    for (auto &r : j["reports"]) r.erase("ms");
    j["config"].erase("parallelism");
    return j;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("registry is sorted, unique and covers the acceptance ids")
    {
        const auto &r = check_registry();
        CHECK(std::is_sorted(r.begin(), r.end(), [](const CheckEntry &a, const CheckEntry &b) { return a.id < b.id; }));
        CHECK(std::adjacent_find(r.begin(), r.end(), [](const CheckEntry &a, const CheckEntry &b) { return a.id == b.id; }) == r.end());
        for (const char *id : {"nonic-i", "nonic-iv-v", "lemma-bridge", "cor-reciprocal", "septic-iii", "triple-product", "thm-4.14",
                               "gamma-forms", "entry356-random", "root-ordering-sweep", "invariant-g243", "trig-cos-sum"}) {
            CHECK_MESSAGE(find_check(id) != nullptr, id);
        }
        CHECK(find_check("no-such-id") == nullptr);
    }

    TEST_CASE("config validation")
    {
        RunConfig c;
        CHECK_NOTHROW(c.validate());
        c.digits = 9;
        CHECK_THROWS(c.validate());
        c = RunConfig{};
        c.order = Exponent(19, 2);
        CHECK_THROWS(c.validate());
        c = RunConfig{};
        c.parallelism = 0;
        CHECK_THROWS(c.validate());
    }

    TEST_CASE("verify exit codes")
    {
        std::ostringstream out, err;
        CHECK(cmd_verify(config_for({"nonic-i"}), out, err) == exit_pass);
        CHECK(out.str().rfind("PASS  nonic-i", 0) == 0);
        CHECK(cmd_verify(config_for({"no-such-id"}), out, err) == exit_usage);
        CHECK(err.str().find("no-such-id") != std::string::npos);
        RunConfig bad = config_for({"nonic-i"});
        bad.parallelism = 0;
        CHECK(cmd_verify(bad, out, err) == exit_usage);
    }

    TEST_CASE("an exception inside a check becomes a failing report")
    {
        const CheckEntry boom{"boom", CheckKind::numeric, [](const RunConfig &) -> CheckReport { throw IllConditioned("too wide"); }};
        const CheckReport r = run_check(boom, config_for({}));
        CHECK_FALSE(r.pass);
        CHECK(r.id == "boom");
        CHECK(r.digits == 30);
        CHECK(r.message == "too wide");
    }

    TEST_CASE("suite output is ordered, tallied and deterministic")
    {
        RunConfig c = config_for({"septic-ii", "lemma-p-iv", "thm-4.10", "nonic-iii", "trig-cos-sum"});
        c.parallelism = 4;
        const SuiteReport a = run_suite(c);
        REQUIRE(a.reports.size() == 5);
        CHECK(a.reports[0].id == "lemma-p-iv");
        CHECK(a.reports[4].id == "trig-cos-sum");
        CHECK(a.summary.total == 5);
        CHECK(a.summary.passed + a.summary.failed == a.summary.total);
        CHECK(a.summary.failed == 0);
        c.parallelism = 1;
        const SuiteReport b = run_suite(c);
        CHECK(strip_ms(suite_to_json(a)) == strip_ms(suite_to_json(b)));
        CHECK(suite_to_json(a)["version"] == version);
        CHECK(suite_to_text(a).find("5/5 passed") != std::string::npos);
    }

    TEST_CASE("report JSON round trips")
    {
        const SuiteReport s = run_suite(config_for({"lemma-bridge", "entry356-g9", "thm-4.11"}));
        for (const auto &r : s.reports) {
            const nlohmann::json j = report_to_json(r);
            CHECK(report_from_json(j) == r);
            CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
            CHECK(j["status"] == "pass");
        }
        CheckReport failing;
        failing.id = "x";
        failing.order = Exponent(20);
        failing.verified_order = Exponent(20);
        failing.mismatch = Mismatch{"lhs = rhs", Exponent(29, 3), mpq_class(192), mpq_class(0)};
        failing.message = "first difference";
        const nlohmann::json j = report_to_json(failing);
        CHECK(j["status"] == "fail");
        CHECK(j["mismatch"]["exponent"] == "29/3");
        CHECK(j["mismatch"]["lhs"] == "192/1");
        CHECK(report_from_json(j) == failing);
        const std::string text = report_to_text(failing);
        CHECK(text.find("FAIL") == 0);
        CHECK(text.find("q^29/3") != std::string::npos);
    }

    TEST_CASE("series command")
    {
        CHECK(series_to_json(named_series("u3", Exponent(11))).dump() == R"({"order":"11/1","terms":[["1/1","2/1"],["4/1","2/1"],["10/1","-4/1"]]})");
        CHECK(series_to_json(named_series("phi", Exponent(5))).dump() == R"({"order":"5/1","terms":[["0/1","1/1"],["1/1","2/1"],["4/1","2/1"]]})");
        CHECK(series_to_json(named_series("theta:11/7", Exponent(12))).dump() ==
              R"({"order":"12/1","terms":[["0/1","1/1"],["7/1","1/1"],["11/1","1/1"]]})");
        CHECK(named_series("theta:1/3,2/3", Exponent(2)).coeff(Exponent(1, 3)) == 1);
        CHECK(named_series("p", Exponent(3)).coeff(Exponent(7, 3)) == 8);
        CHECK(named_series("septic-p", Exponent(3)).coeff(Exponent(2)) == 8);
        CHECK(named_series("chi", Exponent(3)).coeff(Exponent(1)) == 1);
        CHECK_THROWS_AS(named_series("u5", Exponent(3)), CatalogMiss);
        CHECK_THROWS_AS(named_series("theta:x", Exponent(3)), CatalogMiss);
        std::ostringstream out, err;
        CHECK(cmd_series("nope", Exponent(5), out, err) == exit_usage);
        CHECK(cmd_series("u1", Exponent(5), out, err) == exit_pass);
    }

    TEST_CASE("eval command")
    {
        std::ostringstream out, err;
        CHECK(cmd_eval("G:9", 50, false, out, err) == exit_pass);
        CHECK(out.str().find("1.2454451084135523013773648743416484007578005646330") != std::string::npos);
        CHECK(out.str().find("(2+sqrt3)^(1/6)") != std::string::npos);
        out.str("");
        CHECK(cmd_eval("u3:1/9", 50, true, out, err) == exit_pass);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["value"].get<std::string>().rfind("7.320508075688772935274463415058723669428052538103", 0) == 0);
        CHECK(j["error_exponent"].get<long>() <= -50);
        out.str("");
        CHECK(cmd_eval("phi-ratio:thm-4.11", 30, true, out, err) == exit_pass);
        const auto k = nlohmann::json::parse(out.str());
        CHECK(k["value"] == k["closed_form_value"]);
        CHECK(cmd_eval("G:5", 30, false, out, err) == exit_usage);
        CHECK(cmd_eval("bogus", 30, false, out, err) == exit_usage);
        CHECK(cmd_eval("phi-ratio:nope", 30, false, out, err) == exit_usage);
        CHECK(cmd_eval("G:9", 5, false, out, err) == exit_usage);
    }
}
