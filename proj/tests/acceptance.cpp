// One line per acceptance criterion; exit status 0 only when all hold.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <ntheta/cli/suite.hpp>
#include <ntheta/nonic/checks.hpp>
#include <ntheta/nonic/context.hpp>
#include <ntheta/numeric/catalog.hpp>
#include <ntheta/numeric/checks.hpp>
#include <ntheta/numeric/expr.hpp>

using namespace ntheta;

namespace
{

struct Outcome {
    bool pass = true;
    std::string note;
};

// Runs registered checks and folds them into one outcome.
Outcome run_ids(const std::vector<std::string> &ids, const Exponent &order, int digits, double *seconds = nullptr)
{
    RunConfig config;
    config.order = order;
    config.digits = digits;
    config.check_filter = ids;
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport suite = run_suite(config);
    if (seconds) *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome o;
    for (const auto &r : suite.reports) {
        if (!r.pass) {
            o.pass = false;
            o.note += " " + r.id + " failed (" + r.message + ")";
        }
    }
    if (o.pass) o.note = std::to_string(suite.summary.passed) + " checks";
    return o;
}

Outcome require(Outcome o, bool ok, const std::string &why)
{
    if (!ok) {
        o.pass = false;
        o.note += "; " + why;
    }
    return o;
}

Outcome formal_nonic()
{
    double seconds = 0;
    const std::vector<std::string> ids = {
        "nonic-i",        "nonic-ii",        "nonic-iii",      "nonic-iv-v",      "lemma-u3-i",       "lemma-u3-ii",
        "lemma-u3-iii",   "lemma-u3-iv",     "lemma-p-i",      "lemma-p-ii",      "lemma-p-iii",      "lemma-p-iv",
        "lemma-sum124-i", "lemma-sum124-ii", "lemma-bridge",   "lemma-splits-i",  "lemma-splits-ii",  "lemma-splits-iii",
        "cor-reciprocal",
    };
    Outcome o = run_ids(ids, Exponent(60), 40, &seconds);
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << seconds;
    o.note += " in " + t.str() + " s";
    return require(o, seconds < 60.0, "slower than 60 s");
}

Outcome examples()
{
    const std::vector<std::string> ids = {"thm-1.2",  "thm-1.3-i", "thm-1.3-ii", "thm-1.3-iii", "thm-1.3-iv",
                                          "thm-4.10", "thm-4.11",  "thm-4.12",   "thm-4.13",    "thm-4.14"};
    Outcome o = run_ids(ids, Exponent(60), 40);
    // The end-to-end pipeline must have run for the first three instances.
    for (const char *id : {"thm-4.10", "thm-4.11", "thm-4.12"}) {
        const CheckReport r = verify_example(id, 40);
        o = require(o, r.pass && r.details.count("u1") && r.details.count("order.rejected"), std::string(id) + " pipeline missing");
    }
    return o;
}

Outcome cross_representation()
{
    const Precision prec{40};
    const Catalog &c = Catalog::shipped();
    Outcome o;
    int pairs = 0;
    for (const auto &[a, b] : {std::pair{"thm-1.3-i", "thm-4.10"}, {"thm-1.3-ii", "thm-4.11"}, {"thm-1.3-iii", "thm-4.12"}, {"thm-1.3-iv", "thm-4.13"}}) {
        ExprEvaluator ea(prec, c.at(a).let);
        ExprEvaluator eb(prec, c.at(b).let);
        const Real va = ea.eval(c.at(a).rhs);
        const Real vb = eb.eval(c.at(b).rhs);
        o = require(o, abs_below(va - vb, prec.digits), std::string(a) + " and " + b + " differ");
        o = require(o, abs_below(va - ea.eval(c.at(a).lhs), prec.digits), std::string(a) + " misses its series value");
        ++pairs;
    }
    if (o.pass) o.note = std::to_string(pairs) + " pairs agree";
    return o;
}

Outcome invariants()
{
    return run_ids({"invariant-g1", "invariant-g3", "invariant-g9", "invariant-g27", "invariant-g81", "invariant-g243", "invariant-product-formula"},
                   Exponent(60), 40);
}

Outcome trig()
{
    return run_ids(Catalog::shipped().ids("trig"), Exponent(60), 50);
}

Outcome entry356()
{
    Outcome o;
    for (const CheckReport &r : {check_entry356_random(40, 50, 356), check_entry356_trivial(40), check_entry356_g9(40)}) {
        if (!r.pass) {
            o.pass = false;
            o.note += " " + r.id + " failed (" + r.message + ")";
        }
    }
    if (o.pass) o.note = "50 random instances, triple root and G_9 instance";
    return o;
}

Outcome soundness()
{
    Outcome o;
    int flipped = 0;
    const auto expect_fail = [&](const std::string &what, bool passed) {
        if (passed) {
            o.pass = false;
            o.note += " " + what + " still passed;";
        } else {
            ++flipped;
        }
    };

    // Formal side: p -> p + q^5 in a cleared identity, and a short guarantee.
    const Exponent n(40);
    auto c = nonic_context(n);
    const QSeries &u3 = c->u3;
    const QSeries k = u3 * u3 + 2 * u3 + QSeries::constant(4);
    const QSeries bumped = c->p + QSeries::monomial(1, Exponent(5));
    SeriesCheck p_iv("p-iv+q^5", n);
    p_iv.expect_equal("cleared", bumped.pow(3) * (u3 * u3 - u3 + QSeries::constant(1)), u3.pow(7) * k);
    expect_fail("p + q^5", p_iv.finish().pass);
    SeriesCheck splits("splits-iii+q^5", n);
    const QSeries u1 = c->u1 + QSeries::monomial(1, Exponent(5));
    splits.expect_equal("cleared", u3 * u3 * (u1.pow(3) + c->u2.pow(3) + c->u4.pow(3)), c->p * (u3.pow(3) + QSeries::constant(4)));
    expect_fail("u1 + q^5", splits.finish().pass);
    SeriesCheck short_order("short", n);
    short_order.expect_equal("truncated", c->phi1.truncate(Exponent(30)), c->phi1);
    expect_fail("order below request", short_order.finish().pass);

    // Numeric side: a closed form nudged by 1e-20, and the sign-flipped 1/81 constant.
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &e : Catalog::shipped().entries()) {
        if (e.id != "thm-4.12" && e.id != "trig-sec-sum") continue;
        nlohmann::json j = {{"id", e.id}, {"kind", e.kind}, {"let", e.let}, {"lhs", e.lhs}, {"rhs", {"+", e.rhs, "1/100000000000000000000"}}};
        if (e.n) j["n"] = *e.n;
        if (e.cubic) j["cubic"] = *e.cubic;
        if (e.pipeline) j["pipeline"] = *e.pipeline;
        doc.push_back(j);
    }
    const Catalog nudged = Catalog::from_json(doc);
    expect_fail("thm-4.12 + 1e-20", verify_example("thm-4.12", 40, nudged).pass);
    expect_fail("trig-sec-sum + 1e-20", verify_trig("trig-sec-sum", 40, nudged).pass);

    nlohmann::json flipped_doc = nlohmann::json::array();
    for (const auto &e : Catalog::shipped().entries()) {
        if (e.id != "thm-4.13") continue;
        nlohmann::json let = e.let;
        let["C"] = {"*", "2", {"-", {"-", {"-", {"var", "Y"}, {"var", "X"}}, {"var", "r3"}}, "1"}};
        flipped_doc.push_back({{"id", e.id}, {"kind", e.kind}, {"n", *e.n}, {"let", let}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"cubic", *e.cubic},
                               {"pipeline", *e.pipeline}});
    }
    expect_fail("thm-4.13 with sign-flipped C", verify_example("thm-4.13", 40, Catalog::from_json(flipped_doc)).pass);

    // The unperturbed originals still pass.
    const bool originals = check_p_iv(n).pass && check_splits_iii(n).pass && verify_example("thm-4.12", 40).pass &&
                           verify_trig("trig-sec-sum", 40).pass && verify_example("thm-4.13", 40).pass;
    o = require(o, originals, "an unperturbed original failed");
    if (o.pass) o.note = std::to_string(flipped) + " perturbations flipped to FAIL";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"formal nonic suite at order 60", formal_nonic},
        {"formal septic suite at order 60", [] { return run_ids({"septic-i", "septic-ii", "septic-iii"}, Exponent(60), 40); }},
        {"triple product at order 60", [] { return run_ids({"triple-product"}, Exponent(60), 40); }},
        {"numeric examples at 40 digits", examples},
        {"cross-representation agreement at 40 digits", cross_representation},
        {"class invariants at 40 digits", invariants},
        {"gamma forms at 80 digits", [] { return run_ids({"gamma-forms"}, Exponent(60), 80); }},
        {"trigonometric catalog at 50 digits", trig},
        {"cube-root identity suite", entry356},
        {"root-ordering sweep q = 0.05..0.5 at 30 digits",
         [] { return run_ids({"root-ordering-sweep", "monotonicity"}, Exponent(60), 30); }},
        {"soundness guard", soundness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2zu  %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
