#include <doctest.h>

#include <string>
#include <vector>

#include <ntheta/nonic/checks.hpp>
#include <ntheta/nonic/context.hpp>
#include <ntheta/puiseux/theta.hpp>

using namespace ntheta;

namespace
{

// Coefficients of q^{k/den}, from an independent list-based long division.
using Frozen = std::vector<std::pair<int, long>>;

void check_frozen(const QSeries &s, int den, const Frozen &expected, int limit)
{
    // Every listed term matches and nothing else appears below q^{limit/den}.
    std::size_t seen = 0;
    for (const auto &[e, c] : s.terms()) {
        if (e >= Exponent(limit, den)) break;
        REQUIRE(seen < expected.size());
        CHECK(e == Exponent(expected[seen].first, den));
        CHECK(c == expected[seen].second);
        ++seen;
    }
    CHECK(seen == expected.size());
}

using CheckFn = CheckReport (*)(const Exponent &);

const std::vector<std::pair<const char *, CheckFn>> &formal_checks()
{
    static const std::vector<std::pair<const char *, CheckFn>> list = {
        {"nonic-i", check_nonic_i},
        {"nonic-ii", check_nonic_ii},
        {"nonic-iii", check_nonic_iii},
        {"nonic-iv-v", verify_root_construction},
        {"lemma-u3-i", check_u3_i},
        {"lemma-u3-ii", check_u3_ii},
        {"lemma-u3-iii", check_u3_iii},
        {"lemma-u3-iv", check_u3_iv},
        {"lemma-p-i", check_p_i},
        {"lemma-p-ii", check_p_ii},
        {"lemma-p-iii", check_p_iii},
        {"lemma-p-iv", check_p_iv},
        {"lemma-sum124-i", check_sum124_i},
        {"lemma-sum124-ii", check_sum124_ii},
        {"lemma-bridge", verify_u3_p_bridge},
        {"lemma-splits-i", check_splits_i},
        {"lemma-splits-ii", check_splits_ii},
        {"lemma-splits-iii", check_splits_iii},
        {"cor-reciprocal", verify_reciprocal_sum},
        {"septic-i", check_septic_i},
        {"septic-ii", check_septic_ii},
        {"septic-iii", check_septic_iii},
        {"triple-product", check_triple_product},
    };
    return list;
}

} // namespace

TEST_SUITE("nonic")
{
    TEST_CASE("u_k, p and the septic product against frozen coefficients")
    {
        const Exponent n(30);
        auto c = nonic_context(n);
        check_frozen(c->u1, 9, {{1, 2}, {64, 2}, {82, -4}, {100, 2}, {145, -4}, {163, 8}, {181, -4}, {226, 8}, {244, -16}, {262, 8}}, 270);
        check_frozen(c->u2, 9, {{4, 2}, {49, 2}, {85, -4}, {121, 2}, {130, -4}, {166, 8}, {202, -4}, {211, 8}, {247, -16}, {256, 2}}, 270);
        check_frozen(c->u3, 9, {{9, 2}, {36, 2}, {90, -4}, {117, -4}, {144, 2}, {171, 8}, {198, 8}, {225, -2}, {252, -16}}, 270);
        check_frozen(c->u4, 9, {{16, 2}, {25, 2}, {97, -4}, {106, -4}, {169, 2}, {178, 8}, {187, 8}, {196, 2}, {250, -4}, {259, -16}, {268, -16}}, 270);
        check_frozen(c->p, 9,
                     {{21, 8}, {30, 8}, {66, 8}, {75, 8}, {84, 8}, {93, 8}, {102, -48}, {111, -48}, {120, 8}, {129, 16}, {138, 16}, {147, -40},
                      {156, -48}, {165, -40}, {174, -32}},
                     175);
        const QSeries p7 = decomposition_term(7, 1, n) * decomposition_term(7, 2, n) * decomposition_term(7, 3, n);
        check_frozen(p7, 7,
                     {{14, 8}, {21, 8}, {35, 8}, {42, 8}, {49, 8}, {56, 8}, {63, -48}, {70, -40}, {77, 16}, {84, -40}, {91, -40}, {98, -32},
                      {105, -32}, {112, 192}, {119, 144}},
                     120);
    }

    TEST_CASE("u3 begins 2q + 2q^4 - 4q^10")
    {
        auto c = nonic_context(Exponent(11));
        CHECK(c->u3.size() == 3);
        CHECK(c->u3.coeff(Exponent(1)) == 2);
        CHECK(c->u3.coeff(Exponent(4)) == 2);
        CHECK(c->u3.coeff(Exponent(10)) == -4);
    }

    TEST_CASE("leading terms at every order")
    {
        for (int n : {3, 20, 40}) {
            auto c = nonic_context(Exponent(n));
            const QSeries *us[] = {&c->u1, &c->u2, &c->u3, &c->u4};
            for (int k = 1; k <= 4; ++k) {
                CHECK(us[k - 1]->valuation() == Exponent(k * k, 9));
                CHECK(us[k - 1]->coeff(Exponent(k * k, 9)) == 2);
                CHECK(us[k - 1]->order() >= Exponent(n));
            }
            CHECK(c->p.valuation() == Exponent(7, 3));
            CHECK(c->p.coeff(Exponent(7, 3)) == 8);
        }
        CHECK_THROWS(build_context(Exponent(2)));
    }

    TEST_CASE("context cache hands back one shared instance")
    {
        CHECK(nonic_context(Exponent(12)).get() == nonic_context(Exponent(12)).get());
    }

    TEST_CASE("phi decompositions for odd n")
    {
        for (int n : {1, 3, 5, 7, 9, 11, 13}) {
            const CheckReport r = verify_phi_decomposition(n, Exponent(30));
            CHECK_MESSAGE(r.pass, n, " ", r.message);
        }
        CHECK_THROWS(verify_phi_decomposition(4, Exponent(10)));
        CHECK_THROWS(verify_phi_decomposition(-1, Exponent(10)));
    }

    TEST_CASE("every formal check passes at orders 20 and 40")
    {
        for (int n : {20, 40}) {
            for (const auto &[id, fn] : formal_checks()) {
                const CheckReport r = fn(Exponent(n));
                CHECK(r.id == id);
                CHECK_MESSAGE(r.pass, id, " at order ", n, ": ", r.message);
                CHECK(r.verified_order == Exponent(n));
                CHECK(!r.mismatch);
            }
        }
    }

    TEST_CASE("fractional orders on the 1/9 grid")
    {
        const CheckReport r = check_splits_ii(Exponent(121, 9));
        CHECK(r.pass);
        CHECK(r.order == Exponent(121, 9));
    }

    TEST_CASE("grouped checks fold their parts")
    {
        const Exponent n(15);
        CHECK(verify_u3_forms(n).pass);
        CHECK(verify_p_forms(n).pass);
        CHECK(verify_sum_u124(n).pass);
        CHECK(verify_power_splits(n).pass);
        const CheckReport s = verify_septic_formal(n);
        CHECK(s.pass);
        CHECK(s.id == "septic");
        CHECK(s.cleared_form.find("8 q^2 chi(q)") != std::string::npos);
    }

    TEST_CASE("perturbed identities fail with a located mismatch")
    {
        const Exponent n(20);
        auto c = nonic_context(n);
        const QSeries &u3 = c->u3;
        const QSeries k = u3 * u3 + 2 * u3 + QSeries::constant(4);
        const QSeries bumped = c->p + QSeries::monomial(1, Exponent(5));

        SeriesCheck p_iv("perturbed-p-iv", n);
        p_iv.expect_equal("p^3 (u3^2 - u3 + 1) = u3^7 K", bumped.pow(3) * (u3 * u3 - u3 + QSeries::constant(1)), u3.pow(7) * k);
        const CheckReport r = p_iv.finish();
        CHECK_FALSE(r.pass);
        REQUIRE(r.mismatch);
        // (p + q^5)^3 first differs from p^3 at 3 p^2 q^5, i.e. q^{14/3 + 5}.
        CHECK(r.mismatch->exponent == Exponent(29, 3));

        SeriesCheck u3_i("perturbed-u3-i", n);
        u3_i.expect_equal("phi = phi9 (u3 + 1)", c->phi1, c->phi9 * (u3 + QSeries::constant(1) + QSeries::monomial(1, Exponent(5))));
        CHECK_FALSE(u3_i.finish().pass);

        // A single coefficient of phi(q^9) nudged by one.
        SeriesCheck nonic("perturbed-nonic-iii", n);
        const QSeries phi9 = c->phi9 + QSeries::monomial(1, Exponent(18));
        nonic.expect_equal("u3 = phi/phi9 - 1", u3, c->phi1 * qs_inv(phi9) - QSeries::constant(1));
        CHECK_FALSE(nonic.finish().pass);
    }

    TEST_CASE("a comparison guaranteed below the requested order fails")
    {
        SeriesCheck check("order-loss", Exponent(20));
        const QSeries s = phi_series(Exponent(1), Exponent(10));
        check.expect_equal("same series, short guarantee", s, s);
        const CheckReport r = check.finish();
        CHECK_FALSE(r.pass);
        CHECK(r.verified_order == Exponent(10));
        CHECK(r.message.find("q^10/1") != std::string::npos);
    }

    TEST_CASE("expect_different catches a control that agrees")
    {
        SeriesCheck check("control", Exponent(10));
        const QSeries s = phi_series(Exponent(1), Exponent(10));
        check.expect_different("unchanged", s, s);
        CHECK_FALSE(check.finish().pass);
    }

    TEST_CASE("passes are stable as the order grows")
    {
        for (const auto &fn : {check_p_ii, check_u3_iv, check_septic_iii}) {
            bool previous = true;
            for (int n : {10, 20, 30}) {
                const bool now = fn(Exponent(n)).pass;
                CHECK((previous || !now));
                CHECK(now);
                previous = now;
            }
        }
    }
}
