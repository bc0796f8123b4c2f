#include <ntheta/nonic/checks.hpp>

#include <stdexcept>
#include <string>
#include <utility>

#include <ntheta/nonic/context.hpp>
#include <ntheta/puiseux/theta.hpp>

namespace ntheta
{

namespace
{

QSeries cst(long v)
{
    return QSeries::constant(v);
}

QSeries mono(long c, const Exponent &e)
{
    return QSeries::monomial(c, e);
}

// Sum of the decomposition terms for odd n, as used by the phi(q^{1/n}) checks.
QSeries decomposition_sum(int n, const Exponent &order)
{
    QSeries s = cst(1);
    for (int k = 1; 2 * k <= n - 1; ++k) s += decomposition_term(n, k, order);
    return s;
}

// u3(q^{1/3}): build u3 to 3N, then substitute.
QSeries u3_at_cube_root(const Exponent &order)
{
    return qs_scale_q(decomposition_term(9, 3, Exponent(3) * order), Exponent(1, 3));
}

QSeries phi_quotient_sq(const NonicContext &c)
{
    return (c.phi1 * c.phi1) * qs_inv(c.phi9 * c.phi9);
}

struct Splits {
    QSeries a; // u1 u2^2 + u2 u4^2 + u4 u1^2
    QSeries b; // u1^2 u2 + u2^2 u4 + u4^2 u1
    QSeries s3; // u1^3 + u2^3 + u4^3
};

Splits splits(const NonicContext &c)
{
    const QSeries u1s = c.u1 * c.u1;
    const QSeries u2s = c.u2 * c.u2;
    const QSeries u4s = c.u4 * c.u4;
    return {c.u1 * u2s + c.u2 * u4s + c.u4 * u1s, u1s * c.u2 + u2s * c.u4 + u4s * c.u1, u1s * c.u1 + u2s * c.u2 + u4s * c.u4};
}

} // namespace

CheckReport verify_phi_decomposition(int n, const Exponent &order)
{
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("phi decomposition needs an odd positive n");
    SeriesCheck check("phi-decomp-" + std::to_string(n), order);
    const QSeries lhs = phi_series(Exponent(1, n), order) * qs_inv(phi_series(Exponent(n), order));
    check.expect_equal("phi(q^{1/n})/phi(q^n)", lhs, decomposition_sum(n, order));
    check.detail("terms", std::to_string((n - 1) / 2));
    return check.finish();
}

CheckReport check_nonic_i(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("nonic-i", order);
    check.expect_equal("phi(q^{1/9})/phi(q^9) = 1 + u1 + u2 + u3 + u4", c->phi_1_9 * qs_inv(c->phi9),
                       cst(1) + c->u1 + c->u2 + c->u3 + c->u4);
    for (int k = 1; k <= 4; ++k) {
        const QSeries &u = k == 1 ? c->u1 : k == 2 ? c->u2 : k == 3 ? c->u3 : c->u4;
        const Exponent lead(k * k, 9);
        check.expect_leading("leading term of u" + std::to_string(k), u, 2, lead);
    }
    return check.finish();
}

CheckReport check_nonic_ii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("nonic-ii", order);
    const QSeries rhs = mono(8, Exponent(7, 3)) * c->chi1 * qs_inv(c->chi9.pow(6) * c->chi3);
    check.expect_equal("u1 u2 u4 = 8 q^{7/3} chi(q) / (chi^6(q^9) chi(q^3))", c->p, rhs);
    check.expect_leading("leading term of p", c->p, 8, Exponent(7, 3));
    return check.finish();
}

CheckReport check_nonic_iii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("nonic-iii", order);
    check.expect_equal("u3 = phi(q)/phi(q^9) - 1", c->u3, c->phi1 * qs_inv(c->phi9) - cst(1));
    return check.finish();
}

CheckReport verify_root_construction(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("nonic-iv-v", order);
    const QSeries &u3 = c->u3;
    const QSeries k = u3 * u3 + 2 * u3 + cst(4);
    const QSeries phi_q = phi_quotient_sq(*c);
    const QSeries p3 = c->p.pow(3);
    const QSeries alpha = c->u2 * c->u4 * c->u4;
    const QSeries beta = c->u4 * c->u1 * c->u1;
    const QSeries gamma = c->u1 * c->u2 * c->u2;

    const auto r_phi = [&](const QSeries &x) { return x.pow(3) - u3 * (phi_q + cst(3)) * (x * x - 2 * u3 * u3 * x) - p3; };
    const auto r_u3 = [&](const QSeries &x) { return x.pow(3) - u3 * k * x * x + 2 * u3.pow(3) * k * x - p3; };
    check.expect_zero("r(alpha)", r_phi(alpha));
    check.expect_zero("r(beta)", r_phi(beta));
    check.expect_zero("r(gamma)", r_phi(gamma));
    check.expect_zero("r(alpha) in u3 form", r_u3(alpha));
    check.expect_zero("r(beta) in u3 form", r_u3(beta));
    check.expect_zero("r(gamma) in u3 form", r_u3(gamma));
    check.expect_equal("alpha beta gamma = p^3", alpha * beta * gamma, p3);
    check.expect_equal("beta p = alpha u1^3", beta * c->p, alpha * c->u1.pow(3));
    check.expect_equal("gamma p = beta u2^3", gamma * c->p, beta * c->u2.pow(3));
    check.expect_equal("alpha p = gamma u4^3", alpha * c->p, gamma * c->u4.pow(3));
    check.cleared_form("cube-root relations cubed: beta p = alpha u1^3, gamma p = beta u2^3, alpha p = gamma u4^3");
    return check.finish();
}

CheckReport check_u3_i(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-u3-i", order);
    check.expect_equal("phi(q) = phi(q^9)(u3 + 1)", c->phi1, c->phi9 * (c->u3 + cst(1)));
    check.cleared_form("phi(q) = phi(q^9) (u3 + 1)");
    return check.finish();
}

CheckReport check_u3_ii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-u3-ii", order);
    const QSeries phi9_4 = c->phi9.pow(4);
    const QSeries phi3_4 = c->phi3.pow(4);
    check.expect_equal("(u3^3 + 1) phi^4(q^9) = phi^4(q^3)", (c->u3.pow(3) + cst(1)) * phi9_4, phi3_4);
    check.expect_equal("u3^3 = phi^4(q^3)/phi^4(q^9) - 1", c->u3.pow(3), phi3_4 * qs_inv(phi9_4) - cst(1));
    check.cleared_form("(u3^3 + 1) phi^4(q^9) = phi^4(q^3)");
    return check.finish();
}

CheckReport check_u3_iii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-u3-iii", order);
    check.expect_equal("u3 chi^3(q^9) = 2 q chi(q^3)", c->u3 * c->chi9.pow(3), mono(2, Exponent(1)) * c->chi3);
    check.cleared_form("u3 chi^3(q^9) = 2 q chi(q^3)");
    return check.finish();
}

CheckReport check_u3_iv(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-u3-iv", order);
    const QSeries big_u = u3_at_cube_root(order);
    const QSeries s = c->u3.pow(3) + cst(1);
    check.expect_equal("u3(q^{1/3})^3 (u3^3 + 1) = (u3 + 1)^4 - (u3^3 + 1)", big_u.pow(3) * s, (c->u3 + cst(1)).pow(4) - s);
    check.cleared_form("U^3 (u3^3 + 1) = (u3 + 1)^4 - (u3^3 + 1), U = u3(q^{1/3})");
    return check.finish();
}

CheckReport check_p_i(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-p-i", order);
    check.expect_equal("p chi^6(q^9) chi(q^3) = 8 q^{7/3} chi(q)", c->p * c->chi9.pow(6) * c->chi3,
                       mono(8, Exponent(7, 3)) * c->chi1);
    check.expect_equal("u1 u2 u3 u4 chi^9(q^9) = 16 q^{10/3} chi(q)", c->p * c->u3 * c->chi9.pow(9),
                       mono(16, Exponent(10, 3)) * c->chi1);
    check.cleared_form("p chi^6(q^9) chi(q^3) = 8 q^{7/3} chi(q); u1 u2 u3 u4 chi^9(q^9) = 16 q^{10/3} chi(q)");
    return check.finish();
}

CheckReport check_p_ii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-p-ii", order);
    check.expect_equal("p = u3^2 u3(q^{1/3})", c->p, c->u3 * c->u3 * u3_at_cube_root(order));
    return check.finish();
}

CheckReport check_p_iii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-p-iii", order);
    const QSeries lhs = c->p.pow(3) * c->phi9.pow(6) * c->phi3.pow(4);
    const QSeries rhs = (c->phi1 - c->phi9).pow(6) * (c->phi1.pow(4) - c->phi3.pow(4));
    check.expect_equal("p^3 phi^6(q^9) phi^4(q^3) = (phi(q) - phi(q^9))^6 (phi^4(q) - phi^4(q^3))", lhs, rhs);
    check.cleared_form("p^3 phi^6(q^9) phi^4(q^3) = (phi(q) - phi(q^9))^6 (phi^4(q) - phi^4(q^3))");
    return check.finish();
}

CheckReport check_p_iv(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-p-iv", order);
    const QSeries &u3 = c->u3;
    check.expect_equal("p^3 (u3^2 - u3 + 1) = u3^7 (u3^2 + 2u3 + 4)", c->p.pow(3) * (u3 * u3 - u3 + cst(1)),
                       u3.pow(7) * (u3 * u3 + 2 * u3 + cst(4)));
    check.cleared_form("p^3 (u3^2 - u3 + 1) = u3^7 (u3^2 + 2u3 + 4)");
    return check.finish();
}

CheckReport check_sum124_i(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-sum124-i", order);
    const QSeries s3 = (c->u1 + c->u2 + c->u4).pow(3);
    const QSeries phi1_3 = c->phi1.pow(3);
    const QSeries phi1_4 = c->phi1.pow(4);
    check.expect_equal("s^3 phi^3(q^9) phi^4(q) = phi^3(q)(phi^4(q^{1/3}) - phi^4(q))", s3 * c->phi9.pow(3) * phi1_4,
                       phi1_3 * (c->phi_1_3.pow(4) - phi1_4));
    check.cleared_form("(u1 + u2 + u4)^3 phi^3(q^9) phi^4(q) = phi^3(q) (phi^4(q^{1/3}) - phi^4(q))");
    return check.finish();
}

CheckReport check_sum124_ii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-sum124-ii", order);
    const QSeries &u3 = c->u3;
    const QSeries &p = c->p;
    const QSeries s3 = (c->u1 + c->u2 + c->u4).pow(3);
    const QSeries u3s = u3 * u3;
    const QSeries m = p.pow(3) + u3.pow(6);
    const QSeries rhs = (u3 + cst(1)).pow(3) * ((p + u3s).pow(4) - u3s * m);
    check.expect_equal("s^3 u3^2 (p^3 + u3^6) = (u3 + 1)^3 ((p + u3^2)^4 - u3^2 (p^3 + u3^6))", s3 * u3s * m, rhs);
    // Both cleared right sides describe the same cube.
    const QSeries phi1_4 = c->phi1.pow(4);
    const QSeries first = c->phi1.pow(3) * (c->phi_1_3.pow(4) - phi1_4) * qs_inv(c->phi9.pow(3) * phi1_4);
    check.expect_equal("right sides agree", first * u3s * m, rhs);
    check.cleared_form("(u1 + u2 + u4)^3 u3^2 (p^3 + u3^6) = (u3 + 1)^3 ((p + u3^2)^4 - u3^2 (p^3 + u3^6))");
    return check.finish();
}

CheckReport verify_u3_p_bridge(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-bridge", order);
    const QSeries &u3 = c->u3;
    const QSeries u3s = u3 * u3;
    const QSeries k = u3s + 2 * u3 + cst(4);

    const auto sides = [&](const QSeries &p) {
        const QSeries p2 = p * p;
        const QSeries w = p2 - p * u3s + u3s * u3s;
        const QSeries lhs = w * (p2 * (u3.pow(3) + cst(4)) + 6 * p2 * u3s + 3 * u3.pow(3) * k * (2 * u3s + p));
        const QSeries rhs = p * (u3 + cst(1)).pow(3) * ((p + u3s).pow(3) - u3s * w);
        return std::pair{lhs, rhs};
    };
    const auto [lhs, rhs] = sides(c->p);
    check.expect_equal("cleared identity", lhs, rhs);

    const QSeries f = c->p.pow(3) * (u3s - u3 + cst(1)) - u3.pow(7) * k;
    check.expect_zero("p^3 (u3^2 - u3 + 1) - u3^7 (u3^2 + 2u3 + 4)", f);
    check.expect_equal("difference factors as 3 (p - 2u3^2) F", lhs - rhs, 3 * (c->p - 2 * u3s) * f);

    const auto [plhs, prhs] = sides(c->p + mono(1, Exponent(5)));
    check.expect_different("perturbed p + q^5", plhs, prhs);
    check.cleared_form("multiplied by D = p u3^2 (p^2 - p u3^2 + u3^4): "
                       "(p^2 - p u3^2 + u3^4)(p^2 (u3^3 + 4) + 6 p^2 u3^2 + 3 u3^3 (u3^2 + 2u3 + 4)(2u3^2 + p)) "
                       "= p (u3 + 1)^3 ((p + u3^2)^3 - u3^2 (p^2 - p u3^2 + u3^4))");
    return check.finish();
}

namespace
{

// Master identity R = 0 multiplied by p^3 u3^2, which keeps each power-sum
// split in its own residue class of exponents mod 1.
struct Master {
    QSeries total, integral, two_thirds, one_third;
};

Master master_identity(const NonicContext &c, const Splits &s)
{
    const QSeries &u3 = c.u3;
    const QSeries &p = c.p;
    const QSeries u3s = u3 * u3;
    const QSeries p2 = p * p;
    const QSeries p3 = p2 * p;
    const QSeries phi_q3 = phi_quotient_sq(c) + cst(3);
    const QSeries r = p3 * p * (u3.pow(3) + cst(4)) + 3 * u3.pow(3) * phi_q3 * (2 * u3s * p2 + p3) -
                      p3 * u3s * (s.s3 + 3 * s.a + 3 * s.b);
    return {r, frac_filter(r, Exponent(0)), frac_filter(r, Exponent(2, 3)), frac_filter(r, Exponent(1, 3))};
}

const char *master_form = "R = p^4 (u3^3 + 4) + 3 u3^3 (Phi + 3)(2 u3^2 p^2 + p^3) - p^3 u3^2 (S3 + 3A + 3B), Phi = phi^2(q)/phi^2(q^9)";

} // namespace

CheckReport check_splits_i(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-splits-i", order);
    const Splits s = splits(*c);
    check.expect_equal("A phi^2(q^9) = u3 (phi^2(q) + 3 phi^2(q^9))", s.a * c->phi9 * c->phi9,
                       c->u3 * (c->phi1 * c->phi1 + 3 * c->phi9 * c->phi9));
    const Master m = master_identity(*c, s);
    check.expect_zero("M_0(R)", m.integral);
    check.expect_equal("M_0(R) is the split", m.integral,
                       3 * c->p.pow(3) * c->u3 * c->u3 * (c->u3 * (phi_quotient_sq(*c) + cst(3)) - s.a));
    check.cleared_form("A phi^2(q^9) = u3 (phi^2(q) + 3 phi^2(q^9)), A = u1 u2^2 + u2 u4^2 + u4 u1^2");
    check.cleared_form(master_form);
    return check.finish();
}

CheckReport check_splits_ii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-splits-ii", order);
    const Splits s = splits(*c);
    check.expect_equal("p B phi^2(q^9) = 2 u3^3 (phi^2(q) + 3 phi^2(q^9))", c->p * s.b * c->phi9 * c->phi9,
                       2 * c->u3.pow(3) * (c->phi1 * c->phi1 + 3 * c->phi9 * c->phi9));
    const Master m = master_identity(*c, s);
    check.expect_zero("M_{2/3}(R)", m.two_thirds);
    check.cleared_form("p B phi^2(q^9) = 2 u3^3 (phi^2(q) + 3 phi^2(q^9)), B = u1^2 u2 + u2^2 u4 + u4^2 u1");
    check.cleared_form(master_form);
    return check.finish();
}

CheckReport check_splits_iii(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("lemma-splits-iii", order);
    const Splits s = splits(*c);
    check.expect_equal("u3^2 S3 = p (u3^3 + 4)", c->u3 * c->u3 * s.s3, c->p * (c->u3.pow(3) + cst(4)));
    const Master m = master_identity(*c, s);
    check.expect_zero("M_{1/3}(R)", m.one_third);
    check.expect_zero("R", m.total);
    check.expect_equal("integer-exponent side has only integer exponents", frac_filter(s.a, Exponent(0)), s.a);
    check.cleared_form("u3^2 (u1^3 + u2^3 + u4^3) = p (u3^3 + 4)");
    check.cleared_form(master_form);
    return check.finish();
}

CheckReport verify_reciprocal_sum(const Exponent &order)
{
    auto c = nonic_context(order);
    SeriesCheck check("cor-reciprocal", order);
    const QSeries &u3 = c->u3;
    const QSeries c1 = c->u1.pow(3);
    const QSeries c2 = c->u2.pow(3);
    const QSeries c4 = c->u4.pow(3);
    const QSeries poly = u3.pow(4) - u3.pow(3) + 6 * u3 * u3 - 8 * u3 + cst(8);
    const QSeries lhs = u3.pow(3) * (c2 * c4 + c1 * c4 + c1 * c2);
    check.expect_equal("u3^3 (u2^3 u4^3 + u1^3 u4^3 + u1^3 u2^3) = p^2 (u3^4 - u3^3 + 6u3^2 - 8u3 + 8)", lhs, c->p * c->p * poly);
    // Same sum through p^3 = u1^3 u2^3 u4^3: p^3 (1/u1^3 + 1/u2^3 + 1/u4^3).
    const QSeries p3 = c->p.pow(3);
    check.expect_equal("via p^3", c1 * c2 * c4, p3);
    check.cleared_form("u3^3 (u2^3 u4^3 + u1^3 u4^3 + u1^3 u2^3) = p^2 (u3^4 - u3^3 + 6u3^2 - 8u3 + 8)");
    return check.finish();
}

CheckReport check_triple_product(const Exponent &order)
{
    SeriesCheck check("triple-product", order);
    const std::pair<int, int> pairs[] = {{1, 1}, {11, 7}, {13, 5}, {15, 3}, {17, 1}};
    for (const auto &[x, y] : pairs) {
        check.expect_equal("f(q^" + std::to_string(x) + ", q^" + std::to_string(y) + ")", theta_f(Exponent(x), Exponent(y), order),
                           theta_f_product(Exponent(x), Exponent(y), order));
    }
    check.expect_equal("phi(q) = chi^2(q) (q^2; q^2)", phi_series(Exponent(1), order),
                       chi_series(Exponent(1), order).pow(2) * pochhammer_inf(Exponent(2), Exponent(2), order, -1));
    return check.finish();
}

CheckReport verify_u3_forms(const Exponent &order)
{
    return combine_reports("lemma-u3", {check_u3_i(order), check_u3_ii(order), check_u3_iii(order), check_u3_iv(order)});
}

CheckReport verify_p_forms(const Exponent &order)
{
    return combine_reports("lemma-p", {check_p_i(order), check_p_ii(order), check_p_iii(order), check_p_iv(order)});
}

CheckReport verify_sum_u124(const Exponent &order)
{
    return combine_reports("lemma-sum124", {check_sum124_i(order), check_sum124_ii(order)});
}

CheckReport verify_power_splits(const Exponent &order)
{
    return combine_reports("lemma-splits", {check_splits_i(order), check_splits_ii(order), check_splits_iii(order)});
}

} // namespace ntheta
