#include <ntheta/nonic/checks.hpp>

#include <ntheta/nonic/context.hpp>
#include <ntheta/puiseux/theta.hpp>

namespace ntheta
{

namespace
{

// p7 = u1 u2 u3 for the degree-7 decomposition.
QSeries septic_p(const Exponent &order)
{
    return decomposition_term(7, 1, order) * decomposition_term(7, 2, order) * decomposition_term(7, 3, order);
}

} // namespace

CheckReport check_septic_i(const Exponent &order)
{
    SeriesCheck check("septic-i", order);
    QSeries sum = QSeries::constant(1);
    for (int k = 1; k <= 3; ++k) sum += decomposition_term(7, k, order);
    const QSeries lhs = phi_series(Exponent(1, 7), order) * qs_inv(phi_series(Exponent(7), order));
    check.expect_equal("phi(q^{1/7})/phi(q^7) = 1 + u1 + u2 + u3", lhs, sum);
    return check.finish();
}

CheckReport check_septic_ii(const Exponent &order)
{
    SeriesCheck check("septic-ii", order);
    const QSeries p = septic_p(order);
    const QSeries rhs = QSeries::monomial(8, Exponent(2)) * chi_series(Exponent(1), order);
    check.expect_equal("p chi^7(q^7) = 8 q^2 chi(q)", p * chi_series(Exponent(7), order).pow(7), rhs);
    check.cleared_form("u1 u2 u3 chi^7(q^7) = 8 q^2 chi(q)");
    return check.finish();
}

CheckReport check_septic_iii(const Exponent &order)
{
    SeriesCheck check("septic-iii", order);
    const QSeries p = septic_p(order);
    const QSeries a = phi_series(Exponent(1), order).pow(4);
    const QSeries b = phi_series(Exponent(7), order).pow(4);
    const QSeries one = QSeries::constant(1);
    const QSeries r = a * a - (QSeries::constant(2) + 5 * p) * a * b + (one - p).pow(3) * b * b;
    check.expect_zero("phi^8(q) - (2 + 5p) phi^4(q) phi^4(q^7) + (1 - p)^3 phi^8(q^7)", r);
    // A perturbed p must break it.
    const QSeries pp = p + QSeries::monomial(1, Exponent(5));
    const QSeries rp = a * a - (QSeries::constant(2) + 5 * pp) * a * b + (one - pp).pow(3) * b * b;
    check.expect_different("perturbed p + q^5", rp, QSeries::zero(order));
    check.cleared_form("phi^8(q) - (2 + 5p) phi^4(q) phi^4(q^7) + (1 - p)^3 phi^8(q^7) = 0");
    return check.finish();
}

CheckReport verify_septic_formal(const Exponent &order)
{
    return combine_reports("septic", {check_septic_i(order), check_septic_ii(order), check_septic_iii(order)});
}

} // namespace ntheta
