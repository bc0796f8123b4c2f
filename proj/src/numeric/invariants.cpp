#include <ntheta/numeric/invariants.hpp>

#include <ntheta/errors.hpp>

namespace ntheta
{

namespace
{

// Tabulated closed forms, keyed by n >= 1.
Real table_value(long n, mpfr_prec_t bits)
{
    const Real two(2L, bits);
    const Real three(3L, bits);
    const Real sqrt3 = sqrt(three);
    const Real c2 = cbrt(two);
    switch (n) {
    case 1:
        return Real(1L, bits);
    case 3:
        return pow(two, mpq_class(1, 12));
    case 9:
        return pow(two + sqrt3, mpq_class(1, 6));
    case 27:
        return pow(two, mpq_class(1, 12)) / cbrt(c2 - 1L);
    case 81: {
        const Real x = cbrt(2L * (sqrt3 + 1L));
        const Real y = cbrt(2L * (sqrt3 - 1L));
        return cbrt((x + 1L) / (y - 1L));
    }
    case 243: {
        const Real c3 = cbrt(three);
        return pow(two, mpq_class(1, 12)) * (c2 + c2 * c2 + c3) / cbrt(9L - 2L * pow(three, mpq_class(4, 3)));
    }
    default:
        throw UnsupportedInvariant("G_" + std::to_string(n) + " is outside the supported set");
    }
}

bool tabulated(const mpq_class &n)
{
    if (n.get_den() != 1 || !n.get_num().fits_slong_p()) return false;
    switch (n.get_num().get_si()) {
    case 1:
    case 3:
    case 9:
    case 27:
    case 81:
    case 243:
        return true;
    default:
        return false;
    }
}

std::string name(const mpq_class &n)
{
    return "G_" + n.get_str();
}

} // namespace

std::string to_string(InvariantSource s)
{
    switch (s) {
    case InvariantSource::table:
        return "table";
    case InvariantSource::reflection:
        return "reflection";
    case InvariantSource::formula:
        return "formula";
    }
    return "?";
}

ClassInvariant class_invariant(const mpq_class &n, const Precision &prec)
{
    if (sgn(n) <= 0) throw UnsupportedInvariant(name(n) + ": n must be positive");
    if (tabulated(n)) {
        return {n, table_value(n.get_num().get_si(), prec.bits()), InvariantSource::table};
    }
    const mpq_class inv = 1 / n;
    if (tabulated(inv)) {
        return {n, table_value(inv.get_num().get_si(), prec.bits()), InvariantSource::reflection};
    }
    throw UnsupportedInvariant(name(n) + " is outside the supported set {1, 3, 9, 27, 81, 243} and reciprocals");
}

std::string invariant_closed_form(const mpq_class &n)
{
    mpq_class m = n >= 1 ? n : mpq_class(1 / n);
    if (!tabulated(m)) throw UnsupportedInvariant(name(n) + " is outside the supported set");
    switch (m.get_num().get_si()) {
    case 1:
        return "1";
    case 3:
        return "2^(1/12)";
    case 9:
        return "(2+sqrt3)^(1/6)";
    case 27:
        return "2^(1/12) (2^(1/3)-1)^(-1/3)";
    case 81:
        return "((X+1)/(Y-1))^(1/3), X = (2(sqrt3+1))^(1/3), Y = (2(sqrt3-1))^(1/3)";
    default:
        return "2^(1/12) (2^(1/3)+2^(2/3)+3^(1/3)) / (9-2*3^(4/3))^(1/3)";
    }
}

Real invariant_product_formula(const Real &g_n, const Real &g_9n)
{
    const Real s2 = sqrt(Real(2L, g_n.bits()));
    const Real gn3 = pow(g_n, 3L);
    return cbrt(g_9n * (s2 * g_9n + gn3) / (s2 * gn3 - g_9n));
}

ClassInvariant invariant_via_product_formula(const mpq_class &m, const Precision &prec)
{
    const mpq_class n = m / 81;
    const Real g_n = class_invariant(n, prec).value;
    const Real g_9n = class_invariant(9 * n, prec).value;
    return {m, invariant_product_formula(g_n, g_9n), InvariantSource::formula};
}

PU3 p_u3_from_invariants(const mpq_class &n, const Precision &prec)
{
    const Real s2 = sqrt(Real(2L, prec.bits()));
    const Real g_n = class_invariant(n, prec).value;
    const Real g_9n = class_invariant(9 * n, prec).value;
    const Real g_81n = class_invariant(81 * n, prec).value;
    return {2L * s2 * g_n / (g_9n * pow(g_81n, 6L)), s2 * g_9n / pow(g_81n, 3L)};
}

PU3 p_u3_from_series(const Nome &q, const Precision &prec)
{
    const Real chi1 = eval_chi(q, prec);
    const Real chi3 = eval_chi(q.scaled(3), prec);
    const Real chi9 = eval_chi(q.scaled(9), prec);
    const Real p = 8L * q.power(mpq_class(7, 3)) * chi1 / (pow(chi9, 6L) * chi3);
    const Real u3 = 2L * q.value() * chi3 / pow(chi9, 3L);
    return {p, u3};
}

Real ratio_9n(const mpq_class &n, const Precision &prec)
{
    const Real s2 = sqrt(Real(2L, prec.bits()));
    const Real g_n = class_invariant(n, prec).value;
    const Real g_9n = class_invariant(9 * n, prec).value;
    return (1L + s2 * g_9n / pow(g_n, 3L)) / 3L;
}

} // namespace ntheta
