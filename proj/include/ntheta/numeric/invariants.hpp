#ifndef NTHETA_NUMERIC_INVARIANTS_HPP
#define NTHETA_NUMERIC_INVARIANTS_HPP

#include <string>

#include <gmpxx.h>

#include <ntheta/numeric/real.hpp>
#include <ntheta/numeric/theta_eval.hpp>

namespace ntheta
{

enum class InvariantSource { table, reflection, formula };
std::string to_string(InvariantSource s);

/// Ramanujan's class invariant G_n = 2^{-1/4} q^{-1/24} chi(q), q = e^{-pi sqrt(n)}.
struct ClassInvariant {
    mpq_class n;
    Real value;
    InvariantSource source;
};

/// Closed-form G_n for n in {1, 3, 9, 27, 81, 243} and their reciprocals
/// (G_{1/n} = G_n). Anything else throws UnsupportedInvariant, including
/// G_729 even though the product formula could reach it.
ClassInvariant class_invariant(const mpq_class &n, const Precision &prec);
/// Radical form of a tabulated invariant, for display.
std::string invariant_closed_form(const mpq_class &n);

/// G_{81n} from G_n and G_{9n}:
/// G_{81n}^3 = G_{9n}(sqrt2 G_{9n} + G_n^3) / (sqrt2 G_n^3 - G_{9n}).
Real invariant_product_formula(const Real &g_n, const Real &g_9n);
/// G_m rebuilt through the product formula from the tabulated G_{m/81}, G_{m/9}.
ClassInvariant invariant_via_product_formula(const mpq_class &m, const Precision &prec);

struct PU3 {
    Real p;
    Real u3;
};

/// p = 2 sqrt2 G_n / (G_{9n} G_{81n}^6), u3 = sqrt2 G_{9n} / G_{81n}^3 at q = e^{-pi sqrt(n)}.
PU3 p_u3_from_invariants(const mpq_class &n, const Precision &prec);
/// p = 8 q^{7/3} chi(q) / (chi^6(q^9) chi(q^3)), u3 = 2 q chi(q^3) / chi^3(q^9).
PU3 p_u3_from_series(const Nome &q, const Precision &prec);

/// phi(e^{-9 pi sqrt(n)}) / phi(e^{-pi sqrt(n)}) = (1 + sqrt2 G_{9n} / G_n^3) / 3.
Real ratio_9n(const mpq_class &n, const Precision &prec);

} // namespace ntheta

#endif
