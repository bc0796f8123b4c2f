#ifndef NTHETA_NUMERIC_CHECKS_HPP
#define NTHETA_NUMERIC_CHECKS_HPP

#include <cstdint>
#include <string>

#include <ntheta/nonic/report.hpp>
#include <ntheta/numeric/catalog.hpp>

namespace ntheta
{

/// Series value of the phi-ratio against the catalogued closed form. Entries
/// with a cubic block also have their p, u3 and roots checked, and entries
/// with a pipeline block are rebuilt from class invariants through the cubic
/// solver and root ordering.
CheckReport verify_example(const std::string &id, int digits, const Catalog &catalog = Catalog::shipped());
CheckReport verify_trig(const std::string &id, int digits, const Catalog &catalog = Catalog::shipped());
/// Every "gamma" entry of the catalog, plus agreement of the two gamma forms
/// of phi(e^{-pi}).
CheckReport verify_gamma_forms(int digits, const Catalog &catalog = Catalog::shipped());

/// Closed-form G_n (and G_{1/n}) against 2^{-1/4} q^{-1/24} chi(q).
CheckReport check_class_invariant(const mpq_class &n, int digits);
/// G_3 .. G_243 rebuilt through the product formula.
CheckReport check_invariant_product_formula(int digits);
/// phi(e^{-pi/sqrt n}) = n^{1/4} phi(e^{-pi sqrt n}) for n = 3, 7, 9, 27.
CheckReport check_transformation(int digits);
/// phi(e^{-9 pi sqrt n}) / phi(e^{-pi sqrt n}) from invariants against series.
CheckReport check_ratio_9n(int digits);
/// p and u3 from invariants against their chi-product forms.
CheckReport check_p_u3_invariants(int digits);
/// sqrt2 G9^7 - (2 - sqrt3) G9^6 - 2 sqrt3 G9^4 + sqrt2 G9 + 1 = 0.
CheckReport check_g9_relation(int digits);
/// Cubics with known trigonometric or integer roots.
CheckReport check_reference_cubics(int digits);

CheckReport check_entry356_trivial(int digits);
CheckReport check_entry356_g9(int digits);
CheckReport check_entry356_random(int digits, int samples = 50, std::uint64_t seed = 356);
/// 1 + u3 + (p y)^{1/3} against series phi-ratios.
CheckReport check_restated_nonic(int digits);

/// For q = 0.05, 0.10, ..., 0.50: cubic from series u3 and p, ordered roots,
/// u1, u2, u4 against series, and 2 > u1 > u2 > u3 > u4 > 0.
CheckReport check_root_ordering_sweep(int digits);
/// Ratio-sum identities and the reciprocal-cube inequality on the same nomes.
CheckReport check_ordering_identities(int digits);
/// 2 > u1 > u2 > u3 > u4 > 0 at q = 0.1, 0.3, 0.5, 0.8.
CheckReport check_monotonicity(int digits);

} // namespace ntheta

#endif
