#ifndef NTHETA_NONIC_CHECKS_HPP
#define NTHETA_NONIC_CHECKS_HPP

#include <ntheta/nonic/report.hpp>
#include <ntheta/puiseux/qseries.hpp>

namespace ntheta
{

/// phi(q^{1/n}) / phi(q^n) = 1 + sum_k 2 q^{k^2/n} f(q^{n+2k}, q^{n-2k}) / phi(q^n), n odd.
CheckReport verify_phi_decomposition(int n, const Exponent &order);

// Nonic decomposition and the definitions of p and u3.
CheckReport check_nonic_i(const Exponent &order);
CheckReport check_nonic_ii(const Exponent &order);
CheckReport check_nonic_iii(const Exponent &order);
/// alpha = u2 u4^2, beta = u4 u1^2, gamma = u1 u2^2 are roots of r.
CheckReport verify_root_construction(const Exponent &order);

// Forms of u3.
CheckReport check_u3_i(const Exponent &order);
CheckReport check_u3_ii(const Exponent &order);
CheckReport check_u3_iii(const Exponent &order);
CheckReport check_u3_iv(const Exponent &order);

// Forms of p.
CheckReport check_p_i(const Exponent &order);
CheckReport check_p_ii(const Exponent &order);
CheckReport check_p_iii(const Exponent &order);
CheckReport check_p_iv(const Exponent &order);

// (u1 + u2 + u4)^3.
CheckReport check_sum124_i(const Exponent &order);
CheckReport check_sum124_ii(const Exponent &order);

/// The rational p/u3 identity behind the power splits, denominators cleared.
CheckReport verify_u3_p_bridge(const Exponent &order);

// Power-sum splits, each also recovered as one residue class of the
// cleared master identity.
CheckReport check_splits_i(const Exponent &order);
CheckReport check_splits_ii(const Exponent &order);
CheckReport check_splits_iii(const Exponent &order);

/// u3^3 (u2^3 u4^3 + u1^3 u4^3 + u1^3 u2^3) = p^2 (u3^4 - u3^3 + 6u3^2 - 8u3 + 8).
CheckReport verify_reciprocal_sum(const Exponent &order);

// Septic analogues on the 1/7 grid.
CheckReport check_septic_i(const Exponent &order);
CheckReport check_septic_ii(const Exponent &order);
CheckReport check_septic_iii(const Exponent &order);

/// Sum and product sides of the triple product for the theta functions in
/// u1..u4 and for phi.
CheckReport check_triple_product(const Exponent &order);

// Grouped forms: each runs the listed parts and folds them with combine_reports.
CheckReport verify_u3_forms(const Exponent &order);      // lemma-u3-i..iv
CheckReport verify_p_forms(const Exponent &order);       // lemma-p-i..iv
CheckReport verify_sum_u124(const Exponent &order);      // lemma-sum124-i, ii
CheckReport verify_power_splits(const Exponent &order);  // lemma-splits-i..iii
CheckReport verify_septic_formal(const Exponent &order); // septic-i..iii

} // namespace ntheta

#endif
