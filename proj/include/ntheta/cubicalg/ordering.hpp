#ifndef NTHETA_CUBICALG_ORDERING_HPP
#define NTHETA_CUBICALG_ORDERING_HPP

#include <array>

#include <ntheta/numeric/real.hpp>

namespace ntheta
{

/// Evaluated ordering conditions for the chosen arrangement:
///   (i)  (alpha - beta)(beta - gamma)(gamma - alpha) > 0
///   (ii) beta/alpha > gamma/beta > alpha/gamma
struct OrderingCertificate {
    Real cyclic_product;
    Real beta_over_alpha;
    Real gamma_over_beta;
    Real alpha_over_gamma;
    /// Arrangements rejected because one of the conditions certainly fails.
    int rejected = 0;
};

struct OrderedRootTriple {
    Real alpha, beta, gamma;
    OrderingCertificate certificate;
};

/// The unique arrangement of three distinct positive roots satisfying both
/// conditions. The result does not depend on the order of `roots`.
/// Throws AmbiguousOrder when some condition cannot be decided at the
/// enclosure width and NoValidOrder when every arrangement fails.
OrderedRootTriple order_roots(const std::array<Real, 3> &roots, const Real &p);

struct U124 {
    Real u1, u2, u4;
};

/// u1 = (beta p/alpha)^{1/3}, u2 = (gamma p/beta)^{1/3}, u4 = (alpha p/gamma)^{1/3}.
U124 u124_from_roots(const OrderedRootTriple &t, const Real &p);

} // namespace ntheta

#endif
