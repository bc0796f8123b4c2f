#ifndef NTHETA_NONIC_CONTEXT_HPP
#define NTHETA_NONIC_CONTEXT_HPP

#include <memory>

#include <ntheta/puiseux/qseries.hpp>

namespace ntheta
{

/// The nonic series at one truncation order. Every field is guaranteed
/// below `order`.
struct NonicContext {
    Exponent order;
    /// u_k = 2 q^{k^2/9} f(q^{9+2k}, q^{9-2k}) / phi(q^9)
    QSeries u1, u2, u3, u4;
    /// p = u1 u2 u4
    QSeries p;
    /// phi at q, q^3, q^9, q^{1/3}, q^{1/9}
    QSeries phi1, phi3, phi9, phi_1_3, phi_1_9;
    /// chi at q, q^3, q^9
    QSeries chi1, chi3, chi9;
};

/// Builds every field from the theta constructors. Requires order >= 3.
NonicContext build_context(const Exponent &order);

/// Shared, immutable context for `order`, built on first use.
std::shared_ptr<const NonicContext> nonic_context(const Exponent &order);

/// 2 q^{k^2/n} f(q^{n+2k}, q^{n-2k}) / phi(q^n) for 1 <= k <= (n-1)/2.
QSeries decomposition_term(int n, int k, const Exponent &order);

} // namespace ntheta

#endif
