#ifndef NTHETA_PUISEUX_THETA_HPP
#define NTHETA_PUISEUX_THETA_HPP

#include <ntheta/puiseux/qseries.hpp>

namespace ntheta
{

/// f(q^x, q^y) = sum over all integers n of q^{x n(n+1)/2 + y n(n-1)/2},
/// truncated at `order`. Throws DivergentTheta unless x + y > 0.
QSeries theta_f(const Exponent &x, const Exponent &y, const Exponent &order);

/// sign = +1: prod_{k>=0} (1 + q^{a + k step}), i.e. (-q^a; q^step)_inf.
/// sign = -1: prod_{k>=0} (1 - q^{a + k step}), i.e. (q^a; q^step)_inf.
/// Factors with a nonpositive exponent are multiplied in exactly.
QSeries pochhammer_inf(const Exponent &a, const Exponent &step, const Exponent &order, int sign);

/// phi(q^m) = f(q^m, q^m).
QSeries phi_series(const Exponent &m, const Exponent &order);
/// chi(q^m) = (-q^m; q^{2m})_inf.
QSeries chi_series(const Exponent &m, const Exponent &order);

/// Product side of the triple product identity for f(q^x, q^y).
QSeries theta_f_product(const Exponent &x, const Exponent &y, const Exponent &order);

} // namespace ntheta

#endif
