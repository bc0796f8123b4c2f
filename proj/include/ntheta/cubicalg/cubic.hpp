#ifndef NTHETA_CUBICALG_CUBIC_HPP
#define NTHETA_CUBICALG_CUBIC_HPP

#include <array>

#include <ntheta/numeric/real.hpp>

namespace ntheta
{

/// Monic cubic x^3 + c2 x^2 + c1 x + c0 with enclosed coefficients.
struct Cubic {
    Real c2, c1, c0;

    /// From x^3 - a x^2 + b x - c (sum, pair-sum and product of the roots).
    static Cubic from_symmetric(const Real &e1, const Real &e2, const Real &e3);

    Real operator()(const Real &x) const;
    Real derivative(const Real &x) const;
    /// Discriminant; positive iff three distinct real roots.
    Real discriminant() const;
};

/// The three real roots in ascending order, each enclosed to 10^-digits or
/// better. Throws NonRealRoots when the discriminant is certainly negative
/// and IllConditioned when its sign or the requested width cannot be
/// certified.
std::array<Real, 3> solve_cubic_real(const Cubic &c, const Precision &prec);

} // namespace ntheta

#endif
