#ifndef NTHETA_CUBICALG_ENTRY356_HPP
#define NTHETA_CUBICALG_ENTRY356_HPP

#include <array>
#include <string>
#include <vector>

#include <ntheta/numeric/real.hpp>

namespace ntheta
{

struct NamedResidual {
    std::string name;
    Real value;
};

/// Cube-root identities for the roots alpha < beta < gamma of
/// x^3 - a x^2 + b x - 1:
///   z1 = (alpha/beta)^{1/3} + (beta/gamma)^{1/3} + (gamma/alpha)^{1/3},
///   z2 = (beta/alpha)^{1/3} + (gamma/beta)^{1/3} + (alpha/gamma)^{1/3},
/// t = z1 + z2, and mu <= nu the roots of
///   y^2 - (ab + 6(a+b) + 9) y + (a+b+3)^3.
struct Entry356Result {
    Real a, b;
    std::array<Real, 3> roots;
    Real z1, z2;
    Real mu, nu;
    Real t;
    /// alpha^{1/3} + beta^{1/3} + gamma^{1/3}, directly and in closed form.
    Real cube_root_sum;
    Real cube_root_sum_closed;
    std::vector<NamedResidual> residuals;

    bool residuals_below(int digits) const;
    /// Largest residual bound, as "1.2e-61".
    std::string worst_residual() const;
};

/// All cube roots are real branches. Throws NonRealRoots outside the
/// three-real-root regime.
Entry356Result entry356_check(const Real &a, const Real &b, const Precision &prec);

struct RestatedNonic {
    /// 1 + u3 + (p y)^{1/3}
    Real value;
    Real y;
    Real discarded;
    bool selected_smaller;
};

/// phi(q^{1/9})/phi(q^9) from u3 and p alone, with
/// a = (u3/p)(u3^2 + 2u3 + 4) and b = 2 u3^2 a / p. Of the two roots of
/// y^2 - (ab + 6(a+b) + 9) y + (a+b+3)^3 the one matching `y_reference`
/// (an independent value of (u1+u2+u4)^3/p) is used.
/// Throws ComplexQuadraticRoots when the quadratic has no real roots.
RestatedNonic nonic_restated_eval(const Real &u3, const Real &p, const Real &y_reference, const Precision &prec);

} // namespace ntheta

#endif
