#include <ntheta/cubicalg/entry356.hpp>

#include <algorithm>

#include <ntheta/cubicalg/cubic.hpp>
#include <ntheta/errors.hpp>

namespace ntheta
{

namespace
{

struct QuadraticRoots {
    Real small, large;
};

// Roots of y^2 - k y + c.
QuadraticRoots quadratic(const Real &k, const Real &c)
{
    const Real disc = k * k - 4L * c;
    if (disc.certainly_negative()) {
        throw ComplexQuadraticRoots("quadratic discriminant " + disc.str(6) + " is negative");
    }
    const Real d = sqrt_nonneg(disc);
    return {(k - d) / 2L, (k + d) / 2L};
}

} // namespace

bool Entry356Result::residuals_below(int digits) const
{
    return std::all_of(residuals.begin(), residuals.end(), [&](const NamedResidual &r) { return abs_below(r.value, digits); });
}

std::string Entry356Result::worst_residual() const
{
    const NamedResidual *worst = nullptr;
    for (const auto &r : residuals) {
        if (!worst || r.value.magnitude() > worst->value.magnitude()) worst = &r;
    }
    return worst ? worst->value.abs_bound_str() : "0";
}

Entry356Result entry356_check(const Real &a, const Real &b, const Precision &prec)
{
    const auto roots = solve_cubic_real(Cubic::from_symmetric(a, b, Real(1L, prec.bits())), prec);
    const Real &al = roots[0];
    const Real &be = roots[1];
    const Real &ga = roots[2];

    const Real z1 = cbrt(al / be) + cbrt(be / ga) + cbrt(ga / al);
    const Real z2 = cbrt(be / al) + cbrt(ga / be) + cbrt(al / ga);
    const Real t = z1 + z2;
    const Real s = a + b + 3L;
    const Real k = a * b + 6L * (a + b) + 9L;
    const auto [mu, nu] = quadratic(k, pow(s, 3));

    const Real half = (a * b + 9L) / 2L;
    const Real big_a = half + 3L * (a + b);
    const Real big_b = sqrt_nonneg(half * half - pow(a, 3) - pow(b, 3) - 27L);
    const Real closed = cbrt(a + 6L + 3L * cbrt(big_a + big_b) + 3L * cbrt(big_a - big_b));
    const Real direct = cbrt(al) + cbrt(be) + cbrt(ga);

    const Real c1 = pow(z1, 3);
    const Real c2 = pow(z2, 3);
    const bool z1_smaller = c1.to_double() <= c2.to_double();

    Entry356Result r{a, b, roots, z1, z2, mu, nu, t, direct, closed, {}};
    r.residuals = {
        {"z-product", z1 * z2 - s},
        {"t-cubic", pow(t, 3) - 3L * s * t - k},
        {"sextic-z1", pow(z1, 6) - k * c1 + pow(s, 3)},
        {"sextic-z2", pow(z2, 6) - k * c2 + pow(s, 3)},
        {"mu-cubed-sum", mu - (z1_smaller ? c1 : c2)},
        {"nu-cubed-sum", nu - (z1_smaller ? c2 : c1)},
        {"cube-root-sum", direct - closed},
    };
    return r;
}

RestatedNonic nonic_restated_eval(const Real &u3, const Real &p, const Real &y_reference, const Precision &prec)
{
    const Real a = u3 / p * (u3 * u3 + 2L * u3 + 4L);
    const Real b = 2L * u3 * u3 * a / p;
    const auto [small, large] = quadratic(a * b + 6L * (a + b) + 9L, pow(a + b + 3L, 3));

    const Real gap_small = abs(small - y_reference);
    const Real gap_large = abs(large - y_reference);
    const bool pick_small = gap_small.to_double() <= gap_large.to_double();
    const Real &y = pick_small ? small : large;
    if (!abs_below(y - y_reference, prec.digits)) {
        throw IllConditioned("neither quadratic root matches the reference value of (u1 + u2 + u4)^3 / p");
    }
    return {1L + u3 + cbrt(p * y), y, pick_small ? large : small, pick_small};
}

} // namespace ntheta
