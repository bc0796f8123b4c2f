#include <ntheta/cubicalg/cubic.hpp>

#include <algorithm>
#include <string>

#include <ntheta/errors.hpp>

namespace ntheta
{

namespace
{

constexpr int max_newton_steps = 200;

bool narrow_enough(const Real &x, int digits)
{
    return abs_below((x - x.midpoint()), digits);
}

// Interval Newton on an enclosure known to hold exactly one simple root.
Real refine(const Cubic &c, Real x, const Precision &prec)
{
    for (int i = 0; i < max_newton_steps && !narrow_enough(x, prec.working_digits()); ++i) {
        const Real d = c.derivative(x);
        if (d.contains_zero()) break;
        const Real m = x.midpoint();
        const Real next = intersect(x, m - c(m) / d);
        if (!(next.abs_error() < x.abs_error())) break;
        x = next;
    }
    if (!narrow_enough(x, prec.digits)) {
        throw IllConditioned("cubic root enclosure stuck at width " + std::to_string(x.abs_error()));
    }
    return x;
}

} // namespace

Cubic Cubic::from_symmetric(const Real &e1, const Real &e2, const Real &e3)
{
    return {-e1, e2, -e3};
}

Real Cubic::operator()(const Real &x) const
{
    return ((x + c2) * x + c1) * x + c0;
}

Real Cubic::derivative(const Real &x) const
{
    return (3L * x + 2L * c2) * x + c1;
}

Real Cubic::discriminant() const
{
    return c2 * c2 * c1 * c1 - 4L * pow(c1, 3) - 4L * pow(c2, 3) * c0 + 18L * c2 * c1 * c0 - 27L * c0 * c0;
}

std::array<Real, 3> solve_cubic_real(const Cubic &c, const Precision &prec)
{
    const mpfr_prec_t bits = prec.bits();
    // Depressed form t^3 + P t + Q with x = t - c2/3.
    const Real shift = c.c2 / 3L;
    const Real P = c.c1 - c.c2 * c.c2 / 3L;
    const Real Q = 2L * pow(c.c2, 3) / 27L - c.c2 * c.c1 / 3L + c.c0;
    // Undivided form: exact whenever the coefficients are small exact values.
    const Real disc = c.discriminant();

    if (disc.certainly_negative()) {
        throw NonRealRoots("cubic has a complex pair (discriminant " + disc.str(6) + ")");
    }
    if (!disc.certainly_positive()) {
        // Repeated roots can only be certified when they are exact.
        if (!(disc.is_point() && c.c2.is_point() && c.c1.is_point() && c.c0.is_point())) {
            throw IllConditioned("sign of the cubic discriminant is not decided at this precision");
        }
        const Real h = c.c2 * c.c2 - 3L * c.c1;
        if (!h.contains_zero()) {
            const Real dbl = (9L * c.c0 - c.c1 * c.c2) / (2L * h);
            const Real simple = (4L * c.c2 * c.c1 - 9L * c.c0 - pow(c.c2, 3)) / h;
            std::array<Real, 3> r{dbl, dbl, simple};
            std::sort(r.begin(), r.end(), [](const Real &a, const Real &b) { return a.to_double() < b.to_double(); });
            return r;
        }
        const Real triple = -shift;
        return {triple, triple, triple};
    }

    // Three distinct real roots: P < 0 and
    //   t_k = 2 sqrt(-P/3) cos(acos(3Q/(2P) sqrt(-3/P))/3 - 2 pi k/3).
    const Real m = 2L * sqrt(-P / 3L);
    const Real theta = acos(3L * Q / (2L * P) * sqrt(-3L / P)) / 3L;
    const Real third = 2L * Real::pi(bits) / 3L;
    std::array<Real, 3> roots{
        m * cos(theta) - shift,
        m * cos(theta - third) - shift,
        m * cos(theta - 2L * third) - shift,
    };
    for (auto &r : roots) r = refine(c, r, prec);
    std::sort(roots.begin(), roots.end(), [](const Real &a, const Real &b) { return a.to_double() < b.to_double(); });
    if (!roots[0].certainly_less(roots[1]) || !roots[1].certainly_less(roots[2])) {
        throw IllConditioned("cubic root enclosures overlap");
    }
    return roots;
}

} // namespace ntheta
