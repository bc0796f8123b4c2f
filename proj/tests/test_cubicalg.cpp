#include <doctest.h>

#include <algorithm>
#include <random>

#include <ntheta/cubicalg/cubic.hpp>
#include <ntheta/cubicalg/entry356.hpp>
#include <ntheta/cubicalg/ordering.hpp>
#include <ntheta/errors.hpp>
#include <ntheta/numeric/theta_eval.hpp>

#include "support.hpp"

using namespace ntheta;
using test::num;

namespace
{

const Precision prec{50};

Real sqrt3()
{
    return sqrt(num(3, prec));
}

// Data for the q = e^{-pi/3} instance: u3 = sqrt3 - 1, p^3 = 16(11 sqrt3 - 19).
struct Instance {
    Real u3, p;
    std::array<Real, 3> expected; // alpha, beta, gamma
};

Instance instance_q_e_pi_3()
{
    const Real u3 = sqrt3() - 1;
    const Real p = cbrt(16 * (11 * sqrt3() - 19));
    const Real pi = Real::pi(prec.bits());
    const auto root = [&](long k) { return 2 * u3 * (1 - sqrt(num(2, prec)) * u3 * cos(pi * k / 36)); };
    return {u3, p, {root(7), root(17), root(31)}};
}

Cubic r_of(const Real &u3, const Real &p)
{
    const Real k = u3 * u3 + 2 * u3 + 4;
    return Cubic::from_symmetric(u3 * k, 2 * pow(u3, 3) * k, pow(p, 3));
}

} // namespace

TEST_SUITE("cubicalg")
{
    TEST_CASE("factored cubic")
    {
        const auto roots = solve_cubic_real(Cubic::from_symmetric(num(6, prec), num(11, prec), num(6, prec)), prec);
        for (int i = 0; i < 3; ++i) CHECK(abs_below(roots[i] - (i + 1), prec.digits));
    }

    TEST_CASE("x^3 - 3x + 1 has cosine roots")
    {
        const Real pi = Real::pi(prec.bits());
        const auto roots = solve_cubic_real({num(0, prec), num(-3, prec), num(1, prec)}, prec);
        CHECK(abs_below(roots[0] + 2 * cos(pi / 9), prec.digits));
        CHECK(abs_below(roots[1] - 2 * cos(4 * pi / 9), prec.digits));
        CHECK(abs_below(roots[2] - 2 * cos(2 * pi / 9), prec.digits));
        for (const auto &x : roots) {
            CHECK(abs_below((Cubic{num(0, prec), num(-3, prec), num(1, prec)})(x), prec.digits - 1));
            CHECK(x.abs_error() < 1e-50);
        }
    }

    TEST_CASE("repeated roots and the non-real regime")
    {
        const auto triple = solve_cubic_real(Cubic::from_symmetric(num(3, prec), num(3, prec), num(1, prec)), prec);
        for (const auto &x : triple) CHECK(abs_below(x - 1, prec.digits));
        const auto dbl = solve_cubic_real(Cubic::from_symmetric(num(4, prec), num(5, prec), num(2, prec)), prec);
        CHECK(abs_below(dbl[0] - 1, prec.digits));
        CHECK(abs_below(dbl[1] - 1, prec.digits));
        CHECK(abs_below(dbl[2] - 2, prec.digits));
        CHECK_THROWS_AS(solve_cubic_real({num(0, prec), num(1, prec), num(1, prec)}, prec), NonRealRoots);
        // The discriminant's sign cannot be certified when c0 straddles the double-root value.
        const Real tiny = Real::from_decimal("1e-40", prec.bits());
        const Real fuzzy = Real::hull(num(2, prec) - tiny, num(2, prec) + tiny);
        CHECK_THROWS_AS(solve_cubic_real(Cubic::from_symmetric(num(4, prec), num(5, prec), fuzzy), prec), IllConditioned);
    }

    TEST_CASE("discriminant sign")
    {
        CHECK(Cubic::from_symmetric(num(6, prec), num(11, prec), num(6, prec)).discriminant().certainly_positive());
        CHECK(Cubic{num(0, prec), num(1, prec), num(1, prec)}.discriminant().certainly_negative());
    }

    TEST_CASE("roots of r for q = e^{-pi/3}")
    {
        const Instance in = instance_q_e_pi_3();
        const auto roots = solve_cubic_real(r_of(in.u3, in.p), prec);
        CHECK(abs_below(roots[0] - in.expected[0], prec.digits));
        CHECK(abs_below(roots[1] - in.expected[1], prec.digits));
        CHECK(abs_below(roots[2] - in.expected[2], prec.digits));
    }

    TEST_CASE("ordering picks alpha, beta, gamma regardless of input order")
    {
        const Instance in = instance_q_e_pi_3();
        auto roots = solve_cubic_real(r_of(in.u3, in.p), prec);
        std::array<int, 3> perm{0, 1, 2};
        do {
            const std::array<Real, 3> shuffled{roots[perm[0]], roots[perm[1]], roots[perm[2]]};
            const OrderedRootTriple t = order_roots(shuffled, in.p);
            CHECK(abs_below(t.alpha - in.expected[0], prec.digits));
            CHECK(abs_below(t.beta - in.expected[1], prec.digits));
            CHECK(abs_below(t.gamma - in.expected[2], prec.digits));
            CHECK(t.certificate.rejected == 5);
            CHECK(t.certificate.cyclic_product.certainly_positive());
            CHECK(t.certificate.beta_over_alpha.certainly_less(t.certificate.beta_over_alpha + 1));
            CHECK(t.certificate.gamma_over_beta.certainly_less(t.certificate.beta_over_alpha));
            CHECK(t.certificate.alpha_over_gamma.certainly_less(t.certificate.gamma_over_beta));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    TEST_CASE("u1, u2, u4 from the ordered roots")
    {
        const Instance in = instance_q_e_pi_3();
        const OrderedRootTriple t = order_roots(solve_cubic_real(r_of(in.u3, in.p), prec), in.p);
        const U124 u = u124_from_roots(t, in.p);
        const Real pi = Real::pi(prec.bits());
        CHECK(abs_below(u.u1 - cbrt(in.p * (1 + sqrt3() / (2 * cos(4 * pi / 9)))), prec.digits));
        CHECK(abs_below(u.u1 * u.u2 * u.u4 - in.p, prec.digits));
        CHECK(u.u2.certainly_less(u.u1));
        CHECK(u.u4.certainly_less(u.u2));
        // Symmetric functions of the ordered triple give back the cubic.
        const Cubic r = r_of(in.u3, in.p);
        CHECK(abs_below(t.alpha + t.beta + t.gamma + r.c2, prec.digits));
        CHECK(abs_below(t.alpha * t.beta + t.beta * t.gamma + t.gamma * t.alpha - r.c1, prec.digits - 1));
        CHECK(abs_below(t.alpha * t.beta * t.gamma + r.c0, prec.digits - 1));
        // Degenerate equal roots force u1 = u2 = u4 = p^{1/3}.
        const Real p = num(8, prec);
        const U124 flat = u124_from_roots({p, p, p, {p, p, p, p, 0}}, p);
        CHECK(abs_below(flat.u1 - 2, prec.digits));
        CHECK(abs_below(flat.u4 - 2, prec.digits));
    }

    TEST_CASE("ordering refuses bad input")
    {
        const Instance in = instance_q_e_pi_3();
        const auto roots = solve_cubic_real(r_of(in.u3, in.p), prec);
        CHECK_THROWS_AS(order_roots(roots, num(0, prec)), std::invalid_argument);
        CHECK_THROWS_AS(order_roots({num(-1, prec), roots[1], roots[2]}, in.p), std::invalid_argument);
        CHECK_THROWS_AS(order_roots({roots[0], roots[0], roots[2]}, in.p), AmbiguousOrder);
        const Real wide = Real::hull(roots[0], roots[1]);
        CHECK_THROWS_AS(order_roots({wide, roots[1], roots[2]}, in.p), AmbiguousOrder);
    }

    TEST_CASE("entry identities on the triple root")
    {
        const Entry356Result r = entry356_check(num(3, prec), num(3, prec), prec);
        CHECK(abs_below(r.t - 6, prec.digits));
        CHECK(abs_below(r.z1 - 3, prec.digits));
        CHECK(abs_below(r.mu - 27, prec.digits));
        CHECK(abs_below(r.nu - 27, prec.digits));
        CHECK(abs_below(r.cube_root_sum - 3, prec.digits));
        CHECK(r.residuals_below(prec.digits));
        CHECK(r.residuals.size() == 7);
    }

    TEST_CASE("entry identities on random three-real-root inputs")
    {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<long> pick(-20000, 20000);
        int done = 0;
        while (done < 12) {
            const Real a = Real(mpq_class(pick(rng)) / 1000, prec.bits());
            const Real b = Real(mpq_class(pick(rng)) / 1000, prec.bits());
            const Cubic c = Cubic::from_symmetric(a, b, num(1, prec));
            const Real disc = c.discriminant();
            if (!(disc - 1).certainly_positive()) continue;
            const Entry356Result r = entry356_check(a, b, prec);
            CHECK_MESSAGE(r.residuals_below(40), r.worst_residual());
            ++done;
        }
        CHECK_THROWS_AS(entry356_check(num(0, prec), num(0, prec), prec), NonRealRoots);
    }

    TEST_CASE("entry cube-root sum at the G_9 instance")
    {
        const Real a = 3 * (1 + sqrt3());
        const Real b = 3 * (1 + 2 * sqrt3());
        const Entry356Result r = entry356_check(a, b, prec);
        const Real g = pow(2 + sqrt3(), mpq_class(1, 6));
        const Real r2 = sqrt(num(2, prec));
        const Real closed = cbrt(3 * sqrt(num(6, prec)) * pow(g, 3) + 9 * r2 * g + 9 * g * g);
        CHECK(abs_below(r.cube_root_sum - closed, prec.digits));
        CHECK(r.residuals_below(prec.digits));
    }

    TEST_CASE("restated nonic value at q = 1/10")
    {
        const Precision p30{40};
        const Nome q = Nome::from_q(Real(mpq_class(1, 10), p30.bits()));
        const NonicValues v = eval_nonic(q, p30);
        const Real y_ref = pow(v.u1 + v.u2 + v.u4, 3) / v.p;
        const RestatedNonic r = nonic_restated_eval(v.u3, v.p, y_ref, p30);
        CHECK(test::agrees(r.value, "3.50419564742881107335343449048497378403067179", 30));
        CHECK(abs_below(pow(r.value - 1 - v.u3, 3) / v.p - r.y, 30));
        CHECK(r.selected_smaller);
        // A reference that matches neither root is refused.
        CHECK_THROWS_AS(nonic_restated_eval(v.u3, v.p, y_ref + 1, p30), IllConditioned);
    }
}
