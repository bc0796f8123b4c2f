#include <ntheta/numeric/checks.hpp>

#include <random>
#include <vector>

#include <ntheta/cubicalg/cubic.hpp>
#include <ntheta/cubicalg/entry356.hpp>
#include <ntheta/cubicalg/ordering.hpp>
#include <ntheta/errors.hpp>
#include <ntheta/numeric/expr.hpp>
#include <ntheta/numeric/invariants.hpp>
#include <ntheta/numeric/theta_eval.hpp>
#include <ntheta/puiseux/json.hpp>

namespace ntheta
{

namespace
{

constexpr int shown_digits = 25;

std::string qstr(const mpq_class &v)
{
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

// r(x) = x^3 - u3(u3^2 + 2u3 + 4) x^2 + 2u3^3(u3^2 + 2u3 + 4) x - p^3
Cubic nonic_cubic(const Real &u3, const Real &p)
{
    const Real k = u3 * u3 + 2L * u3 + 4L;
    return Cubic::from_symmetric(u3 * k, 2L * pow(u3, 3) * k, pow(p, 3));
}

void certificate_details(NumericCheck &check, const std::string &prefix, const OrderedRootTriple &t)
{
    check.detail(prefix + "cyclic_product", t.certificate.cyclic_product.str(shown_digits));
    check.detail(prefix + "beta/alpha", t.certificate.beta_over_alpha.str(shown_digits));
    check.detail(prefix + "gamma/beta", t.certificate.gamma_over_beta.str(shown_digits));
    check.detail(prefix + "alpha/gamma", t.certificate.alpha_over_gamma.str(shown_digits));
    check.detail(prefix + "rejected", std::to_string(t.certificate.rejected));
}

bool chain_holds(const NonicValues &v)
{
    return v.u1.certainly_less(Real(2L, v.u1.bits())) && v.u2.certainly_less(v.u1) && v.u3.certainly_less(v.u2) &&
           v.u4.certainly_less(v.u3) && v.u4.certainly_positive();
}

std::vector<mpq_class> sweep_nomes()
{
    std::vector<mpq_class> qs;
    for (int k = 1; k <= 10; ++k) qs.emplace_back(k, 20);
    for (auto &q : qs) q.canonicalize();
    return qs;
}

Nome nome_from_rational(const mpq_class &q, const Precision &prec)
{
    return Nome::from_q(Real(q, prec.bits()));
}

} // namespace

CheckReport verify_example(const std::string &id, int digits, const Catalog &catalog)
{
    const CatalogEntry &e = catalog.at(id);
    if (e.kind != "example") throw CatalogMiss("'" + id + "' is not an example entry");
    const Precision prec{digits};
    NumericCheck check(id, digits);
    ExprEvaluator ev(prec, e.let);

    const Real lhs = ev.eval(e.lhs);
    const Real rhs = ev.eval(e.rhs);
    check.expect_close("closed form", lhs, rhs);
    check.detail("value", lhs.str(digits));

    std::optional<std::array<Real, 3>> catalog_roots;
    if (e.cubic) {
        const mpq_class n = parse_rational(e.n.value());
        const Real p = ev.eval(e.cubic->at("p"));
        const Real u3 = ev.eval(e.cubic->at("u3"));
        const PU3 inv = p_u3_from_invariants(n, prec);
        const PU3 ser = p_u3_from_series(Nome::exp_minus_pi_sqrt(n, prec.bits()), prec);
        check.expect_close("p from invariants", p, inv.p);
        check.expect_close("u3 from invariants", u3, inv.u3);
        check.expect_close("p from products", p, ser.p);
        check.expect_close("u3 from products", u3, ser.u3);

        const auto &rj = e.cubic->at("roots");
        std::array<Real, 3> roots{ev.eval(rj.at(0)), ev.eval(rj.at(1)), ev.eval(rj.at(2))};
        const Cubic r = nonic_cubic(u3, p);
        check.expect_zero("r(alpha)", r(roots[0]));
        check.expect_zero("r(beta)", r(roots[1]));
        check.expect_zero("r(gamma)", r(roots[2]));
        const OrderedRootTriple t = order_roots(roots, p);
        check.expect("catalog root order",
                     t.alpha.overlaps(roots[0]) && t.beta.overlaps(roots[1]) && t.gamma.overlaps(roots[2]),
                     "the catalogued (alpha, beta, gamma) is not the arrangement the ordering conditions select");
        catalog_roots = roots;
    }

    if (e.pipeline) {
        const mpq_class n = parse_rational(e.pipeline->at("n").get<std::string>());
        const Real scale = ev.eval(e.pipeline->at("scale"));
        const PU3 inv = p_u3_from_invariants(n, prec);
        const auto roots = solve_cubic_real(nonic_cubic(inv.u3, inv.p), prec);
        const OrderedRootTriple t = order_roots(roots, inv.p);
        const U124 u = u124_from_roots(t, inv.p);
        const Real total = 1L + u.u1 + u.u2 + inv.u3 + u.u4;
        check.expect_close("pipeline", scale * total, lhs);
        if (catalog_roots) {
            check.expect_close("pipeline alpha", t.alpha, (*catalog_roots)[0]);
            check.expect_close("pipeline beta", t.beta, (*catalog_roots)[1]);
            check.expect_close("pipeline gamma", t.gamma, (*catalog_roots)[2]);
        }
        check.detail("u1", u.u1.str(shown_digits));
        check.detail("u2", u.u2.str(shown_digits));
        check.detail("u3", inv.u3.str(shown_digits));
        check.detail("u4", u.u4.str(shown_digits));
        check.detail("p", inv.p.str(shown_digits));
        certificate_details(check, "order.", t);
    }

    if (e.same_value_as) {
        const CatalogEntry &other = catalog.at(*e.same_value_as);
        ExprEvaluator ev_other(prec, other.let);
        check.expect_close("same value as " + other.id, rhs, ev_other.eval(other.rhs));
    }
    return check.finish();
}

CheckReport verify_trig(const std::string &id, int digits, const Catalog &catalog)
{
    const CatalogEntry &e = catalog.at(id);
    if (e.kind != "trig") throw CatalogMiss("'" + id + "' is not a trigonometric identity");
    const Precision prec{digits};
    NumericCheck check(id, digits);
    ExprEvaluator ev(prec, e.let);
    const Real lhs = ev.eval(e.lhs);
    check.expect_close("identity", lhs, ev.eval(e.rhs));
    check.detail("lhs", lhs.str(shown_digits));
    return check.finish();
}

CheckReport verify_gamma_forms(int digits, const Catalog &catalog)
{
    const Precision prec{digits};
    NumericCheck check("gamma-forms", digits);
    std::optional<Real> first_phi1;
    for (const auto &id : catalog.ids("gamma")) {
        const CatalogEntry &e = catalog.at(id);
        ExprEvaluator ev(prec, e.let);
        const Real lhs = ev.eval(e.lhs);
        const Real rhs = ev.eval(e.rhs);
        check.expect_close(id, lhs, rhs);
        if (e.lhs == nlohmann::json::array({"phi", "1"})) {
            if (first_phi1) {
                check.expect_close(id + " against the other gamma form", rhs, *first_phi1);
            } else {
                first_phi1 = rhs;
            }
        }
    }
    check.expect("gamma entries", first_phi1.has_value(), "catalog has no gamma form of phi(e^{-pi})");
    return check.finish();
}

CheckReport check_class_invariant(const mpq_class &n, int digits)
{
    const Precision prec{digits};
    NumericCheck check("invariant-g" + qstr(n), digits);
    const ClassInvariant g = class_invariant(n, prec);
    check.expect_close("G_" + qstr(n), g.value, invariant_from_series(n, prec));
    const mpq_class inv = 1 / n;
    if (inv != n) {
        const ClassInvariant r = class_invariant(inv, prec);
        check.expect("reflection source", r.source == InvariantSource::reflection);
        check.expect_close("G_" + qstr(inv), r.value, invariant_from_series(inv, prec));
    }
    check.detail("closed_form", invariant_closed_form(n));
    check.detail("value", g.value.str(digits));
    return check.finish();
}

CheckReport check_invariant_product_formula(int digits)
{
    const Precision prec{digits};
    NumericCheck check("invariant-product-formula", digits);
    for (long m : {3L, 9L, 27L, 81L, 243L}) {
        const ClassInvariant g = invariant_via_product_formula(mpq_class(m), prec);
        const std::string name = "G_" + std::to_string(m);
        check.expect_close(name + " against table", g.value, class_invariant(mpq_class(m), prec).value);
        check.expect_close(name + " against series", g.value, invariant_from_series(mpq_class(m), prec));
    }
    return check.finish();
}

CheckReport check_transformation(int digits)
{
    const Precision prec{digits};
    NumericCheck check("lemma-transform", digits);
    for (long n : {3L, 7L, 9L, 27L}) {
        const Real small = eval_phi(Nome::exp_minus_pi_sqrt(mpq_class(1, n), prec.bits()), prec);
        const Real large = eval_phi(Nome::exp_minus_pi_sqrt(mpq_class(n), prec.bits()), prec);
        check.expect_close("n = " + std::to_string(n), small, pow(Real(n, prec.bits()), mpq_class(1, 4)) * large);
    }
    return check.finish();
}

CheckReport check_ratio_9n(int digits)
{
    const Precision prec{digits};
    NumericCheck check("lemma-9n-ratio", digits);
    for (const mpq_class &n : {mpq_class(1, 9), mpq_class(1, 3), mpq_class(1), mpq_class(3), mpq_class(9), mpq_class(27)}) {
        const Real closed = ratio_9n(n, prec);
        check.expect_close("n = " + qstr(n), closed, phi_at(81 * n, prec) / phi_at(n, prec));
        check.expect("n = " + qstr(n) + " above 1/3", (Real(1L, prec.bits()) / 3L).certainly_less(closed));
    }
    return check.finish();
}

CheckReport check_p_u3_invariants(int digits)
{
    const Precision prec{digits};
    NumericCheck check("lemma-p-u3-invariants", digits);
    for (const mpq_class &n : {mpq_class(1, 243), mpq_class(1, 81), mpq_class(1, 27), mpq_class(1, 9), mpq_class(1, 3), mpq_class(1), mpq_class(3)}) {
        const PU3 inv = p_u3_from_invariants(n, prec);
        const Nome q = Nome::exp_minus_pi_sqrt(n, prec.bits());
        const PU3 ser = p_u3_from_series(q, prec);
        const NonicValues v = eval_nonic(q, prec);
        const std::string at = " at n = " + qstr(n);
        check.expect_close("p" + at, inv.p, ser.p);
        check.expect_close("u3" + at, inv.u3, ser.u3);
        check.expect_close("p = u1 u2 u4" + at, inv.p, v.p);
        check.expect_close("u3 theta quotient" + at, inv.u3, v.u3);
    }
    return check.finish();
}

CheckReport check_g9_relation(int digits)
{
    const Precision prec{digits};
    NumericCheck check("g9-relation", digits);
    const mpfr_prec_t bits = prec.bits();
    const Real g = class_invariant(mpq_class(9), prec).value;
    const Real s2 = sqrt(Real(2L, bits));
    const Real s3 = sqrt(Real(3L, bits));
    check.expect_zero("degree-7 relation", s2 * pow(g, 7) - (2L - s3) * pow(g, 6) - 2L * s3 * pow(g, 4) + s2 * g + 1L);
    return check.finish();
}

CheckReport check_reference_cubics(int digits)
{
    const Precision prec{digits};
    const mpfr_prec_t bits = prec.bits();
    NumericCheck check("cubic-reference-roots", digits);
    const auto r1 = solve_cubic_real({Real(-6L, bits), Real(11L, bits), Real(-6L, bits)}, prec);
    for (int i = 0; i < 3; ++i) check.expect_close("x^3 - 6x^2 + 11x - 6", r1[i], Real(i + 1L, bits));

    const auto r2 = solve_cubic_real({Real(0L, bits), Real(-3L, bits), Real(1L, bits)}, prec);
    const Real pi = Real::pi(bits);
    check.expect_close("x^3 - 3x + 1 smallest", r2[0], -2L * cos(pi / 9L));
    check.expect_close("x^3 - 3x + 1 middle", r2[1], 2L * cos(4L * pi / 9L));
    check.expect_close("x^3 - 3x + 1 largest", r2[2], 2L * cos(2L * pi / 9L));
    return check.finish();
}

CheckReport check_entry356_trivial(int digits)
{
    const Precision prec{digits};
    NumericCheck check("entry356-trivial", digits);
    const Real three(3L, prec.bits());
    const Entry356Result r = entry356_check(three, three, prec);
    for (const auto &res : r.residuals) check.expect_zero(res.name, res.value);
    for (const auto &x : r.roots) check.expect_close("triple root", x, Real(1L, prec.bits()));
    check.expect_close("z1", r.z1, three);
    check.expect_close("z2", r.z2, three);
    check.expect_close("t", r.t, Real(6L, prec.bits()));
    check.expect_close("mu", r.mu, Real(27L, prec.bits()));
    check.expect_close("nu", r.nu, Real(27L, prec.bits()));
    check.expect_close("cube root sum", r.cube_root_sum, three);
    return check.finish();
}

CheckReport check_entry356_g9(int digits)
{
    const Precision prec{digits};
    const mpfr_prec_t bits = prec.bits();
    NumericCheck check("entry356-g9", digits);
    const Real s3 = sqrt(Real(3L, bits));
    const Entry356Result r = entry356_check(3L * (1L + s3), 3L * (1L + 2L * s3), prec);
    for (const auto &res : r.residuals) check.expect_zero(res.name, res.value);
    const Real g = class_invariant(mpq_class(9), prec).value;
    const Real s2 = sqrt(Real(2L, bits));
    const Real target = cbrt(3L * s2 * s3 * pow(g, 3) + 9L * s2 * g + 9L * g * g);
    check.expect_close("cube root sum in G_9", r.cube_root_sum, target);
    check.detail("cube_root_sum", r.cube_root_sum.str(shown_digits));
    return check.finish();
}

CheckReport check_entry356_random(int digits, int samples, std::uint64_t seed)
{
    const Precision prec{digits};
    NumericCheck check("entry356-random", digits);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-20000, 20000);
    int accepted = 0;
    int attempts = 0;
    while (accepted < samples && attempts < 100 * samples) {
        ++attempts;
        const mpq_class a = mpq_class(coord(rng)) / 1000;
        const mpq_class b = mpq_class(coord(rng)) / 1000;
        const mpq_class disc = a * a * b * b - 4 * b * b * b - 4 * a * a * a + 18 * a * b - 27;
        // Keep clear of repeated roots so the sample tests the identities,
        // not the conditioning of the solver.
        if (disc <= 1) continue;
        ++accepted;
        const Entry356Result r = entry356_check(Real(a, prec.bits()), Real(b, prec.bits()), prec);
        const std::string tag = "(" + qstr(a) + ", " + qstr(b) + ") ";
        for (const auto &res : r.residuals) check.expect_zero(tag + res.name, res.value);
    }
    check.expect("sample count", accepted == samples, "only " + std::to_string(accepted) + " samples drawn");
    check.detail("samples", std::to_string(accepted));
    check.detail("seed", std::to_string(seed));
    return check.finish();
}

CheckReport check_restated_nonic(int digits)
{
    const Precision prec{digits};
    const mpfr_prec_t bits = prec.bits();
    NumericCheck check("restated-nonic", digits);

    // q = e^{-pi/3}: u3 and p from invariants, reference from series.
    {
        const mpq_class n(1, 9);
        const PU3 inv = p_u3_from_invariants(n, prec);
        const NonicValues v = eval_nonic(Nome::exp_minus_pi_sqrt(n, bits), prec);
        const Real y_ref = pow(v.u1 + v.u2 + v.u4, 3) / v.p;
        const RestatedNonic r = nonic_restated_eval(inv.u3, inv.p, y_ref, prec);
        const Real target = 3L * sqrt(Real(3L, bits)) * phi_at(mpq_class(729), prec) / phi_at(mpq_class(9), prec);
        check.expect_close("q = e^{-pi/3}", r.value, target);
        check.expect_close("q = e^{-pi/3} inversion", pow(r.value - (1L + inv.u3), 3) / inv.p, r.y);
        check.detail("e^{-pi/3}.root", r.selected_smaller ? "smaller" : "larger");
        check.detail("e^{-pi/3}.discarded", r.discarded.str(shown_digits));
    }
    // q = 0.1 from series alone, against direct phi sums.
    {
        const Nome q = nome_from_rational(mpq_class(1, 10), prec);
        const NonicValues v = eval_nonic(q, prec);
        const Real y_ref = pow(v.u1 + v.u2 + v.u4, 3) / v.p;
        const RestatedNonic r = nonic_restated_eval(v.u3, v.p, y_ref, prec);
        const Real target = eval_phi(q.scaled(mpq_class(1, 9)), prec) / eval_phi(q.scaled(9), prec);
        check.expect_close("q = 1/10", r.value, target);
        check.detail("0.1.root", r.selected_smaller ? "smaller" : "larger");
    }
    return check.finish();
}

CheckReport check_root_ordering_sweep(int digits)
{
    const Precision prec{digits};
    NumericCheck check("root-ordering-sweep", digits);
    for (const auto &qv : sweep_nomes()) {
        const std::string at = "q = " + qstr(qv) + ": ";
        const NonicValues v = eval_nonic(nome_from_rational(qv, prec), prec);
        const auto roots = solve_cubic_real(nonic_cubic(v.u3, v.p), prec);
        const OrderedRootTriple t = order_roots(roots, v.p);
        const U124 u = u124_from_roots(t, v.p);
        check.expect_close(at + "u1", u.u1, v.u1);
        check.expect_close(at + "u2", u.u2, v.u2);
        check.expect_close(at + "u4", u.u4, v.u4);
        check.expect(at + "2 > u1 > u2 > u3 > u4 > 0", chain_holds(NonicValues{u.u1, u.u2, v.u3, u.u4, v.p}));
        check.expect(at + "arrangements rejected", t.certificate.rejected == 5,
                     std::to_string(t.certificate.rejected) + " of 5 other arrangements rejected");
    }
    return check.finish();
}

CheckReport check_ordering_identities(int digits)
{
    const Precision prec{digits};
    NumericCheck check("ordering-identities", digits);
    for (const auto &qv : sweep_nomes()) {
        const std::string at = "q = " + qstr(qv) + ": ";
        const NonicValues v = eval_nonic(nome_from_rational(qv, prec), prec);
        const Real al = v.u2 * v.u4 * v.u4;
        const Real be = v.u4 * v.u1 * v.u1;
        const Real ga = v.u1 * v.u2 * v.u2;
        const Real &u3 = v.u3;
        check.expect_close(at + "beta/alpha + gamma/beta + alpha/gamma", be / al + ga / be + al / ga, (pow(u3, 3) + 4L) / (u3 * u3));
        check.expect_close(at + "alpha/beta + beta/gamma + gamma/alpha", al / be + be / ga + ga / al,
                           (pow(u3, 4) - pow(u3, 3) + 6L * u3 * u3 - 8L * u3 + 8L) / pow(u3, 3));
        const Real c1 = pow(v.u1, 3);
        const Real c2 = pow(v.u2, 3);
        const Real c4 = pow(v.u4, 3);
        const Real gap = (v.p / c1 + v.p / c2 + v.p / c4) - (c1 + c2 + c4) / v.p;
        check.expect_close(at + "reciprocal-cube gap", gap, pow((2L - u3) / u3, 3));
        check.expect(at + "reciprocal-cube inequality", gap.certainly_positive());
    }
    return check.finish();
}

CheckReport check_monotonicity(int digits)
{
    const Precision prec{digits};
    NumericCheck check("monotonicity", digits);
    for (const mpq_class &qv : {mpq_class(1, 10), mpq_class(3, 10), mpq_class(1, 2), mpq_class(4, 5)}) {
        const NonicValues v = eval_nonic(nome_from_rational(qv, prec), prec);
        check.expect("q = " + qstr(qv), chain_holds(v));
        check.detail("q = " + qstr(qv), v.u1.str(8) + " > " + v.u2.str(8) + " > " + v.u3.str(8) + " > " + v.u4.str(8));
    }
    return check.finish();
}

} // namespace ntheta
