#include <ntheta/numeric/theta_eval.hpp>

#include <stdexcept>
#include <string>

#include <ntheta/errors.hpp>

namespace ntheta
{

Nome Nome::from_log(Real lnq)
{
    if (!lnq.certainly_negative()) {
        throw std::domain_error("nome must satisfy 0 < q < 1");
    }
    return Nome(std::move(lnq));
}

Nome Nome::from_q(const Real &q)
{
    if (!q.certainly_positive()) {
        throw std::domain_error("nome must satisfy 0 < q < 1");
    }
    return from_log(log(q));
}

Nome Nome::exp_minus_pi_sqrt(const mpq_class &n, mpfr_prec_t bits)
{
    if (sgn(n) <= 0) throw std::domain_error("exp(-pi sqrt(n)) needs n > 0");
    return Nome(-(Real::pi(bits) * sqrt(Real(n, bits))));
}

Real Nome::value() const
{
    return exp(m_lnq);
}

Real Nome::power(const mpq_class &m) const
{
    return exp(m_lnq * Real(m, m_lnq.bits()));
}

Nome Nome::scaled(const mpq_class &m) const
{
    if (sgn(m) <= 0) throw std::domain_error("nome power must be positive");
    return Nome(m_lnq * Real(m, m_lnq.bits()));
}

namespace
{

mpq_class theta_exponent(const mpq_class &x, const mpq_class &y, long n)
{
    return x * n * (n + 1) / 2 + y * n * (n - 1) / 2;
}

// One side of the theta sum, n = 1, 2, ... with exponents E(n) from `x`, `y`
// (the negative side is the same sum with x and y exchanged). Terms grow in
// ratio q^{x(n+1) + y n}, so the tail after N is at most
// q^{E(N+1)} / (1 - q^{x(N+2) + y(N+1)}).
Real theta_half(const mpq_class &x, const mpq_class &y, const Nome &q, const Precision &prec)
{
    const mpfr_prec_t bits = prec.bits();
    const int tol = prec.working_digits();
    Real sum(0L, bits);
    for (long n = 1; n <= max_terms; ++n) {
        const Real term = q.power(theta_exponent(x, y, n));
        sum += term;
        if (abs_below(term, tol)) {
            const Real tail = q.power(theta_exponent(x, y, n + 1)) / (1L - q.power(x * (n + 2) + y * (n + 1)));
            if (abs_below(tail, tol + 1)) {
                return sum + Real::hull(Real(0L, bits), tail);
            }
        }
    }
    throw PrecisionUnreachable("theta series needs more than " + std::to_string(max_terms) + " terms; map q away from 1 first");
}

} // namespace

Real eval_theta_f(const mpq_class &x, const mpq_class &y, const Nome &q, const Precision &prec)
{
    if (sgn(x) <= 0 || sgn(y) <= 0) {
        throw std::domain_error("numeric f(q^x, q^y) requires x, y > 0");
    }
    return Real(1L, prec.bits()) + theta_half(x, y, q, prec) + theta_half(y, x, q, prec);
}

Real eval_phi(const Nome &q, const Precision &prec)
{
    return eval_theta_f(1, 1, q, prec);
}

Real eval_chi(const Nome &q, const Precision &prec)
{
    const mpfr_prec_t bits = prec.bits();
    const int tol = prec.working_digits();
    const Real one_minus_q2 = 1L - q.power(2);
    Real prod(1L, bits);
    for (long k = 1; k <= max_terms; ++k) {
        const Real term = q.power(2 * k - 1);
        prod *= 1L + term;
        if (abs_below(term, tol)) {
            // prod_{j>k} (1 + q^{2j-1}) lies in [1, exp(sum_{j>k} q^{2j-1})].
            const Real tail = q.power(2 * k + 1) / one_minus_q2;
            if (abs_below(tail, tol + 1)) {
                return prod * Real::hull(Real(1L, bits), exp(tail));
            }
        }
    }
    throw PrecisionUnreachable("chi product needs more than " + std::to_string(max_terms) + " factors");
}

Real phi_at(const mpq_class &n, const Precision &prec)
{
    const mpfr_prec_t bits = prec.bits();
    if (n >= 1) return eval_phi(Nome::exp_minus_pi_sqrt(n, bits), prec);
    const mpq_class m = 1 / n;
    return pow(Real(m, bits), mpq_class(1, 4)) * eval_phi(Nome::exp_minus_pi_sqrt(m, bits), prec);
}

Real invariant_from_series(const mpq_class &n, const Precision &prec)
{
    const mpfr_prec_t bits = prec.bits();
    const Nome q = Nome::exp_minus_pi_sqrt(n, bits);
    // q^{-1/24} = exp(pi sqrt(n) / 24)
    const Real q_shift = exp(-q.log_q() / 24L);
    return pow(Real(2L, bits), mpq_class(-1, 4)) * q_shift * eval_chi(q, prec);
}

Real eval_u(int k, const Nome &q, const Precision &prec)
{
    if (k < 1 || k > 4) throw std::out_of_range("u_k is defined for k = 1..4");
    const Real f = eval_theta_f(9 + 2 * k, 9 - 2 * k, q, prec);
    return 2L * q.power((mpq_class(k * k) / 9)) * f / eval_phi(q.scaled(9), prec);
}

NonicValues eval_nonic(const Nome &q, const Precision &prec)
{
    const Real phi9 = eval_phi(q.scaled(9), prec);
    auto u = [&](int k) {
        return 2L * q.power((mpq_class(k * k) / 9)) * eval_theta_f(9 + 2 * k, 9 - 2 * k, q, prec) / phi9;
    };
    NonicValues v{u(1), u(2), u(3), u(4), Real(prec.bits())};
    v.p = v.u1 * v.u2 * v.u4;
    return v;
}

} // namespace ntheta
