#ifndef NTHETA_NUMERIC_THETA_EVAL_HPP
#define NTHETA_NUMERIC_THETA_EVAL_HPP

#include <utility>

#include <gmpxx.h>

#include <ntheta/numeric/real.hpp>

namespace ntheta
{

/// A real nome 0 < q < 1, carried as log q so that rational powers are cheap.
class Nome
{
public:
    static Nome from_log(Real lnq);
    static Nome from_q(const Real &q);
    /// q = exp(-pi sqrt(n)).
    static Nome exp_minus_pi_sqrt(const mpq_class &n, mpfr_prec_t bits);

    const Real &log_q() const noexcept { return m_lnq; }
    Real value() const;
    /// q^m as a real.
    Real power(const mpq_class &m) const;
    /// The nome q^m.
    Nome scaled(const mpq_class &m) const;

private:
    explicit Nome(Real lnq) : m_lnq(std::move(lnq)) {}
    Real m_lnq;
};

/// Upper limit on summation indices and product factors before giving up.
inline constexpr long max_terms = 200000;

/// f(q^x, q^y) for x, y > 0 with a rigorous tail enclosure.
Real eval_theta_f(const mpq_class &x, const mpq_class &y, const Nome &q, const Precision &prec);
/// phi(q) = f(q, q).
Real eval_phi(const Nome &q, const Precision &prec);
/// chi(q) = (-q; q^2)_inf.
Real eval_chi(const Nome &q, const Precision &prec);
/// phi(exp(-pi sqrt(n))); for n < 1 the value is mapped through
/// phi(e^{-pi/sqrt(m)}) = m^{1/4} phi(e^{-pi sqrt(m)}) before summing.
Real phi_at(const mpq_class &n, const Precision &prec);
/// 2^{-1/4} q^{-1/24} chi(q) at q = exp(-pi sqrt(n)).
Real invariant_from_series(const mpq_class &n, const Precision &prec);

/// u_k(q) = 2 q^{k^2/9} f(q^{9+2k}, q^{9-2k}) / phi(q^9), k = 1..4.
Real eval_u(int k, const Nome &q, const Precision &prec);

struct NonicValues {
    Real u1, u2, u3, u4, p;
};
NonicValues eval_nonic(const Nome &q, const Precision &prec);

} // namespace ntheta

#endif
