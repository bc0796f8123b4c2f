#include <ntheta/puiseux/theta.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <ntheta/errors.hpp>

namespace ntheta
{

namespace
{

Exponent theta_exponent(const Exponent &x, const Exponent &y, std::int64_t n)
{
    const Exponent nn(n);
    return x * nn * (nn + Exponent(1)) / Exponent(2) + y * nn * (nn - Exponent(1)) / Exponent(2);
}

// Number of grid points k >= 0 with k/den < bound.
std::int64_t grid_count(const Exponent &bound, std::int64_t den)
{
    const Exponent scaled = bound * Exponent(den);
    const std::int64_t n = scaled.is_integer() ? scaled.num() : scaled.floor() + 1;
    return std::max<std::int64_t>(n, 0);
}

} // namespace

QSeries theta_f(const Exponent &x, const Exponent &y, const Exponent &order)
{
    if (!(x + y).is_positive()) {
        throw DivergentTheta("f(q^" + x.str() + ", q^" + y.str() + ") diverges: x + y must be positive");
    }
    // The exponent is a convex parabola in n with vertex at (y - x) / (2(x + y)).
    const std::int64_t n0 = ((y - x) / (Exponent(2) * (x + y))).floor();
    QSeries::Terms terms;
    for (std::int64_t n = n0 + 1;; ++n) {
        const Exponent e = theta_exponent(x, y, n);
        if (e >= order) break;
        terms[e] += 1;
    }
    for (std::int64_t n = n0;; --n) {
        const Exponent e = theta_exponent(x, y, n);
        if (e >= order) break;
        terms[e] += 1;
    }
    return QSeries::truncated(std::move(terms), order);
}

QSeries pochhammer_inf(const Exponent &a, const Exponent &step, const Exponent &order, int sign)
{
    if (!step.is_positive()) {
        throw std::invalid_argument("pochhammer_inf requires a positive step");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("pochhammer_inf sign must be +1 or -1");
    }
    const mpq_class s(sign);

    // Finitely many factors have a nonpositive exponent; they are exact polynomials.
    QSeries exact_part = QSeries::constant(1);
    Exponent e = a;
    for (; !e.is_positive(); e += step) {
        exact_part = qs_mul(exact_part, QSeries::constant(1) + QSeries::monomial(s, e));
    }

    // Remaining factors multiply in place on the dense grid of the first positive exponent.
    const std::int64_t den = lcm_den(e.den(), step.den());
    const std::int64_t len = grid_count(order, den);
    std::vector<mpz_class> c(static_cast<std::size_t>(len));
    if (len > 0) c[0] = 1;
    for (; e < order; e += step) {
        const std::int64_t shift = (e * Exponent(den)).num();
        for (std::int64_t k = len - 1; k >= shift; --k) {
            const auto &src = c[static_cast<std::size_t>(k - shift)];
            if (sgn(src) == 0) continue;
            if (sign > 0) {
                c[static_cast<std::size_t>(k)] += src;
            } else {
                c[static_cast<std::size_t>(k)] -= src;
            }
        }
    }
    QSeries::Terms terms;
    for (std::int64_t k = 0; k < len; ++k) {
        if (sgn(c[static_cast<std::size_t>(k)]) != 0) {
            terms.emplace_hint(terms.end(), Exponent(k, den), mpq_class(c[static_cast<std::size_t>(k)]));
        }
    }
    return qs_mul(exact_part, QSeries::truncated(std::move(terms), order));
}

QSeries phi_series(const Exponent &m, const Exponent &order)
{
    return theta_f(m, m, order);
}

QSeries chi_series(const Exponent &m, const Exponent &order)
{
    return pochhammer_inf(m, Exponent(2) * m, order, 1);
}

QSeries theta_f_product(const Exponent &x, const Exponent &y, const Exponent &order)
{
    const Exponent step = x + y;
    if (!step.is_positive()) {
        throw DivergentTheta("f(q^" + x.str() + ", q^" + y.str() + ") diverges: x + y must be positive");
    }
    return qs_mul(qs_mul(pochhammer_inf(x, step, order, 1), pochhammer_inf(y, step, order, 1)),
                  pochhammer_inf(step, step, order, -1));
}

} // namespace ntheta
