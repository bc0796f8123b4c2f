#include <ntheta/nonic/context.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

#include <ntheta/puiseux/theta.hpp>

namespace ntheta
{

QSeries decomposition_term(int n, int k, const Exponent &order)
{
    if (n < 1 || n % 2 == 0 || k < 1 || 2 * k > n - 1) {
        throw std::invalid_argument("decomposition_term needs odd n and 1 <= k <= (n-1)/2");
    }
    const QSeries f = theta_f(Exponent(n + 2 * k), Exponent(n - 2 * k), order);
    const QSeries lead = QSeries::monomial(2, Exponent(k * k, n));
    return qs_mul(qs_mul(lead, f), qs_inv(phi_series(Exponent(n), order)));
}

NonicContext build_context(const Exponent &order)
{
    if (order < Exponent(3)) throw std::invalid_argument("nonic context needs order >= 3");
    NonicContext c;
    c.order = order;
    c.u1 = decomposition_term(9, 1, order);
    c.u2 = decomposition_term(9, 2, order);
    c.u3 = decomposition_term(9, 3, order);
    c.u4 = decomposition_term(9, 4, order);
    c.p = qs_mul(qs_mul(c.u1, c.u2), c.u4);
    c.phi1 = phi_series(Exponent(1), order);
    c.phi3 = phi_series(Exponent(3), order);
    c.phi9 = phi_series(Exponent(9), order);
    c.phi_1_3 = phi_series(Exponent(1, 3), order);
    c.phi_1_9 = phi_series(Exponent(1, 9), order);
    c.chi1 = chi_series(Exponent(1), order);
    c.chi3 = chi_series(Exponent(3), order);
    c.chi9 = chi_series(Exponent(9), order);
    return c;
}

std::shared_ptr<const NonicContext> nonic_context(const Exponent &order)
{
    static std::mutex mutex;
    static std::map<Exponent, std::shared_ptr<const NonicContext>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[order];
    if (!slot) slot = std::make_shared<const NonicContext>(build_context(order));
    return slot;
}

} // namespace ntheta
