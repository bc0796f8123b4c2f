#ifndef NTHETA_PUISEUX_QSERIES_HPP
#define NTHETA_PUISEUX_QSERIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include <ntheta/puiseux/exponent.hpp>

namespace ntheta
{

/// Truncated formal Puiseux series in q with exact rational coefficients.
///
/// A series is either exact (a Laurent-Puiseux polynomial known to every
/// order) or truncated: every coefficient with exponent strictly below
/// order() is exact and nothing is known above it. Stored coefficients are
/// never zero and every stored exponent lies below order().
class QSeries
{
public:
    using Terms = std::map<Exponent, mpq_class>;

    /// The exact zero series.
    QSeries() = default;

    static QSeries exact(Terms terms);
    static QSeries truncated(Terms terms, Exponent order);
    static QSeries constant(const mpq_class &c);
    static QSeries monomial(const mpq_class &c, Exponent e);
    /// Zero known up to (but excluding) `order`.
    static QSeries zero(Exponent order);

    const Terms &terms() const noexcept { return m_terms; }
    const std::optional<Exponent> &order() const noexcept { return m_order; }
    bool is_exact() const noexcept { return !m_order.has_value(); }
    bool empty() const noexcept { return m_terms.empty(); }
    std::size_t size() const noexcept { return m_terms.size(); }

    /// Exponent of the leading stored term, if any.
    std::optional<Exponent> valuation() const;
    /// Lower bound on the true valuation: the leading exponent, or the order
    /// for a truncated series with no known terms. Empty for the exact zero.
    std::optional<Exponent> valuation_bound() const;

    mpq_class coeff(const Exponent &e) const;

    /// Drops terms at or above `order` and lowers the guarantee accordingly.
    QSeries truncate(const Exponent &order) const;

    QSeries operator-() const;
    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const QSeries &o);
    QSeries &operator*=(const mpq_class &c);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries &b) { return a *= b; }
    friend QSeries operator*(const mpq_class &c, QSeries a) { return a *= c; }
    friend QSeries operator*(QSeries a, const mpq_class &c) { return a *= c; }

    friend bool operator==(const QSeries &, const QSeries &) = default;

    QSeries pow(unsigned n) const;

    /// Human-readable rendering, e.g. "1 + 2q^(1/9) + O(q^60)".
    std::string pretty() const;

private:
    QSeries(Terms terms, std::optional<Exponent> order);
    void normalise();

    Terms m_terms;
    std::optional<Exponent> m_order;
};

/// Outcome of comparing two series below their common guaranteed order.
struct SeriesDiff {
    std::optional<Exponent> first_mismatch_exponent;
    mpq_class lhs_coeff;
    mpq_class rhs_coeff;
    /// Exclusive bound below which the comparison was made; empty when both
    /// inputs were exact.
    std::optional<Exponent> compared_order;

    bool agree() const noexcept { return !first_mismatch_exponent.has_value(); }
};

QSeries qs_add(const QSeries &a, const QSeries &b);
QSeries qs_mul(const QSeries &a, const QSeries &b);
/// Multiplicative inverse. A truncated input determines the output order;
/// an exact input requires `cap`. Throws EmptySeries when `a` has no terms.
QSeries qs_inv(const QSeries &a, std::optional<Exponent> cap = std::nullopt);
/// q -> q^m for a positive rational m.
QSeries qs_scale_q(const QSeries &a, const Exponent &m);
/// Keeps the terms whose exponent has fractional part `alpha` in [0, 1).
QSeries frac_filter(const QSeries &s, const Exponent &alpha);
SeriesDiff qs_compare(const QSeries &a, const QSeries &b);

} // namespace ntheta

#endif
