#include <ntheta/puiseux/qseries.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <ntheta/errors.hpp>
#include <ntheta/puiseux/kernels.hpp>

namespace ntheta
{

namespace
{

// nullopt stands for "no truncation", i.e. +infinity.
std::optional<Exponent> min_order(const std::optional<Exponent> &a, const std::optional<Exponent> &b)
{
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

std::optional<Exponent> plus(const std::optional<Exponent> &a, const Exponent &b)
{
    if (!a) return std::nullopt;
    return *a + b;
}

} // namespace

QSeries::QSeries(Terms terms, std::optional<Exponent> order) : m_terms(std::move(terms)), m_order(std::move(order))
{
    normalise();
}

void QSeries::normalise()
{
    for (auto it = m_terms.begin(); it != m_terms.end();) {
        if (sgn(it->second) == 0 || (m_order && it->first >= *m_order)) {
            it = m_terms.erase(it);
        } else {
            ++it;
        }
    }
}

QSeries QSeries::exact(Terms terms)
{
    return QSeries(std::move(terms), std::nullopt);
}

QSeries QSeries::truncated(Terms terms, Exponent order)
{
    return QSeries(std::move(terms), order);
}

QSeries QSeries::constant(const mpq_class &c)
{
    return QSeries(Terms{{Exponent(0), c}}, std::nullopt);
}

QSeries QSeries::monomial(const mpq_class &c, Exponent e)
{
    return QSeries(Terms{{e, c}}, std::nullopt);
}

QSeries QSeries::zero(Exponent order)
{
    return QSeries(Terms{}, order);
}

std::optional<Exponent> QSeries::valuation() const
{
    if (m_terms.empty()) return std::nullopt;
    return m_terms.begin()->first;
}

std::optional<Exponent> QSeries::valuation_bound() const
{
    if (!m_terms.empty()) return m_terms.begin()->first;
    return m_order;
}

mpq_class QSeries::coeff(const Exponent &e) const
{
    const auto it = m_terms.find(e);
    return it == m_terms.end() ? mpq_class(0) : it->second;
}

QSeries QSeries::truncate(const Exponent &order) const
{
    return QSeries(m_terms, min_order(m_order, order));
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto &[e, c] : r.m_terms) c = -c;
    return r;
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    m_order = min_order(m_order, o.m_order);
    for (const auto &[e, c] : o.m_terms) {
        m_terms[e] += c;
    }
    normalise();
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    return *this += -o;
}

QSeries &QSeries::operator*=(const QSeries &o)
{
    return *this = qs_mul(*this, o);
}

QSeries &QSeries::operator*=(const mpq_class &c)
{
    for (auto &[e, v] : m_terms) v *= c;
    normalise();
    return *this;
}

QSeries QSeries::pow(unsigned n) const
{
    QSeries result = constant(1);
    QSeries base = *this;
    while (n > 0) {
        if (n & 1u) result = qs_mul(result, base);
        n >>= 1u;
        if (n > 0) base = qs_mul(base, base);
    }
    return result;
}

std::string QSeries::pretty() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : m_terms) {
        mpq_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || e == Exponent(0)) os << mag.get_str();
        if (e == Exponent(0)) continue;
        os << "q";
        if (e == Exponent(1)) continue;
        if (e.is_integer()) {
            os << "^" << e.num();
        } else {
            os << "^(" << e.num() << "/" << e.den() << ")";
        }
    }
    if (m_order) {
        if (!first) os << " + ";
        os << "O(q^" << (m_order->is_integer() ? std::to_string(m_order->num()) : "(" + m_order->str() + ")") << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

QSeries qs_add(const QSeries &a, const QSeries &b)
{
    return a + b;
}

QSeries qs_mul(const QSeries &a, const QSeries &b)
{
    // A known-zero factor annihilates everything, including the unknown tail.
    if (a.is_exact() && a.empty()) return {};
    if (b.is_exact() && b.empty()) return {};

    // Terms of a*b at exponent e involve a_i b_j with i + j = e; unknown a_i
    // (i >= order(a)) can only reach e >= order(a) + val(b), and symmetrically.
    const auto va = *a.valuation_bound();
    const auto vb = *b.valuation_bound();
    const auto order = min_order(plus(a.order(), vb), plus(b.order(), va));

    QSeries::Terms terms = a.size() * b.size() > kernels::parallel_threshold
                               ? kernels::mul_parallel(a.terms(), b.terms(), order)
                               : kernels::mul_serial(a.terms(), b.terms(), order);
    if (!order) return QSeries::exact(std::move(terms));
    return QSeries::truncated(std::move(terms), *order);
}

QSeries qs_inv(const QSeries &a, std::optional<Exponent> cap)
{
    if (a.empty()) {
        throw EmptySeries("cannot invert a series with no known terms");
    }
    const auto [lead_exp, lead_coeff] = *a.terms().begin();

    // a = c q^e (1 + R); the unknown tail of R starts at order(a) - e, which
    // spoils 1/(1+R) from that relative exponent on, hence order(a) - 2e.
    auto order = min_order(plus(a.order(), -lead_exp - lead_exp), cap);
    if (!order) {
        throw std::invalid_argument("qs_inv of an exact series needs a truncation cap");
    }

    // Relative exponents of R live on a 1/D grid.
    std::int64_t den = 1;
    std::vector<std::pair<std::int64_t, mpq_class>> rest;
    for (const auto &[e, c] : a.terms()) {
        den = lcm_den(den, (e - lead_exp).den());
    }
    for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it) {
        const Exponent rel = it->first - lead_exp;
        rest.emplace_back(rel.num() * (den / rel.den()), it->second / lead_coeff);
    }

    // Need B = 1/(1+R) for relative exponents < order + e.
    const Exponent rel_order = *order + lead_exp;
    if (rel_order <= Exponent(0)) {
        return QSeries::zero(*order);
    }
    const Exponent scaled = rel_order * Exponent(den);
    const std::int64_t count = scaled.is_integer() ? scaled.num() : scaled.floor() + 1;

    std::vector<mpq_class> b(static_cast<std::size_t>(count));
    b[0] = 1;
    mpq_class acc;
    for (std::int64_t n = 1; n < count; ++n) {
        acc = 0;
        for (const auto &[k, r] : rest) {
            if (k > n) break;
            const auto &prev = b[static_cast<std::size_t>(n - k)];
            if (sgn(prev) != 0) acc += r * prev;
        }
        b[static_cast<std::size_t>(n)] = -acc;
    }

    QSeries::Terms out;
    const mpq_class scale = 1 / lead_coeff;
    for (std::int64_t n = 0; n < count; ++n) {
        if (sgn(b[static_cast<std::size_t>(n)]) == 0) continue;
        out.emplace(Exponent(n, den) - lead_exp, b[static_cast<std::size_t>(n)] * scale);
    }
    return QSeries::truncated(std::move(out), *order);
}

QSeries qs_scale_q(const QSeries &a, const Exponent &m)
{
    if (!m.is_positive()) {
        throw std::invalid_argument("qs_scale_q requires a positive multiplier");
    }
    QSeries::Terms out;
    for (const auto &[e, c] : a.terms()) out.emplace(e * m, c);
    if (a.is_exact()) return QSeries::exact(std::move(out));
    return QSeries::truncated(std::move(out), *a.order() * m);
}

QSeries frac_filter(const QSeries &s, const Exponent &alpha)
{
    if (alpha < Exponent(0) || alpha >= Exponent(1)) {
        throw std::invalid_argument("frac_filter residue must lie in [0, 1)");
    }
    QSeries::Terms out;
    for (const auto &[e, c] : s.terms()) {
        if (e.frac() == alpha) out.emplace(e, c);
    }
    if (s.is_exact()) return QSeries::exact(std::move(out));
    return QSeries::truncated(std::move(out), *s.order());
}

SeriesDiff qs_compare(const QSeries &a, const QSeries &b)
{
    SeriesDiff diff;
    diff.compared_order = min_order(a.order(), b.order());
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const auto below = [&](const Exponent &e) { return !diff.compared_order || e < *diff.compared_order; };
    while (ia != a.terms().end() || ib != b.terms().end()) {
        Exponent e;
        mpq_class ca = 0;
        mpq_class cb = 0;
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            e = ia->first;
            ca = ia->second;
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            e = ib->first;
            cb = ib->second;
            ++ib;
        } else {
            e = ia->first;
            ca = ia->second;
            cb = ib->second;
            ++ia;
            ++ib;
        }
        if (!below(e)) break;
        if (ca != cb) {
            diff.first_mismatch_exponent = e;
            diff.lhs_coeff = ca;
            diff.rhs_coeff = cb;
            break;
        }
    }
    return diff;
}

} // namespace ntheta
