#include <ntheta/puiseux/exponent.hpp>

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ntheta
{

namespace
{

using wide = __int128;

std::int64_t narrow(wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("exponent arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

wide gcd_wide(wide a, wide b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Exponent make_reduced(wide num, wide den)
{
    if (den == 0) {
        throw std::invalid_argument("exponent with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const wide g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Exponent(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    }
    return v;
}

} // namespace

Exponent::Exponent(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::invalid_argument("exponent with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    m_num = g > 1 ? num / g : num;
    m_den = g > 1 ? den / g : den;
}

Exponent Exponent::parse(std::string_view text)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Exponent(parse_int(text));
    }
    return Exponent(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Exponent::str() const
{
    return std::to_string(m_num) + "/" + std::to_string(m_den);
}

std::int64_t Exponent::floor() const noexcept
{
    auto q = m_num / m_den;
    if (m_num % m_den != 0 && m_num < 0) --q;
    return q;
}

Exponent Exponent::frac() const
{
    return *this - Exponent(floor());
}

mpq_class Exponent::to_mpq() const
{
    mpq_class r(mpz_class(std::to_string(m_num)), mpz_class(std::to_string(m_den)));
    r.canonicalize();
    return r;
}

Exponent Exponent::operator-() const
{
    return make_reduced(-static_cast<wide>(m_num), m_den);
}

Exponent &Exponent::operator+=(const Exponent &o)
{
    return *this = make_reduced(static_cast<wide>(m_num) * o.m_den + static_cast<wide>(o.m_num) * m_den,
                                static_cast<wide>(m_den) * o.m_den);
}

Exponent &Exponent::operator-=(const Exponent &o)
{
    return *this = make_reduced(static_cast<wide>(m_num) * o.m_den - static_cast<wide>(o.m_num) * m_den,
                                static_cast<wide>(m_den) * o.m_den);
}

Exponent &Exponent::operator*=(const Exponent &o)
{
    return *this = make_reduced(static_cast<wide>(m_num) * o.m_num, static_cast<wide>(m_den) * o.m_den);
}

Exponent &Exponent::operator/=(const Exponent &o)
{
    return *this = make_reduced(static_cast<wide>(m_num) * o.m_den, static_cast<wide>(m_den) * o.m_num);
}

std::strong_ordering operator<=>(const Exponent &a, const Exponent &b)
{
    const wide lhs = static_cast<wide>(a.m_num) * b.m_den;
    const wide rhs = static_cast<wide>(b.m_num) * a.m_den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t lcm_den(std::int64_t a, std::int64_t b)
{
    return std::lcm(a, b);
}

} // namespace ntheta
