#ifndef NTHETA_PUISEUX_EXPONENT_HPP
#define NTHETA_PUISEUX_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ntheta
{

/// Exact rational exponent of q, always stored in lowest terms with a
/// positive denominator.
class Exponent
{
public:
    constexpr Exponent() = default;
    Exponent(std::int64_t num, std::int64_t den = 1);

    /// Accepts "n" or "n/d" (optionally signed).
    static Exponent parse(std::string_view text);

    std::int64_t num() const noexcept { return m_num; }
    std::int64_t den() const noexcept { return m_den; }

    /// Canonical "num/den" form, also used for integers ("3/1").
    std::string str() const;

    bool is_integer() const noexcept { return m_den == 1; }
    bool is_positive() const noexcept { return m_num > 0; }
    std::int64_t floor() const noexcept;
    /// Fractional part in [0, 1).
    Exponent frac() const;

    mpq_class to_mpq() const;
    double to_double() const noexcept { return static_cast<double>(m_num) / static_cast<double>(m_den); }

    Exponent operator-() const;
    Exponent &operator+=(const Exponent &o);
    Exponent &operator-=(const Exponent &o);
    Exponent &operator*=(const Exponent &o);
    Exponent &operator/=(const Exponent &o);

    friend Exponent operator+(Exponent a, const Exponent &b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent &b) { return a -= b; }
    friend Exponent operator*(Exponent a, const Exponent &b) { return a *= b; }
    friend Exponent operator/(Exponent a, const Exponent &b) { return a /= b; }

    friend bool operator==(const Exponent &, const Exponent &) = default;
    friend std::strong_ordering operator<=>(const Exponent &a, const Exponent &b);

private:
    std::int64_t m_num = 0;
    std::int64_t m_den = 1;
};

std::int64_t lcm_den(std::int64_t a, std::int64_t b);

} // namespace ntheta

#endif
