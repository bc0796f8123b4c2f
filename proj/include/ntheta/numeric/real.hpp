#ifndef NTHETA_NUMERIC_REAL_HPP
#define NTHETA_NUMERIC_REAL_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace ntheta
{

/// Decimal precision request. Work is carried out with `guard` extra digits
/// and pass/fail thresholds sit at 10^-digits.
struct Precision {
    int digits = 50;
    static constexpr int guard = 15;

    int working_digits() const noexcept { return digits + guard; }
    mpfr_prec_t bits() const noexcept;
};

/// Real number enclosed in a closed interval [lo, hi] with outward-rounded
/// MPFR endpoints. Every operation returns an interval containing all
/// results of applying the exact operation to points of its inputs, so the
/// half-width is a rigorous absolute error bound on the midpoint.
class Real
{
public:
    explicit Real(mpfr_prec_t bits = 256);
    Real(long v, mpfr_prec_t bits);
    Real(const mpq_class &v, mpfr_prec_t bits);
    Real(const Real &o);
    Real(Real &&o) noexcept;
    Real &operator=(const Real &o);
    Real &operator=(Real &&o) noexcept;
    ~Real();

    /// Encloses a decimal literal, widened by one unit in its last digit
    /// (the literal itself is a rounded value).
    static Real from_decimal_literal(const std::string &text, mpfr_prec_t bits);
    /// Encloses the exact value of a decimal string (no widening).
    static Real from_decimal(const std::string &text, mpfr_prec_t bits);
    static Real pi(mpfr_prec_t bits);
    /// [lo, hi] from two reals (takes lo.lo and hi.hi).
    static Real hull(const Real &a, const Real &b);

    mpfr_prec_t bits() const noexcept { return m_bits; }
    const __mpfr_struct *lo() const noexcept { return m_lo; }
    const __mpfr_struct *hi() const noexcept { return m_hi; }

    bool is_point() const;
    bool contains_zero() const;
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool certainly_nonnegative() const;
    bool overlaps(const Real &o) const;
    bool certainly_less(const Real &o) const;

    /// Midpoint and half-width (rounded up).
    Real midpoint() const;
    double abs_error() const;
    /// log10 of the half-width, -inf for a point.
    double error_log10() const;
    /// Upper bound on |x| as a double.
    double magnitude() const;
    double to_double() const;

    /// Midpoint in scientific notation with `digits` significant digits.
    std::string str(int digits) const;
    /// Upper bound on |x| in short scientific form, e.g. "3.2e-61".
    std::string abs_bound_str() const;

    Real operator-() const;
    Real &operator+=(const Real &o);
    Real &operator-=(const Real &o);
    Real &operator*=(const Real &o);
    Real &operator/=(const Real &o);

    friend Real operator+(Real a, const Real &b) { return a += b; }
    friend Real operator-(Real a, const Real &b) { return a -= b; }
    friend Real operator*(Real a, const Real &b) { return a *= b; }
    friend Real operator/(Real a, const Real &b) { return a /= b; }
    friend Real operator+(Real a, long b) { return a += Real(b, a.bits()); }
    friend Real operator-(Real a, long b) { return a -= Real(b, a.bits()); }
    friend Real operator*(Real a, long b) { return a *= Real(b, a.bits()); }
    friend Real operator/(Real a, long b) { return a /= Real(b, a.bits()); }
    friend Real operator+(long a, const Real &b) { return Real(a, b.bits()) + b; }
    friend Real operator-(long a, const Real &b) { return Real(a, b.bits()) - b; }
    friend Real operator*(long a, const Real &b) { return Real(a, b.bits()) * b; }
    friend Real operator/(long a, const Real &b) { return Real(a, b.bits()) / b; }

    friend Real abs(const Real &x);
    friend Real sqrt(const Real &x);
    friend Real sqrt_nonneg(const Real &x);
    friend Real cbrt(const Real &x);
    friend Real rootn(const Real &x, unsigned long n);
    friend Real pow(const Real &x, long n);
    friend Real exp(const Real &x);
    friend Real log(const Real &x);
    friend Real cos(const Real &x);
    friend Real sin(const Real &x);
    friend Real acos(const Real &x);
    friend Real intersect(const Real &a, const Real &b);

private:
    void init(mpfr_prec_t bits);
    struct Uninit {
    };
    Real(mpfr_prec_t bits, Uninit);

    mpfr_prec_t m_bits;
    mpfr_t m_lo;
    mpfr_t m_hi;
};

/// x^(num/den) for x > 0 (or any x when den is odd and num >= 0).
Real pow(const Real &x, const mpq_class &e);
/// True when |x| < 10^-digits holds for every point of the enclosure.
bool abs_below(const Real &x, int digits);
/// True when |x| >= 10^-digits holds for every point of the enclosure.
bool abs_at_least(const Real &x, int digits);

} // namespace ntheta

#endif
