#include <ntheta/numeric/real.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace ntheta
{

namespace
{

constexpr double log2_10 = 3.32192809488736234787;

struct TempMpfr {
    mpfr_t v;
    explicit TempMpfr(mpfr_prec_t bits) { mpfr_init2(v, bits); }
    ~TempMpfr() { mpfr_clear(v); }
    TempMpfr(const TempMpfr &) = delete;
    TempMpfr &operator=(const TempMpfr &) = delete;
};

std::string format(const char *fmt, int digits, mpfr_srcptr x)
{
    char *buf = nullptr;
    if (digits >= 0) {
        mpfr_asprintf(&buf, fmt, digits, x);
    } else {
        mpfr_asprintf(&buf, fmt, x);
    }
    std::string s = buf ? buf : "";
    mpfr_free_str(buf);
    return s;
}

// Upper bound on max(|lo|, |hi|).
void abs_upper(mpfr_ptr out, const Real &x)
{
    TempMpfr a(x.bits());
    mpfr_abs(out, x.lo(), MPFR_RNDU);
    mpfr_abs(a.v, x.hi(), MPFR_RNDU);
    mpfr_max(out, out, a.v, MPFR_RNDU);
}

} // namespace

mpfr_prec_t Precision::bits() const noexcept
{
    return static_cast<mpfr_prec_t>(std::ceil(working_digits() * log2_10)) + 16;
}

void Real::init(mpfr_prec_t bits)
{
    m_bits = bits;
    mpfr_init2(m_lo, bits);
    mpfr_init2(m_hi, bits);
}

Real::Real(mpfr_prec_t bits, Uninit)
{
    init(bits);
}

Real::Real(mpfr_prec_t bits)
{
    init(bits);
    mpfr_set_zero(m_lo, 1);
    mpfr_set_zero(m_hi, 1);
}

Real::Real(long v, mpfr_prec_t bits)
{
    init(bits);
    mpfr_set_si(m_lo, v, MPFR_RNDD);
    mpfr_set_si(m_hi, v, MPFR_RNDU);
}

Real::Real(const mpq_class &v, mpfr_prec_t bits)
{
    init(bits);
    mpfr_set_q(m_lo, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(m_hi, v.get_mpq_t(), MPFR_RNDU);
}

Real::Real(const Real &o)
{
    init(o.m_bits);
    mpfr_set(m_lo, o.m_lo, MPFR_RNDD);
    mpfr_set(m_hi, o.m_hi, MPFR_RNDU);
}

Real::Real(Real &&o) noexcept : Real(o.m_bits, Real::Uninit{})
{
    mpfr_swap(m_lo, o.m_lo);
    mpfr_swap(m_hi, o.m_hi);
}

Real &Real::operator=(const Real &o)
{
    if (this != &o) {
        if (m_bits != o.m_bits) {
            mpfr_set_prec(m_lo, o.m_bits);
            mpfr_set_prec(m_hi, o.m_bits);
            m_bits = o.m_bits;
        }
        mpfr_set(m_lo, o.m_lo, MPFR_RNDD);
        mpfr_set(m_hi, o.m_hi, MPFR_RNDU);
    }
    return *this;
}

Real &Real::operator=(Real &&o) noexcept
{
    std::swap(m_bits, o.m_bits);
    mpfr_swap(m_lo, o.m_lo);
    mpfr_swap(m_hi, o.m_hi);
    return *this;
}

Real::~Real()
{
    mpfr_clear(m_lo);
    mpfr_clear(m_hi);
}

Real Real::from_decimal(const std::string &text, mpfr_prec_t bits)
{
    Real r(bits, Real::Uninit{});
    if (mpfr_set_str(r.m_lo, text.c_str(), 10, MPFR_RNDD) != 0 || mpfr_set_str(r.m_hi, text.c_str(), 10, MPFR_RNDU) != 0) {
        throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
    return r;
}

Real Real::from_decimal_literal(const std::string &text, mpfr_prec_t bits)
{
    Real r = from_decimal(text, bits);
    // Unit in the last written place: 10^(exponent - fraction digits).
    long exponent = 0;
    std::string mantissa = text;
    if (const auto pos = text.find_first_of("eE"); pos != std::string::npos) {
        exponent = std::stol(text.substr(pos + 1));
        mantissa = text.substr(0, pos);
    }
    long fraction = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
        fraction = static_cast<long>(mantissa.size() - dot - 1);
    }
    TempMpfr ulp(bits);
    mpfr_set_ui(ulp.v, 10, MPFR_RNDU);
    mpfr_pow_si(ulp.v, ulp.v, exponent - fraction, MPFR_RNDU);
    mpfr_sub(r.m_lo, r.m_lo, ulp.v, MPFR_RNDD);
    mpfr_add(r.m_hi, r.m_hi, ulp.v, MPFR_RNDU);
    return r;
}

Real Real::pi(mpfr_prec_t bits)
{
    Real r(bits, Real::Uninit{});
    mpfr_const_pi(r.m_lo, MPFR_RNDD);
    mpfr_const_pi(r.m_hi, MPFR_RNDU);
    return r;
}

Real Real::hull(const Real &a, const Real &b)
{
    Real r(std::max(a.m_bits, b.m_bits), Real::Uninit{});
    mpfr_min(r.m_lo, a.m_lo, b.m_lo, MPFR_RNDD);
    mpfr_max(r.m_hi, a.m_hi, b.m_hi, MPFR_RNDU);
    return r;
}

bool Real::is_point() const
{
    return mpfr_equal_p(m_lo, m_hi) != 0;
}

bool Real::contains_zero() const
{
    return mpfr_sgn(m_lo) <= 0 && mpfr_sgn(m_hi) >= 0;
}

bool Real::certainly_positive() const
{
    return mpfr_sgn(m_lo) > 0;
}

bool Real::certainly_negative() const
{
    return mpfr_sgn(m_hi) < 0;
}

bool Real::certainly_nonnegative() const
{
    return mpfr_sgn(m_lo) >= 0;
}

bool Real::overlaps(const Real &o) const
{
    return mpfr_lessequal_p(m_lo, o.m_hi) && mpfr_lessequal_p(o.m_lo, m_hi);
}

bool Real::certainly_less(const Real &o) const
{
    return mpfr_less_p(m_hi, o.m_lo) != 0;
}

Real Real::midpoint() const
{
    Real r(m_bits, Real::Uninit{});
    mpfr_add(r.m_lo, m_lo, m_hi, MPFR_RNDN);
    mpfr_div_2ui(r.m_lo, r.m_lo, 1, MPFR_RNDN);
    mpfr_set(r.m_hi, r.m_lo, MPFR_RNDN);
    return r;
}

double Real::abs_error() const
{
    TempMpfr w(m_bits);
    mpfr_sub(w.v, m_hi, m_lo, MPFR_RNDU);
    mpfr_div_2ui(w.v, w.v, 1, MPFR_RNDU);
    return mpfr_get_d(w.v, MPFR_RNDU);
}

double Real::error_log10() const
{
    TempMpfr w(m_bits);
    mpfr_sub(w.v, m_hi, m_lo, MPFR_RNDU);
    mpfr_div_2ui(w.v, w.v, 1, MPFR_RNDU);
    if (mpfr_zero_p(w.v)) return -std::numeric_limits<double>::infinity();
    mpfr_log10(w.v, w.v, MPFR_RNDU);
    return mpfr_get_d(w.v, MPFR_RNDU);
}

double Real::magnitude() const
{
    TempMpfr a(m_bits);
    abs_upper(a.v, *this);
    return mpfr_get_d(a.v, MPFR_RNDU);
}

double Real::to_double() const
{
    return mpfr_get_d(midpoint().m_lo, MPFR_RNDN);
}

std::string Real::str(int digits) const
{
    const Real m = midpoint();
    return format("%.*Re", std::max(digits - 1, 0), m.m_lo);
}

std::string Real::abs_bound_str() const
{
    TempMpfr a(m_bits);
    abs_upper(a.v, *this);
    if (mpfr_zero_p(a.v)) return "0";
    return format("%.1Re", -1, a.v);
}

Real Real::operator-() const
{
    Real r(m_bits, Real::Uninit{});
    mpfr_neg(r.m_lo, m_hi, MPFR_RNDD);
    mpfr_neg(r.m_hi, m_lo, MPFR_RNDU);
    return r;
}

Real &Real::operator+=(const Real &o)
{
    if (o.m_bits > m_bits) {
        mpfr_prec_round(m_lo, o.m_bits, MPFR_RNDD);
        mpfr_prec_round(m_hi, o.m_bits, MPFR_RNDU);
        m_bits = o.m_bits;
    }
    mpfr_add(m_lo, m_lo, o.m_lo, MPFR_RNDD);
    mpfr_add(m_hi, m_hi, o.m_hi, MPFR_RNDU);
    return *this;
}

Real &Real::operator-=(const Real &o)
{
    return *this += -o;
}

Real &Real::operator*=(const Real &o)
{
    const mpfr_prec_t bits = std::max(m_bits, o.m_bits);
    Real r(bits, Real::Uninit{});
    TempMpfr t(bits);
    mpfr_srcptr a[2] = {m_lo, m_hi};
    mpfr_srcptr b[2] = {o.m_lo, o.m_hi};
    mpfr_mul(r.m_lo, a[0], b[0], MPFR_RNDD);
    mpfr_mul(r.m_hi, a[0], b[0], MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;
            mpfr_mul(t.v, a[i], b[j], MPFR_RNDD);
            mpfr_min(r.m_lo, r.m_lo, t.v, MPFR_RNDD);
            mpfr_mul(t.v, a[i], b[j], MPFR_RNDU);
            mpfr_max(r.m_hi, r.m_hi, t.v, MPFR_RNDU);
        }
    }
    return *this = std::move(r);
}

Real &Real::operator/=(const Real &o)
{
    if (o.contains_zero()) {
        throw std::domain_error("division by an interval containing zero");
    }
    const mpfr_prec_t bits = std::max(m_bits, o.m_bits);
    Real r(bits, Real::Uninit{});
    TempMpfr t(bits);
    mpfr_srcptr a[2] = {m_lo, m_hi};
    mpfr_srcptr b[2] = {o.m_lo, o.m_hi};
    mpfr_div(r.m_lo, a[0], b[0], MPFR_RNDD);
    mpfr_div(r.m_hi, a[0], b[0], MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;
            mpfr_div(t.v, a[i], b[j], MPFR_RNDD);
            mpfr_min(r.m_lo, r.m_lo, t.v, MPFR_RNDD);
            mpfr_div(t.v, a[i], b[j], MPFR_RNDU);
            mpfr_max(r.m_hi, r.m_hi, t.v, MPFR_RNDU);
        }
    }
    return *this = std::move(r);
}

Real abs(const Real &x)
{
    if (x.certainly_nonnegative()) return x;
    if (x.certainly_negative()) return -x;
    Real r(x.m_bits, Real::Uninit{});
    mpfr_set_zero(r.m_lo, 1);
    abs_upper(r.m_hi, x);
    return r;
}

Real sqrt(const Real &x)
{
    if (mpfr_sgn(x.m_lo) < 0) {
        throw std::domain_error("sqrt of an interval reaching below zero");
    }
    Real r(x.m_bits, Real::Uninit{});
    mpfr_sqrt(r.m_lo, x.m_lo, MPFR_RNDD);
    mpfr_sqrt(r.m_hi, x.m_hi, MPFR_RNDU);
    return r;
}

Real sqrt_nonneg(const Real &x)
{
    if (x.certainly_negative()) {
        throw std::domain_error("sqrt_nonneg of a negative interval");
    }
    Real c = x;
    if (mpfr_sgn(c.m_lo) < 0) mpfr_set_zero(c.m_lo, 1);
    return sqrt(c);
}

Real cbrt(const Real &x)
{
    Real r(x.m_bits, Real::Uninit{});
    mpfr_cbrt(r.m_lo, x.m_lo, MPFR_RNDD);
    mpfr_cbrt(r.m_hi, x.m_hi, MPFR_RNDU);
    return r;
}

Real rootn(const Real &x, unsigned long n)
{
    if (n == 0) throw std::domain_error("zeroth root");
    if (n % 2 == 0 && mpfr_sgn(x.m_lo) < 0) {
        throw std::domain_error("even root of an interval reaching below zero");
    }
    Real r(x.m_bits, Real::Uninit{});
    mpfr_rootn_ui(r.m_lo, x.m_lo, n, MPFR_RNDD);
    mpfr_rootn_ui(r.m_hi, x.m_hi, n, MPFR_RNDU);
    return r;
}

Real pow(const Real &x, long n)
{
    if (n < 0) return Real(1, x.m_bits) / pow(x, -n);
    if (n == 0) return Real(1, x.m_bits);
    const auto un = static_cast<unsigned long>(n);
    Real r(x.m_bits, Real::Uninit{});
    if (n % 2 == 1 || x.certainly_nonnegative()) {
        mpfr_pow_ui(r.m_lo, x.m_lo, un, MPFR_RNDD);
        mpfr_pow_ui(r.m_hi, x.m_hi, un, MPFR_RNDU);
    } else if (x.certainly_negative()) {
        mpfr_pow_ui(r.m_lo, x.m_hi, un, MPFR_RNDD);
        mpfr_pow_ui(r.m_hi, x.m_lo, un, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.m_lo, 1);
        abs_upper(r.m_hi, x);
        mpfr_pow_ui(r.m_hi, r.m_hi, un, MPFR_RNDU);
    }
    return r;
}

Real exp(const Real &x)
{
    Real r(x.m_bits, Real::Uninit{});
    mpfr_exp(r.m_lo, x.m_lo, MPFR_RNDD);
    mpfr_exp(r.m_hi, x.m_hi, MPFR_RNDU);
    return r;
}

Real log(const Real &x)
{
    if (!x.certainly_positive()) {
        throw std::domain_error("log of an interval reaching zero");
    }
    Real r(x.m_bits, Real::Uninit{});
    mpfr_log(r.m_lo, x.m_lo, MPFR_RNDD);
    mpfr_log(r.m_hi, x.m_hi, MPFR_RNDU);
    return r;
}

namespace
{

using TrigFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// cos and sin are 1-Lipschitz: evaluate at the midpoint and widen by the radius.
void lipschitz_trig(mpfr_ptr lo, mpfr_ptr hi, const Real &x, TrigFn f)
{
    const mpfr_prec_t bits = x.bits();
    TempMpfr m(bits);
    TempMpfr rad(bits);
    TempMpfr t(bits);
    mpfr_add(m.v, x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
    mpfr_sub(rad.v, x.hi(), m.v, MPFR_RNDU);
    mpfr_sub(t.v, m.v, x.lo(), MPFR_RNDU);
    mpfr_max(rad.v, rad.v, t.v, MPFR_RNDU);

    f(lo, m.v, MPFR_RNDD);
    f(hi, m.v, MPFR_RNDU);
    mpfr_sub(lo, lo, rad.v, MPFR_RNDD);
    mpfr_add(hi, hi, rad.v, MPFR_RNDU);
    if (mpfr_cmp_si(lo, -1) < 0) mpfr_set_si(lo, -1, MPFR_RNDD);
    if (mpfr_cmp_si(hi, 1) > 0) mpfr_set_si(hi, 1, MPFR_RNDU);
}

} // namespace

Real cos(const Real &x)
{
    Real r(x.m_bits, Real::Uninit{});
    lipschitz_trig(r.m_lo, r.m_hi, x, mpfr_cos);
    return r;
}

Real sin(const Real &x)
{
    Real r(x.m_bits, Real::Uninit{});
    lipschitz_trig(r.m_lo, r.m_hi, x, mpfr_sin);
    return r;
}

Real acos(const Real &x)
{
    // Callers only pass enclosures of values known to lie in [-1, 1]; clip
    // the rounding overshoot.
    Real c = x;
    if (mpfr_cmp_si(c.m_lo, -1) < 0) mpfr_set_si(c.m_lo, -1, MPFR_RNDD);
    if (mpfr_cmp_si(c.m_hi, 1) > 0) mpfr_set_si(c.m_hi, 1, MPFR_RNDU);
    if (mpfr_greater_p(c.m_lo, c.m_hi)) {
        throw std::domain_error("acos of an interval outside [-1, 1]");
    }
    Real r(x.m_bits, Real::Uninit{});
    mpfr_acos(r.m_lo, c.m_hi, MPFR_RNDD);
    mpfr_acos(r.m_hi, c.m_lo, MPFR_RNDU);
    return r;
}

Real intersect(const Real &a, const Real &b)
{
    Real r(std::max(a.m_bits, b.m_bits), Real::Uninit{});
    mpfr_max(r.m_lo, a.m_lo, b.m_lo, MPFR_RNDD);
    mpfr_min(r.m_hi, a.m_hi, b.m_hi, MPFR_RNDU);
    if (mpfr_greater_p(r.m_lo, r.m_hi)) {
        throw std::logic_error("disjoint enclosures of the same value");
    }
    return r;
}

Real pow(const Real &x, const mpq_class &e)
{
    if (!e.get_den().fits_ulong_p() || !e.get_num().fits_slong_p()) {
        throw std::domain_error("exponent too large");
    }
    const long num = e.get_num().get_si();
    const unsigned long den = e.get_den().get_ui();
    if (den == 1) return pow(x, num);
    return pow(rootn(x, den), num);
}

bool abs_below(const Real &x, int digits)
{
    TempMpfr ub(x.bits());
    TempMpfr t(x.bits());
    abs_upper(ub.v, x);
    mpfr_set_ui(t.v, 10, MPFR_RNDD);
    mpfr_pow_si(t.v, t.v, -digits, MPFR_RNDD);
    return mpfr_less_p(ub.v, t.v) != 0;
}

bool abs_at_least(const Real &x, int digits)
{
    if (x.contains_zero()) return false;
    TempMpfr lb(x.bits());
    TempMpfr t(x.bits());
    TempMpfr a(x.bits());
    mpfr_abs(lb.v, x.lo(), MPFR_RNDD);
    mpfr_abs(a.v, x.hi(), MPFR_RNDD);
    mpfr_min(lb.v, lb.v, a.v, MPFR_RNDD);
    mpfr_set_ui(t.v, 10, MPFR_RNDU);
    mpfr_pow_si(t.v, t.v, -digits, MPFR_RNDU);
    return mpfr_greaterequal_p(lb.v, t.v) != 0;
}

} // namespace ntheta
