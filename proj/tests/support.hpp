#ifndef NTHETA_TESTS_SUPPORT_HPP
#define NTHETA_TESTS_SUPPORT_HPP

#include <string>

#include <ntheta/numeric/real.hpp>

namespace ntheta::test
{

/// |x - literal| < 10^-digits, with the literal widened by its last digit.
inline bool agrees(const Real &x, const std::string &literal, int digits)
{
    return abs_below(x - Real::from_decimal_literal(literal, x.bits()), digits);
}

inline Real num(long v, const Precision &p)
{
    return Real(v, p.bits());
}

} // namespace ntheta::test

#endif
