#ifndef NTHETA_PUISEUX_KERNELS_HPP
#define NTHETA_PUISEUX_KERNELS_HPP

#include <cstddef>
#include <optional>

#include <ntheta/puiseux/qseries.hpp>

// Cauchy-product kernels behind qs_mul. Both produce the same coefficients
// for exponents strictly below `order` (all exponents when `order` is empty).
namespace ntheta::kernels
{

// Reference implementation: nested loop over the two term maps.
QSeries::Terms mul_serial(const QSeries::Terms &a, const QSeries::Terms &b, const std::optional<Exponent> &order);

// Lays both operands on a common 1/D grid and computes each output
// coefficient independently across OpenMP threads.
QSeries::Terms mul_parallel(const QSeries::Terms &a, const QSeries::Terms &b, const std::optional<Exponent> &order);

// Operand size product above which qs_mul dispatches to mul_parallel.
inline constexpr std::size_t parallel_threshold = 4096;

} // namespace ntheta::kernels

#endif
