#include <ntheta/puiseux/kernels.hpp>

#include <algorithm>
#include <vector>

namespace ntheta::kernels
{

QSeries::Terms mul_serial(const QSeries::Terms &a, const QSeries::Terms &b, const std::optional<Exponent> &order)
{
    QSeries::Terms out;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            const Exponent e = ea + eb;
            // b is sorted, so every later eb overshoots as well.
            if (order && e >= *order) break;
            out[e] += ca * cb;
        }
    }
    return out;
}

QSeries::Terms mul_parallel(const QSeries::Terms &a, const QSeries::Terms &b, const std::optional<Exponent> &order)
{
    if (a.empty() || b.empty()) return {};

    std::int64_t den = 1;
    for (const auto &[e, c] : a) den = lcm_den(den, e.den());
    for (const auto &[e, c] : b) den = lcm_den(den, e.den());

    const Exponent a0 = a.begin()->first;
    const Exponent b0 = b.begin()->first;
    const auto index = [den](const Exponent &e, const Exponent &base) {
        const Exponent scaled = (e - base) * Exponent(den);
        return scaled.num();
    };

    std::vector<std::pair<std::int64_t, const mpq_class *>> sparse_a;
    sparse_a.reserve(a.size());
    for (const auto &[e, c] : a) sparse_a.emplace_back(index(e, a0), &c);

    const std::int64_t b_len = index(b.rbegin()->first, b0) + 1;
    std::vector<const mpq_class *> dense_b(static_cast<std::size_t>(b_len), nullptr);
    for (const auto &[e, c] : b) dense_b[static_cast<std::size_t>(index(e, b0))] = &c;

    std::int64_t out_len = sparse_a.back().first + b_len;
    if (order) {
        // Output index k sits at exponent a0 + b0 + k/den; keep k/den < order - a0 - b0.
        const Exponent room = (*order - a0 - b0) * Exponent(den);
        const std::int64_t limit = room.is_integer() ? room.num() : room.floor() + 1;
        out_len = std::min(out_len, std::max<std::int64_t>(limit, 0));
    }

    std::vector<mpq_class> out(static_cast<std::size_t>(out_len));

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < out_len; ++k) {
        mpq_class acc;
        for (const auto &[i, ca] : sparse_a) {
            if (i > k) break;
            const std::int64_t j = k - i;
            if (j >= b_len) continue;
            if (const mpq_class *cb = dense_b[static_cast<std::size_t>(j)]) acc += *ca * *cb;
        }
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }

    QSeries::Terms result;
    for (std::int64_t k = 0; k < out_len; ++k) {
        if (sgn(out[static_cast<std::size_t>(k)]) != 0) {
            result.emplace_hint(result.end(), a0 + b0 + Exponent(k, den), std::move(out[static_cast<std::size_t>(k)]));
        }
    }
    return result;
}

} // namespace ntheta::kernels
