#include <ntheta/cubicalg/ordering.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <ntheta/errors.hpp>

namespace ntheta
{

namespace
{

enum class Verdict { holds, fails, undecided };

Verdict positive(const Real &x)
{
    if (x.certainly_positive()) return Verdict::holds;
    if ((-x).certainly_nonnegative()) return Verdict::fails;
    return Verdict::undecided;
}

Verdict both(Verdict a, Verdict b)
{
    if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
    if (a == Verdict::undecided || b == Verdict::undecided) return Verdict::undecided;
    return Verdict::holds;
}

} // namespace

OrderedRootTriple order_roots(const std::array<Real, 3> &roots, const Real &p)
{
    if (!p.certainly_positive()) throw std::invalid_argument("order_roots needs p > 0");
    for (const auto &r : roots) {
        if (!r.certainly_positive()) throw std::invalid_argument("order_roots needs positive roots");
    }

    for (int i = 0; i < 3; ++i) {
        if (roots[i].overlaps(roots[(i + 1) % 3])) throw AmbiguousOrder("two roots cannot be separated at this precision");
    }

    // Walk the permutations of a canonical (ascending) copy so that the
    // outcome is independent of the caller's order.
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return roots[a].to_double() < roots[b].to_double(); });
    const std::array<Real, 3> sorted{roots[idx[0]], roots[idx[1]], roots[idx[2]]};

    std::array<int, 3> perm{0, 1, 2};
    std::optional<OrderedRootTriple> found;
    int rejected = 0;
    do {
        const Real &a = sorted[perm[0]];
        const Real &b = sorted[perm[1]];
        const Real &g = sorted[perm[2]];
        OrderingCertificate cert{(a - b) * (b - g) * (g - a), b / a, g / b, a / g, 0};
        const Verdict v1 = positive(cert.cyclic_product);
        const Verdict v = v1 == Verdict::fails
                              ? Verdict::fails
                              : both(v1, both(positive(cert.beta_over_alpha - cert.gamma_over_beta),
                                              positive(cert.gamma_over_beta - cert.alpha_over_gamma)));
        if (v == Verdict::undecided) {
            throw AmbiguousOrder("root ordering conditions are within the enclosure width");
        }
        if (v == Verdict::fails) {
            ++rejected;
            continue;
        }
        if (found) throw AmbiguousOrder("two root arrangements satisfy the ordering conditions");
        found = OrderedRootTriple{a, b, g, std::move(cert)};
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!found) throw NoValidOrder("no arrangement of the roots satisfies the ordering conditions");
    found->certificate.rejected = rejected;
    return *found;
}

U124 u124_from_roots(const OrderedRootTriple &t, const Real &p)
{
    return {cbrt(t.beta * p / t.alpha), cbrt(t.gamma * p / t.beta), cbrt(t.alpha * p / t.gamma)};
}

} // namespace ntheta
