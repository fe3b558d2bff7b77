#include "riordan/sequences.hpp"

namespace riordan {

ASequence a_from_g(const RationalSeries &g)
{
    if (g[0].is_zero())
        throw precondition_error("A-sequence needs g_0 != 0");
    const auto a = compose(g, reversion(mul_x(g)));
    return ASequence(std::vector<Rational>(a.coefficients().begin(), a.coefficients().end()));
}

RationalSeries fixed_point_a(const ASequence &a, int order, int steps)
{
    if (a[0].is_zero())
        throw precondition_error("A-sequence needs a_0 != 0");
    const auto gf = a.generating_function(order);
    auto g = RationalSeries::constant(a[0], order);
    for (int k = 0; k < steps; ++k)
        g = compose(gf, mul_x(g));
    return g;
}

RationalSeries g_from_a(const ASequence &a, int order) { return fixed_point_a(a, order, order); }

BSequence b_from_g(const RationalSeries &g)
{
    if (g[0] != Rational(1))
        throw precondition_error("B-sequence extraction assumes g_0 = 1");
    if (!is_pseudo_involution(g))
        throw no_b_sequence("no B-sequence: not a pseudo-involution");

    const int n = g.order();
    if (n == 0)
        return BSequence();
    auto residual = div_x(g - RationalSeries::one(n)) * mul_inverse(g);
    const auto u = mul_x(g, 2);
    auto u_power = RationalSeries::one(residual.order());

    std::vector<Rational> b;
    for (int i = 0; 2 * i <= residual.order(); ++i) {
        const Rational bi = residual[2 * i];
        b.push_back(bi);
        if (!bi.is_zero())
            residual = residual - bi * u_power;
        if (2 * i + 1 <= residual.order() && !residual[2 * i + 1].is_zero())
            throw no_b_sequence("no B-sequence: odd residual coefficient at x^" +
                                std::to_string(2 * i + 1));
        u_power = u_power * u;
    }
    if (!residual.is_zero())
        throw no_b_sequence("no B-sequence: residual does not vanish");
    return BSequence(std::move(b));
}

RationalSeries fixed_point_b(const BSequence &b, int order, int steps)
{
    const auto gf = b.generating_function(order);
    const auto one = RationalSeries::one(order);
    auto g = one;
    for (int k = 0; k < steps; ++k)
        g = one + mul_x(g) * compose(gf, mul_x(g, 2));
    return g;
}

RationalSeries g_from_b(const BSequence &b, int order) { return fixed_point_b(b, order, order); }

bool verify_a_recurrence(const RiordanArray &r, const ASequence &a)
{
    const int order = r.order();
    for (int n = 0; n < order; ++n)
        for (int m = 0; m <= n; ++m) {
            Rational rhs(0);
            for (int i = 0; m + i <= n; ++i)
                rhs += a[static_cast<std::size_t>(i)] * r.entry(n, m + i);
            if (r.entry(n + 1, m + 1) != rhs)
                return false;
        }
    return true;
}

bool verify_b_recurrence(const RiordanArray &r, const BSequence &b)
{
    const int order = r.order();
    const auto column_minus_one = r.f().truncated(order) * mul_inverse(r.g().truncated(order));
    for (int n = 0; n < order; ++n)
        for (int m = 0; m <= n + 1; ++m) {
            Rational rhs = m == 0 ? column_minus_one[n + 1] : r.entry(n, m - 1);
            for (int i = 0; m + i <= n - i; ++i)
                rhs += b[static_cast<std::size_t>(i)] * r.entry(n - i, m + i);
            if (r.entry(n + 1, m) != rhs)
                return false;
        }
    return true;
}

Factorization factorize(const RationalSeries &g)
{
    if (g[0] != Rational(1))
        throw precondition_error("factorization assumes g_0 = 1");
    if (!is_pseudo_involution(g))
        throw precondition_error("factorization needs a pseudo-involution");
    auto sqrt_g = sqrt1(g);
    auto h = compose(sqrt_g, reversion(mul_x(sqrt_g)));
    auto s = Rational(1, 2) * (h - mul_inverse(h));
    return {std::move(sqrt_g), std::move(h), std::move(s)};
}

BSequence b_from_factorization(const Factorization &f)
{
    const auto &s = f.s;
    std::vector<Rational> b;
    for (int i = 0; i <= s.order(); ++i) {
        if (i % 2 == 0) {
            if (!s[i].is_zero())
                throw precondition_error("s has a nonzero even coefficient at x^" +
                                         std::to_string(i));
            continue;
        }
        b.push_back(Rational(2) * s[i]);
    }
    return BSequence(std::move(b));
}

} // namespace riordan
