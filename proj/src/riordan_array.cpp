#include "riordan/riordan_array.hpp"

#include <mutex>
#include <vector>

namespace riordan {

namespace detail {

struct ColumnCache {
    std::mutex mutex;
    std::vector<RationalSeries> columns;
};

} // namespace detail

RiordanArray::RiordanArray(RationalSeries f, RationalSeries g, unchecked_tag)
    : f_(std::move(f)), g_(std::move(g)), order_(std::min(f_.order(), g_.order())),
      cache_(std::make_shared<detail::ColumnCache>())
{
    if (f_[0].is_zero())
        throw precondition_error("Riordan array needs f_0 != 0");
}

RiordanArray::RiordanArray(RationalSeries f, RationalSeries g)
    : RiordanArray(std::move(f), std::move(g), unchecked_tag{})
{
    if (g_[0].is_zero())
        throw precondition_error("Riordan array needs g_0 != 0");
}

RiordanArray RiordanArray::from_raw(const RationalSeries &f, const RationalSeries &big_g)
{
    if (!big_g[0].is_zero())
        throw precondition_error("raw Riordan pair needs G_0 = 0");
    if (big_g[1].is_zero())
        throw precondition_error("raw Riordan pair needs G_1 != 0");
    return RiordanArray(f, div_x(big_g));
}

RiordanArray RiordanArray::with_degenerate_g(RationalSeries f, RationalSeries g)
{
    return RiordanArray(std::move(f), std::move(g), unchecked_tag{});
}

RiordanArray RiordanArray::identity(int order)
{
    return RiordanArray(RationalSeries::one(order), RationalSeries::one(order));
}

RationalSeries RiordanArray::column(int m) const
{
    if (m < 0 || m > order_)
        throw truncation_error("column " + std::to_string(m) + " beyond array order " +
                               std::to_string(order_));
    std::lock_guard lock(cache_->mutex);
    auto &cols = cache_->columns;
    if (cols.empty())
        cols.push_back(f_.truncated(order_));
    const auto xg = mul_x(g_.truncated(order_));
    while (static_cast<int>(cols.size()) <= m)
        cols.push_back(cols.back() * xg);
    return cols[static_cast<std::size_t>(m)];
}

Rational RiordanArray::entry(int n, int m) const
{
    if (n < 0 || m < 0 || n > order_ || m > order_)
        throw truncation_error("entry (" + std::to_string(n) + ", " + std::to_string(m) +
                               ") beyond array order " + std::to_string(order_));
    if (m > n)
        return Rational(0);
    return column(m)[n];
}

MuPoly RiordanArray::row_poly(int n) const
{
    std::vector<Rational> c;
    for (int m = 0; m <= n; ++m)
        c.push_back(entry(n, m));
    return MuPoly(std::move(c));
}

RationalMatrix RiordanArray::dense(int size) const
{
    if (size > order_ + 1)
        throw truncation_error("dense block larger than the known order");
    RationalMatrix d = RationalMatrix::Zero(size, size);
    for (int m = 0; m < size; ++m)
        for (int n = m; n < size; ++n)
            d(n, m) = entry(n, m);
    return d;
}

RationalSeries RiordanArray::apply(const RationalSeries &a) const
{
    return f_ * compose(a, mul_x(g_));
}

RiordanArray multiply(const RiordanArray &a, const RiordanArray &b)
{
    const auto xg1 = mul_x(a.g());
    auto f = a.f() * compose(b.f(), xg1);
    auto g = a.g() * compose(b.g(), xg1);
    if (a.is_proper() && b.is_proper())
        return RiordanArray(std::move(f), std::move(g));
    return RiordanArray::with_degenerate_g(std::move(f), std::move(g));
}

RiordanArray operator*(const RiordanArray &a, const RiordanArray &b) { return multiply(a, b); }

RiordanArray inverse(const RiordanArray &r)
{
    if (!r.is_proper())
        throw precondition_error("only Riordan-group elements (g_0 != 0) are invertible");
    const auto v = reversion(mul_x(r.g()));
    return RiordanArray(mul_inverse(compose(r.f(), v)), div_x(v));
}

bool is_pseudo_involution(const RationalSeries &g)
{
    if (g[0] != Rational(1))
        throw precondition_error("pseudo-involution test assumes g_0 = 1");
    return reversion(mul_x(g)) == mul_x(subst_neg(g));
}

} // namespace riordan
