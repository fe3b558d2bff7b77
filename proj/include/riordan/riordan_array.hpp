#pragma once

#include <memory>

#include "riordan/eigen_support.hpp"
#include "riordan/mupoly.hpp"
#include "riordan/series.hpp"

namespace riordan {

namespace detail {
struct ColumnCache;
}

/// The lower-triangular matrix (f(x), x g(x)): column m has generating function f (x g)^m.
///
/// Stored in the (f, xg) convention with f_0 != 0 and g_0 != 0. Entries are computed
/// lazily column by column and memoized; copies share the (immutable-input) cache.
class RiordanArray {
public:
    /// (f(x), x g(x)); requires f_0 != 0 and g_0 != 0.
    RiordanArray(RationalSeries f, RationalSeries g);

    /// (f(x), G(x)) in the raw convention, G = x g with G_0 = 0 and G_1 != 0.
    static RiordanArray from_raw(const RationalSeries &f, const RationalSeries &big_g);

    /// (f(x), x g(x)) without the g_0 != 0 requirement. Such arrays still act on
    /// series and have entries, but are not Riordan-group elements.
    static RiordanArray with_degenerate_g(RationalSeries f, RationalSeries g);

    static RiordanArray identity(int order);

    const RationalSeries &f() const { return f_; }
    const RationalSeries &g() const { return g_; }
    int order() const { return order_; }
    bool is_proper() const { return !g_[0].is_zero(); }

    /// d_{n,m} = [x^n] f (x g)^m
    Rational entry(int n, int m) const;
    /// Generating function f (x g)^m of column m, to order().
    RationalSeries column(int m) const;
    /// sum_m d_{n,m} mu^m
    MuPoly row_poly(int n) const;
    /// The leading (size x size) block as a dense matrix, size <= order() + 1.
    RationalMatrix dense(int size) const;

    /// f(x) a(x g(x))
    RationalSeries apply(const RationalSeries &a) const;

    friend bool operator==(const RiordanArray &a, const RiordanArray &b)
    {
        return a.f_ == b.f_ && a.g_ == b.g_;
    }

private:
    struct unchecked_tag {};
    RiordanArray(RationalSeries f, RationalSeries g, unchecked_tag);

    RationalSeries f_;
    RationalSeries g_;
    int order_;
    std::shared_ptr<detail::ColumnCache> cache_;
};

/// Matrix product, (f1 f2(x g1), x g1 g2(x g1)).
RiordanArray multiply(const RiordanArray &a, const RiordanArray &b);
RiordanArray operator*(const RiordanArray &a, const RiordanArray &b);

/// Group inverse: (1 / f(v), v) with v = reversion(x g).
RiordanArray inverse(const RiordanArray &r);

/// True iff reversion(x g) = x g(-x) to the known order; g_0 must be 1.
bool is_pseudo_involution(const RationalSeries &g);

} // namespace riordan
