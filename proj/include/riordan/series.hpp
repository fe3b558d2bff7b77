#pragma once

#include <algorithm>
#include <concepts>
#include <ostream>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/mupoly.hpp"
#include "riordan/rational.hpp"

namespace riordan {

template <class R>
concept CoefficientRing = std::same_as<R, Rational> || std::same_as<R, MuPoly>;

inline Rational ring_inverse(const Rational &a)
{
    if (a.is_zero())
        throw precondition_error("zero is not invertible");
    return Rational(1) / a;
}

inline MuPoly ring_inverse(const MuPoly &a)
{
    if (a.is_zero() || !a.is_constant())
        throw precondition_error("polynomial " + a.str() + " is not invertible");
    return MuPoly(Rational(1) / a[0]);
}

/// Truncated formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// The order N is part of the value: coefficients past it are unknown, and
/// asking for one is a truncation_error rather than an implicit zero.
template <CoefficientRing Ring>
class Series {
public:
    using ring_type = Ring;

    /// Coefficients c_0..c_N; the order is their count minus one.
    explicit Series(std::vector<Ring> coefficients) : c_(std::move(coefficients))
    {
        if (c_.empty())
            throw precondition_error("a series needs at least its constant term");
    }

    static Series zero(int order) { return Series(std::vector<Ring>(checked(order) + 1)); }
    static Series constant(const Ring &c, int order)
    {
        std::vector<Ring> v(checked(order) + 1);
        v[0] = c;
        return Series(std::move(v));
    }
    static Series one(int order) { return constant(Ring(1), order); }
    /// The series x.
    static Series identity(int order) { return monomial(Ring(1), 1, order); }
    static Series monomial(const Ring &c, int power, int order)
    {
        std::vector<Ring> v(checked(order) + 1);
        if (power <= order)
            v[static_cast<std::size_t>(power)] = c;
        return Series(std::move(v));
    }
    /// An exact polynomial, zero-padded (or cut) to the requested order.
    static Series polynomial(std::span<const Ring> coefficients, int order)
    {
        std::vector<Ring> v(checked(order) + 1);
        for (std::size_t i = 0; i < v.size() && i < coefficients.size(); ++i)
            v[i] = coefficients[i];
        return Series(std::move(v));
    }
    static Series polynomial(std::initializer_list<Ring> coefficients, int order)
    {
        return polynomial(std::span<const Ring>(coefficients.begin(), coefficients.size()), order);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Ring &operator[](int n) const
    {
        if (n < 0 || n > order())
            throw truncation_error("coefficient " + std::to_string(n) +
                                   " requested from a series known to order " +
                                   std::to_string(order()));
        return c_[static_cast<std::size_t>(n)];
    }

    std::span<const Ring> coefficients() const { return c_; }

    Series truncated(int new_order) const
    {
        if (new_order > order())
            throw truncation_error("cannot raise the order of a series from " +
                                   std::to_string(order()) + " to " + std::to_string(new_order));
        return Series(std::vector<Ring>(c_.begin(), c_.begin() + checked(new_order) + 1));
    }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Ring &c) { return c.is_zero(); });
    }

    /// Index of the first nonzero coefficient, or order() + 1 if none is known.
    int valuation() const
    {
        for (int i = 0; i <= order(); ++i)
            if (!c_[static_cast<std::size_t>(i)].is_zero())
                return i;
        return order() + 1;
    }

    /// Coefficientwise up to the smaller of the two orders.
    friend bool operator==(const Series &a, const Series &b)
    {
        const int n = std::min(a.order(), b.order());
        return std::equal(a.c_.begin(), a.c_.begin() + n + 1, b.c_.begin());
    }

private:
    static std::size_t checked(int order)
    {
        if (order < 0)
            throw precondition_error("negative truncation order");
        return static_cast<std::size_t>(order);
    }

    std::vector<Ring> c_;
};

using RationalSeries = Series<Rational>;
using MuSeries = Series<MuPoly>;

namespace detail {

template <class Ring>
std::vector<Ring> mul_truncated(std::span<const Ring> a, std::span<const Ring> b, int order)
{
    std::vector<Ring> r(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        const Ring &ai = a[static_cast<std::size_t>(i)];
        if (ai.is_zero())
            continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            r[static_cast<std::size_t>(i + j)] += ai * b[static_cast<std::size_t>(j)];
    }
    return r;
}

} // namespace detail

template <CoefficientRing Ring>
Series<Ring> operator+(const Series<Ring> &a, const Series<Ring> &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Ring> r(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        r[static_cast<std::size_t>(i)] = a[i] + b[i];
    return Series<Ring>(std::move(r));
}

template <CoefficientRing Ring>
Series<Ring> operator-(const Series<Ring> &a)
{
    std::vector<Ring> r(a.coefficients().begin(), a.coefficients().end());
    for (auto &c : r)
        c = -c;
    return Series<Ring>(std::move(r));
}

template <CoefficientRing Ring>
Series<Ring> operator-(const Series<Ring> &a, const Series<Ring> &b)
{
    return a + (-b);
}

template <CoefficientRing Ring>
Series<Ring> operator*(const Series<Ring> &a, const Series<Ring> &b)
{
    const int n = std::min(a.order(), b.order());
    return Series<Ring>(detail::mul_truncated(a.coefficients(), b.coefficients(), n));
}

template <CoefficientRing Ring>
Series<Ring> operator*(const Ring &c, const Series<Ring> &a)
{
    std::vector<Ring> r(a.coefficients().begin(), a.coefficients().end());
    for (auto &x : r)
        x = c * x;
    return Series<Ring>(std::move(r));
}

inline MuSeries operator*(const Rational &c, const MuSeries &a) { return MuPoly(c) * a; }

template <CoefficientRing Ring>
Series<Ring> scale(const Series<Ring> &a, const Ring &c)
{
    return c * a;
}

/// x * a; the order grows by one since the shifted-in constant is exact.
template <CoefficientRing Ring>
Series<Ring> mul_x(const Series<Ring> &a, int times = 1)
{
    std::vector<Ring> r(static_cast<std::size_t>(times));
    r.insert(r.end(), a.coefficients().begin(), a.coefficients().end());
    return Series<Ring>(std::move(r));
}

/// a / x for a with a_0 = 0; the order drops by one.
template <CoefficientRing Ring>
Series<Ring> div_x(const Series<Ring> &a, int times = 1)
{
    if (a.order() < times)
        throw truncation_error("division by x^" + std::to_string(times) +
                               " leaves no known coefficients");
    for (int i = 0; i < times; ++i)
        if (!a[i].is_zero())
            throw precondition_error("division by x of a series with nonzero low coefficients");
    return Series<Ring>(std::vector<Ring>(a.coefficients().begin() + times, a.coefficients().end()));
}

/// c_n -> (-1)^n c_n, i.e. a(-x).
template <CoefficientRing Ring>
Series<Ring> subst_neg(const Series<Ring> &a)
{
    std::vector<Ring> r(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t i = 1; i < r.size(); i += 2)
        r[i] = -r[i];
    return Series<Ring>(std::move(r));
}

/// a(u(x)) for u_0 = 0.
///
/// The result is known to min(order u, v*(order a + 1) - 1) where v is the
/// valuation of u: terms a_j u^j with j past the order of a start at x^{v(j)}.
template <CoefficientRing Ring>
Series<Ring> compose(const Series<Ring> &a, const Series<Ring> &u)
{
    if (!u[0].is_zero())
        throw precondition_error("compose: inner series must have zero constant term");
    const int v = u.valuation();
    int out = u.order();
    if (v <= u.order())
        out = std::min(out, v * (a.order() + 1) - 1);
    const int top = v <= u.order() ? std::min(a.order(), out / v) : 0;

    const auto inner = u.truncated(out);
    auto r = Series<Ring>::constant(a[top], out);
    for (int j = top - 1; j >= 0; --j) {
        r = r * inner;
        std::vector<Ring> c(r.coefficients().begin(), r.coefficients().end());
        c[0] += a[j];
        r = Series<Ring>(std::move(c));
    }
    return r;
}

/// Multiplicative inverse; needs an invertible constant term.
template <CoefficientRing Ring>
Series<Ring> mul_inverse(const Series<Ring> &a)
{
    const Ring inv0 = ring_inverse(a[0]);
    const int n = a.order();
    std::vector<Ring> b(static_cast<std::size_t>(n) + 1);
    b[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Ring s;
        for (int j = 1; j <= k; ++j)
            if (!a[j].is_zero())
                s += a[j] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -(inv0 * s);
    }
    return Series<Ring>(std::move(b));
}

/// Compositional inverse v of u (u_0 = 0, u_1 invertible): u(v(x)) = x = v(u(x)).
///
/// Coefficient n of v is solved from [x^n] u(v) = 0 using v_1..v_{n-1} only,
/// since v_n enters [x^n] u(v) solely through the linear term u_1 v_n.
template <CoefficientRing Ring>
Series<Ring> reversion(const Series<Ring> &u)
{
    if (!u[0].is_zero())
        throw precondition_error("reversion: constant term must be zero");
    if (u.order() < 1 || u[1].is_zero())
        throw precondition_error("reversion: linear coefficient must be nonzero");
    const int n = u.order();
    const Ring inv1 = ring_inverse(u[1]);
    std::vector<Ring> v(static_cast<std::size_t>(n) + 1);
    v[1] = inv1;
    for (int k = 2; k <= n; ++k) {
        const std::span<const Ring> known(v.data(), static_cast<std::size_t>(k));
        std::vector<Ring> power(known.begin(), known.end());
        Ring s;
        for (int j = 2; j <= k; ++j) {
            power = detail::mul_truncated<Ring>(power, known, k);
            if (!u[j].is_zero())
                s += u[j] * power[static_cast<std::size_t>(k)];
        }
        v[static_cast<std::size_t>(k)] = -(inv1 * s);
    }
    return Series<Ring>(std::move(v));
}

/// Square root with constant term 1 of a series with a_0 = 1.
template <CoefficientRing Ring>
Series<Ring> sqrt1(const Series<Ring> &a)
{
    if (a[0] != Ring(1))
        throw precondition_error("sqrt1: constant term must be 1");
    const int n = a.order();
    std::vector<Ring> r(static_cast<std::size_t>(n) + 1);
    r[0] = Ring(1);
    for (int k = 1; k <= n; ++k) {
        Ring s = a[k];
        for (int j = 1; j < k; ++j)
            s -= r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = s / Rational(2);
    }
    return Series<Ring>(std::move(r));
}

/// log a for a_0 = 1, from n l_n = n a_n - sum_{k<n} k l_k a_{n-k}.
template <CoefficientRing Ring>
Series<Ring> log1(const Series<Ring> &a)
{
    if (a[0] != Ring(1))
        throw precondition_error("log1: constant term must be 1");
    const int n = a.order();
    std::vector<Ring> l(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Ring s = Rational(k) * a[k];
        for (int j = 1; j < k; ++j)
            if (!a[k - j].is_zero())
                s -= Rational(j) * l[static_cast<std::size_t>(j)] * a[k - j];
        l[static_cast<std::size_t>(k)] = s / Rational(k);
    }
    return Series<Ring>(std::move(l));
}

/// exp a for a_0 = 0, from n e_n = sum_{k=1}^n k a_k e_{n-k}.
template <CoefficientRing Ring>
Series<Ring> exp0(const Series<Ring> &a)
{
    if (!a[0].is_zero())
        throw precondition_error("exp0: constant term must be 0");
    const int n = a.order();
    std::vector<Ring> e(static_cast<std::size_t>(n) + 1);
    e[0] = Ring(1);
    for (int k = 1; k <= n; ++k) {
        Ring s;
        for (int j = 1; j <= k; ++j)
            if (!a[j].is_zero())
                s += Rational(j) * a[j] * e[static_cast<std::size_t>(k - j)];
        e[static_cast<std::size_t>(k)] = s / Rational(k);
    }
    return Series<Ring>(std::move(e));
}

/// Integer power; negative exponents need an invertible constant term.
template <CoefficientRing Ring>
Series<Ring> pow(const Series<Ring> &a, int exponent)
{
    if (exponent < 0)
        return pow(mul_inverse(a), -exponent);
    auto result = Series<Ring>::one(a.order());
    auto base = a;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return result;
}

/// Embeds a rational series into the MuPoly-coefficient ring.
inline MuSeries lift(const RationalSeries &a)
{
    std::vector<MuPoly> r;
    r.reserve(a.coefficients().size());
    for (const auto &c : a.coefficients())
        r.emplace_back(c);
    return MuSeries(std::move(r));
}

/// Substitutes mu = at in every coefficient.
inline RationalSeries evaluate(const MuSeries &a, const Rational &at)
{
    std::vector<Rational> r;
    r.reserve(a.coefficients().size());
    for (const auto &c : a.coefficients())
        r.push_back(c(at));
    return RationalSeries(std::move(r));
}

/// a^mu as exp(mu log a); coefficient n is a polynomial in mu of degree <= n.
inline MuSeries pow_symbolic(const RationalSeries &a)
{
    if (a[0] != Rational(1))
        throw precondition_error("symbolic power needs constant term 1");
    return exp0(MuPoly::mu() * lift(log1(a)));
}

template <CoefficientRing Ring>
std::ostream &operator<<(std::ostream &os, const Series<Ring> &a)
{
    for (int i = 0; i <= a.order(); ++i)
        os << (i ? ", " : "") << a[i];
    return os << " + O(x^" << a.order() + 1 << ")";
}

} // namespace riordan
