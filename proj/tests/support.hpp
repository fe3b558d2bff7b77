#pragma once

// Independent reference computations for the test suites. Everything here works
// on plain coefficient vectors so that it shares no code path with the library's
// Series type beyond Rational arithmetic itself.

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan::testing {

using Coeffs = std::vector<Rational>;

inline Rational at(const Coeffs &c, int i)
{
    return i >= 0 && i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : Rational(0);
}

inline Coeffs naive_mul(const Coeffs &a, const Coeffs &b, int order)
{
    Coeffs out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            out[static_cast<std::size_t>(i + j)] += at(a, i) * at(b, j);
    return out;
}

inline Coeffs naive_inverse(const Coeffs &a, int order)
{
    Coeffs out(static_cast<std::size_t>(order) + 1);
    out[0] = Rational(1) / at(a, 0);
    for (int n = 1; n <= order; ++n) {
        Rational s;
        for (int k = 1; k <= n; ++k)
            s += at(a, k) * out[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = -s * out[0];
    }
    return out;
}

inline Coeffs naive_pow(const Coeffs &a, int m, int order)
{
    Coeffs base = m < 0 ? naive_inverse(a, order) : a;
    Coeffs out(static_cast<std::size_t>(order) + 1);
    out[0] = Rational(1);
    for (int i = 0; i < (m < 0 ? -m : m); ++i)
        out = naive_mul(out, base, order);
    return out;
}

/// outer(inner(x)) by Horner's rule; inner must have no constant term.
inline Coeffs naive_compose(const Coeffs &outer, const Coeffs &inner, int order)
{
    Coeffs out(static_cast<std::size_t>(order) + 1);
    for (int i = order; i >= 0; --i) {
        out = naive_mul(out, inner, order);
        out[0] += at(outer, i);
    }
    return out;
}

inline Coeffs shift_up(const Coeffs &a, int by, int order)
{
    Coeffs out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i + by <= order; ++i)
        out[static_cast<std::size_t>(i + by)] = at(a, i);
    return out;
}

/// g = 1 + x g B(x^2 g), iterated until every coefficient up to order is settled.
inline Coeffs iterate_b(const Coeffs &b, int order)
{
    Coeffs g{Rational(1)};
    g.resize(static_cast<std::size_t>(order) + 1);
    for (int step = 0; step <= order; ++step) {
        const auto inner = shift_up(g, 2, order);
        auto next = shift_up(naive_mul(g, naive_compose(b, inner, order), order), 1, order);
        next[0] += Rational(1);
        g = next;
    }
    return g;
}

/// g = A(x g), iterated the same way.
inline Coeffs iterate_a(const Coeffs &a, int order)
{
    Coeffs g{Rational(1)};
    g.resize(static_cast<std::size_t>(order) + 1);
    for (int step = 0; step <= order; ++step)
        g = naive_compose(a, shift_up(g, 1, order), order);
    return g;
}

/// Layered recursion for [x^n] g^m of a B-generated g:
///   m >= 1 : g_n^(m) = sum_r b_r sum_{i=r+1}^{m+r} g_{n-1-2r}^(i)
///   m <= 0 : g_n^(m) = g_n^(m+1) - sum_r b_r g_{n-1-2r}^(m+1+r)
class LayeredPowers {
public:
    explicit LayeredPowers(Coeffs b) : b_(std::move(b)) {}

    Rational operator()(int n, int m)
    {
        if (n < 0)
            return Rational(0);
        if (n == 0)
            return Rational(1);
        if (m == 0)
            return Rational(0);
        const auto key = std::make_pair(n, m);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Rational v;
        if (m > 0) {
            for (int r = 0; 2 * r + 1 <= n; ++r) {
                const Rational br = at(b_, r);
                if (br.is_zero())
                    continue;
                for (int i = r + 1; i <= m + r; ++i)
                    v += br * (*this)(n - 1 - 2 * r, i);
            }
        } else {
            v = (*this)(n, m + 1);
            for (int r = 0; 2 * r + 1 <= n; ++r)
                v -= at(b_, r) * (*this)(n - 1 - 2 * r, m + 1 + r);
        }
        memo_.emplace(key, v);
        return v;
    }

private:
    Coeffs b_;
    std::map<std::pair<int, int>, Rational> memo_;
};

/// sqrt(1 + u) = sum C(1/2, k) u^k, for a with a_0 = 1.
inline Coeffs binomial_sqrt(const Coeffs &a, int order)
{
    Coeffs u = a;
    u.resize(static_cast<std::size_t>(order) + 1);
    u[0] = Rational(0);
    Coeffs outer;
    for (int k = 0; k <= order; ++k)
        outer.push_back(binomial(Rational(1, 2), k));
    return naive_compose(outer, u, order);
}

/// Deterministic draws from the small pool {-2, -1, 0, 1, 2, 1/2}.
class Pool {
public:
    explicit Pool(unsigned seed) : rng_(seed) {}

    Rational draw()
    {
        static const Rational values[] = {Rational(-2), Rational(-1), Rational(0),
                                          Rational(1),  Rational(2),  Rational(1, 2)};
        return values[std::uniform_int_distribution<int>(0, 5)(rng_)];
    }

    Coeffs sequence(int min_length, int max_length)
    {
        const int len = std::uniform_int_distribution<int>(min_length, max_length)(rng_);
        Coeffs c;
        for (int i = 0; i < len; ++i)
            c.push_back(draw());
        return c;
    }

    /// A with a_0 = 1 followed by pool entries.
    Coeffs a_sequence(int max_length)
    {
        auto c = sequence(1, max_length - 1);
        c.insert(c.begin(), Rational(1));
        return c;
    }

private:
    std::mt19937 rng_;
};

} // namespace riordan::testing
