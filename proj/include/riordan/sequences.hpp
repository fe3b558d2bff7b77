#pragma once

#include <initializer_list>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"

namespace riordan {

namespace detail {

/// Coefficient list read as a polynomial: zero past the stored entries.
struct CoefficientSequence {
    CoefficientSequence() = default;
    explicit CoefficientSequence(std::vector<Rational> c) : coefficients(std::move(c)) {}
    CoefficientSequence(std::initializer_list<Rational> c) : coefficients(c) {}

    Rational operator[](std::size_t i) const
    {
        return i < coefficients.size() ? coefficients[i] : Rational(0);
    }
    std::size_t size() const { return coefficients.size(); }
    /// Generating function, zero-padded to the given order.
    RationalSeries generating_function(int order) const
    {
        return RationalSeries::polynomial(std::span<const Rational>(coefficients), order);
    }

    friend bool operator==(const CoefficientSequence &, const CoefficientSequence &) = default;

    std::vector<Rational> coefficients;
};

} // namespace detail

/// a_0, a_1, ... with g(x) = A(x g(x)).
struct ASequence : detail::CoefficientSequence {
    using CoefficientSequence::CoefficientSequence;
};

/// b_0, b_1, ... with g(x) = 1 + x g(x) B(x^2 g(x)).
struct BSequence : detail::CoefficientSequence {
    using CoefficientSequence::CoefficientSequence;
};

/// (1, x g) = (1, x sqrt(g)) (1, x h) with h(-x) h(x) = 1 and s = (h - 1/h) / 2 odd.
struct Factorization {
    RationalSeries sqrt_g;
    RationalSeries h;
    RationalSeries s;
};

/// A = g o reversion(x g), known to the order of g.
ASequence a_from_g(const RationalSeries &g);

/// Solution of g = A(x g) to the given order.
RationalSeries g_from_a(const ASequence &a, int order);
/// The k-th iterate of g <- A(x g) started from a_0; coefficient n is final after n steps.
RationalSeries fixed_point_a(const ASequence &a, int order, int steps);

/// Triangular solve of (g - 1) / (x g) = B(x^2 g). Stores b_0..b_{floor((N-1)/2)}.
/// Throws no_b_sequence when g is not a pseudo-involution.
BSequence b_from_g(const RationalSeries &g);

/// Solution of g = 1 + x g B(x^2 g) to the given order.
RationalSeries g_from_b(const BSequence &b, int order);
/// The k-th iterate of g <- 1 + x g B(x^2 g) started from 1.
RationalSeries fixed_point_b(const BSequence &b, int order, int steps);

/// d_{n+1,m+1} = sum_i a_i d_{n,m+i} for every entry within the array order.
bool verify_a_recurrence(const RiordanArray &r, const ASequence &a);

/// d_{n+1,m} = d_{n,m-1} + sum_i b_i d_{n-i,m+i} for every entry within the array order.
/// Column -1 is the power-series part of f / (x g), so d_{n,-1} = [x^{n+1}] f / g;
/// it vanishes whenever f is a multiple of g, as for the Pascal array.
bool verify_b_recurrence(const RiordanArray &r, const BSequence &b);

Factorization factorize(const RationalSeries &g);

/// b_n = 2 s_{2n+1}.
BSequence b_from_factorization(const Factorization &f);

} // namespace riordan
