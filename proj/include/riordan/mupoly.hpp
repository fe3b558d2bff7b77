#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Polynomial in one indeterminate (written m or mu) with exact rational coefficients.
///
/// Coefficients are stored densely, constant term first, and are always trimmed
/// so the leading coefficient is nonzero; the zero polynomial has no coefficients
/// and degree -1.
class MuPoly {
public:
    MuPoly() = default;
    MuPoly(const Rational &constant);
    MuPoly(long constant) : MuPoly(Rational(constant)) {}
    MuPoly(int constant) : MuPoly(Rational(constant)) {}
    explicit MuPoly(std::vector<Rational> coefficients);

    /// The indeterminate itself.
    static MuPoly mu();
    /// offset + slope * mu
    static MuPoly linear(const Rational &offset, const Rational &slope = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of mu^i, zero beyond the degree.
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    std::span<const Rational> coefficients() const { return c_; }

    Rational operator()(const Rational &at) const;
    /// p(q(mu))
    MuPoly compose(const MuPoly &inner) const;
    /// p(mu + by)
    MuPoly shifted(const Rational &by) const;

    MuPoly &operator+=(const MuPoly &o);
    MuPoly &operator-=(const MuPoly &o);
    MuPoly &operator*=(const MuPoly &o);
    MuPoly &operator*=(const Rational &s);
    MuPoly &operator/=(const Rational &s);

    friend MuPoly operator+(MuPoly a, const MuPoly &b) { return a += b; }
    friend MuPoly operator-(MuPoly a, const MuPoly &b) { return a -= b; }
    friend MuPoly operator*(MuPoly a, const MuPoly &b) { return a *= b; }
    friend MuPoly operator*(MuPoly a, const Rational &s) { return a *= s; }
    friend MuPoly operator*(const Rational &s, MuPoly a) { return a *= s; }
    friend MuPoly operator/(MuPoly a, const Rational &s) { return a /= s; }
    MuPoly operator-() const;

    friend bool operator==(const MuPoly &, const MuPoly &) = default;

    /// Expanded form, highest power first, e.g. "1/2*m^2 + 3/2*m".
    std::string str(std::string_view var = "m") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division; throws precondition_error on a zero divisor.
std::pair<MuPoly, MuPoly> divmod(const MuPoly &dividend, const MuPoly &divisor);

/// Quotient of a division that must be exact; throws math_error on a nonzero remainder.
MuPoly exact_div(const MuPoly &dividend, const MuPoly &divisor);

/// base * (base - 1) * ... * (base - q + 1); 1 for q = 0.
MuPoly falling_factorial(const MuPoly &base, int q);

/// Unique polynomial of degree < points.size() through the given (mu, value) pairs.
MuPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

std::ostream &operator<<(std::ostream &os, const MuPoly &p);

} // namespace riordan
