#include "riordan/mupoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

MuPoly::MuPoly(const Rational &constant)
{
    if (!constant.is_zero())
        c_.push_back(constant);
}

MuPoly::MuPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

MuPoly MuPoly::mu() { return MuPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

MuPoly MuPoly::linear(const Rational &offset, const Rational &slope)
{
    return MuPoly(std::vector<Rational>{offset, slope});
}

void MuPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational MuPoly::operator()(const Rational &at) const
{
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * at + *it;
    return r;
}

MuPoly MuPoly::compose(const MuPoly &inner) const
{
    MuPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= inner;
        r += MuPoly(*it);
    }
    return r;
}

MuPoly MuPoly::shifted(const Rational &by) const { return compose(linear(by)); }

MuPoly &MuPoly::operator+=(const MuPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

MuPoly &MuPoly::operator-=(const MuPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

MuPoly &MuPoly::operator*=(const MuPoly &o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

MuPoly &MuPoly::operator*=(const Rational &s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto &c : c_)
        c *= s;
    return *this;
}

MuPoly &MuPoly::operator/=(const Rational &s)
{
    if (s.is_zero())
        throw precondition_error("MuPoly division by zero");
    for (auto &c : c_)
        c /= s;
    return *this;
}

MuPoly MuPoly::operator-() const
{
    MuPoly r = *this;
    for (auto &c : r.c_)
        c = -c;
    return r;
}

std::string MuPoly::str(std::string_view var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational &c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1))
            os << mag << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::pair<MuPoly, MuPoly> divmod(const MuPoly &dividend, const MuPoly &divisor)
{
    if (divisor.is_zero())
        throw precondition_error("polynomial division by zero");
    const int dd = divisor.degree();
    const Rational lead = divisor[static_cast<std::size_t>(dd)];
    std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    const int nd = dividend.degree();
    if (nd < dd)
        return {MuPoly(), dividend};
    std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1));
    for (int i = nd; i >= dd; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = q;
        if (q.is_zero())
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {MuPoly(std::move(quot)), MuPoly(std::move(rem))};
}

MuPoly exact_div(const MuPoly &dividend, const MuPoly &divisor)
{
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero())
        throw math_error("polynomial division is not exact: (" + dividend.str() + ") / (" +
                         divisor.str() + ")");
    return q;
}

MuPoly falling_factorial(const MuPoly &base, int q)
{
    MuPoly r(1);
    for (int i = 0; i < q; ++i)
        r *= base - MuPoly(i);
    return r;
}

MuPoly interpolate(std::span<const std::pair<Rational, Rational>> points)
{
    // Newton divided differences.
    const std::size_t n = points.size();
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    MuPoly r;
    for (std::size_t i = n; i-- > 0;) {
        r *= MuPoly::linear(-points[i].first);
        r += MuPoly(dd[i]);
    }
    return r;
}

std::ostream &operator<<(std::ostream &os, const MuPoly &p) { return os << p.str(); }

} // namespace riordan
