#include "riordan/rational.hpp"

#include <cctype>
#include <ostream>

#include "riordan/errors.hpp"

namespace riordan {

Rational::Rational(long num, long den) : v_(num, den)
{
    if (den == 0)
        throw precondition_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw precondition_error("division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    if (s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num = s.substr(0, slash);
    if (!is_integer_literal(num))
        throw parse_error("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(mpq_class(parse_integer(num)));
    const auto den = s.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw parse_error("malformed rational: '" + std::string(text) + "'");
    const mpz_class d = parse_integer(den);
    if (d == 0)
        throw parse_error("zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational &base, int exponent)
{
    if (exponent < 0)
        return pow(Rational(1) / base, -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

Rational factorial(int n)
{
    if (n < 0)
        throw precondition_error("factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(r));
}

Rational binomial(const Rational &top, int k)
{
    if (k < 0)
        return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i)
        r *= top - Rational(i);
    return r / factorial(k);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace riordan
