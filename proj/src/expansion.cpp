#include "riordan/expansion.hpp"

#include <string>

namespace riordan {

namespace {

Rational exponent_factorials(const std::vector<int> &exponents)
{
    Rational r(1);
    for (int e : exponents)
        r *= factorial(e);
    return r;
}

// mu (mu+k)_q / (mu+k) = mu (mu+k-1)(mu+k-2)...(mu+k-q+1), q >= 1.
MuPoly shifted_falling_ratio(int k, int q)
{
    if (q == 0)
        return MuPoly(1);
    return MuPoly::mu() * falling_factorial(MuPoly::linear(Rational(k - 1)), q - 1);
}

template <class Letters>
Rational monomial_value(const std::vector<int> &exponents, const Letters &letters, std::size_t first)
{
    Rational r(1);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0)
            r *= pow(letters[i + first], exponents[i]);
    return r;
}

MuPoly poly_binomial(const MuPoly &top, int k)
{
    return falling_factorial(top, k) / factorial(k);
}

} // namespace

MuPoly b_coeff(const OddPartition &pt)
{
    return shifted_falling_ratio(pt.k(), pt.q()) / exponent_factorials(pt.exponents);
}

Rational b_coeff(const OddPartition &pt, int m) { return b_coeff(pt)(Rational(m)); }

MuPoly b_coeff_single(int r, int m_r)
{
    if (r < 0 || m_r < 0)
        throw precondition_error("b_coeff_single needs r, m_r >= 0");
    const auto top = MuPoly::linear(Rational(r * m_r + m_r - 1));
    return exact_div(MuPoly::mu() * poly_binomial(top, m_r), MuPoly::linear(Rational(r * m_r)));
}

MuPoly b_coeff_pair(int r, int m_r, int s, int m_s)
{
    if (r == s)
        throw precondition_error("b_coeff_pair needs two distinct letters");
    if (r < 0 || s < 0 || m_r < 0 || m_s < 0)
        throw precondition_error("b_coeff_pair needs nonnegative arguments");
    const int k = m_r * (r + 1) + m_s * (s + 1);
    const auto num = MuPoly::mu() * poly_binomial(MuPoly::linear(Rational(k - 1)), m_r) *
                     poly_binomial(MuPoly::linear(Rational(k - 1 - m_r)), m_s);
    return exact_div(num, MuPoly::linear(Rational(k - m_r - m_s)));
}

MuPoly a_coeff(const Partition &pt)
{
    return shifted_falling_ratio(pt.n(), pt.q()) / exponent_factorials(pt.exponents);
}

Rational a_coeff(const Partition &pt, int m) { return a_coeff(pt)(Rational(m)); }

ExpansionTable b_expansion(int n)
{
    ExpansionTable table;
    for (auto &pt : odd_partitions(n))
        table.push_back({pt.exponents, n, pt.k(), pt.q(), b_coeff(pt), std::nullopt});
    return table;
}

ExpansionTable a_expansion(int n)
{
    ExpansionTable table;
    for (auto &pt : all_partitions(n))
        table.push_back({pt.exponents, n, n, pt.q(), a_coeff(pt), std::nullopt});
    return table;
}

ExpansionTable expand_b(const BSequence &b, int n)
{
    auto table = b_expansion(n);
    for (auto &term : table)
        term.monomial_value = monomial_value(term.exponents, b, 0);
    return table;
}

ExpansionTable expand_a(const ASequence &a, int n)
{
    if (a[0] != Rational(1))
        throw precondition_error("A-expansion assumes a_0 = 1");
    auto table = a_expansion(n);
    for (auto &term : table)
        term.monomial_value = monomial_value(term.exponents, a, 1);
    return table;
}

MuPoly total(const ExpansionTable &table)
{
    MuPoly sum;
    for (const auto &term : table) {
        if (!term.monomial_value)
            throw precondition_error("expansion term without letter values");
        sum += term.coefficient * *term.monomial_value;
    }
    return sum;
}

RationalSeries expand_b_regrouped(const BSequence &b, int m, int order)
{
    const auto base = RationalSeries::polynomial({Rational(1), -b[0]}, order);
    auto sum = pow(base, -m);
    for (int n = 1; n <= order; ++n) {
        for (const auto &pt : odd_partitions(n)) {
            if (pt.exponents[0] != 0)
                continue;
            const Rational weight = monomial_value(pt.exponents, b, 0);
            if (weight.is_zero())
                continue;
            const Rational c = b_coeff(pt, m) * weight;
            sum = sum + c * mul_x(pow(base, -(m + pt.k())), n).truncated(order);
        }
    }
    return sum;
}

MuSeries gbs_symbolic(int r, int order)
{
    if (r < 1)
        throw precondition_error("generalized binomial series needs r >= 1");
    std::vector<MuPoly> c(static_cast<std::size_t>(order) + 1);
    c[0] = MuPoly(1);
    for (int n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = shifted_falling_ratio(r * n, n) / factorial(n);
    return MuSeries(std::move(c));
}

RationalSeries gbs(int r, int m, int order) { return evaluate(gbs_symbolic(r, order), Rational(m)); }

RationalMatrix gpt(int r, int rows, int cols)
{
    if (r < 1 || rows < 0 || cols < 0)
        throw precondition_error("generalized Pascal table needs r >= 1 and nonnegative extents");
    RationalMatrix out(rows, cols);
    if (rows == 0 || cols == 0)
        return out;
    // Column n needs rows up to max_row(n) = rows - 1 + (r - 1)(cols - 1 - n) of column n - 1.
    std::vector<Rational> prev(static_cast<std::size_t>(rows + (r - 1) * (cols - 1)), Rational(1));
    for (int m = 0; m < rows; ++m)
        out(m, 0) = Rational(1);
    for (int n = 1; n < cols; ++n) {
        const int height = rows + (r - 1) * (cols - 1 - n);
        std::vector<Rational> cur(static_cast<std::size_t>(height));
        for (int m = 1; m < height; ++m)
            cur[static_cast<std::size_t>(m)] =
                cur[static_cast<std::size_t>(m - 1)] + prev[static_cast<std::size_t>(m + r - 1)];
        for (int m = 0; m < rows; ++m)
            out(m, n) = cur[static_cast<std::size_t>(m)];
        prev = std::move(cur);
    }
    return out;
}

MuPoly sym_coeff(const RationalSeries &a, int n)
{
    if (a[0] != Rational(1))
        throw precondition_error("symbolic power coefficient needs a_0 = 1");
    return pow_symbolic(a.truncated(n))[n];
}

bool lagrange_check(const RationalSeries &g, int n)
{
    const auto l = sym_coeff(g, n);
    const auto a = a_from_g(g.truncated(n));
    const auto lt = sym_coeff(a.generating_function(n), n);
    const auto [quotient, remainder] = divmod(lt.shifted(Rational(n)), MuPoly::linear(Rational(n)));
    if (!remainder.is_zero())
        return false;
    return MuPoly::mu() * quotient == l;
}

bool binomial_type_checks(const RationalSeries &g, int n)
{
    const auto target = sym_coeff(g, n);
    const auto logs = log1(g.truncated(n));
    const auto a = a_from_g(g.truncated(n));

    MuPoly by_g, by_log, by_a;
    for (const auto &pt : all_partitions(n)) {
        const Rational denom = exponent_factorials(pt.exponents);
        Rational g_mono(1), l_mono(1), a_mono(1);
        for (std::size_t i = 0; i < pt.exponents.size(); ++i) {
            const int e = pt.exponents[i];
            if (e == 0)
                continue;
            const int letter = static_cast<int>(i) + 1;
            g_mono *= pow(g[letter], e);
            l_mono *= pow(logs[letter], e);
            a_mono *= pow(a[static_cast<std::size_t>(letter)], e);
        }
        by_g += falling_factorial(MuPoly::mu(), pt.q()) * g_mono / denom;
        MuPoly mu_q(1);
        for (int i = 0; i < pt.q(); ++i)
            mu_q *= MuPoly::mu();
        by_log += mu_q * l_mono / denom;
        by_a += a_coeff(pt) * a_mono;
    }
    return by_g == target && by_log == target && by_a == target;
}

MuPoly binomial_sequence_h(int q)
{
    if (q == 0)
        return MuPoly(1);
    MuPoly p = MuPoly::mu();
    for (int i = 1; i < q; ++i)
        p *= MuPoly::linear(Rational(q - 2 * i));
    return p;
}

bool h_expansion_check(const BSequence &b, int n)
{
    const auto g = g_from_b(b, n);
    const auto fact = factorize(g);
    const auto mu = MuPoly::mu();
    const auto mu_plus_n = MuPoly::linear(Rational(n));

    MuPoly h_sum, half_sum;
    for (const auto &pt : odd_partitions(n)) {
        const int q = pt.q();
        const int k = pt.k();
        const Rational weight = monomial_value(pt.exponents, b, 0) /
                                (exponent_factorials(pt.exponents) * pow(Rational(2), q));
        const auto pq = binomial_sequence_h(q);
        h_sum += pq * weight;
        half_sum += exact_div(mu * pq.compose(mu_plus_n), mu_plus_n) * weight;

        const auto lhs = exact_div(MuPoly::linear(0, 2) * pq.compose(MuPoly::linear(n, 2)),
                                   MuPoly::linear(n, 2));
        const auto rhs = pow(Rational(2), q) *
                         exact_div(mu * falling_factorial(MuPoly::linear(k), q), MuPoly::linear(k));
        if (lhs != rhs)
            return false;
    }
    const auto h_coeff = sym_coeff(fact.h, n);
    const auto half_power = sym_coeff(g, n).compose(MuPoly::linear(0, Rational(1, 2)));
    return h_coeff == h_sum && half_power == half_sum;
}

bool binomial_action_check(const Rational &first, const Rational &letter, int r, int m, int order,
                           TwoLetterForm form)
{
    const bool by_b = form == TwoLetterForm::b_sequence;
    if (r < (by_b ? 1 : 2))
        throw precondition_error("two-letter array needs r >= " + std::to_string(by_b ? 1 : 2));
    const auto base = RationalSeries::polynomial({Rational(1), -first}, order);
    const auto f = pow(base, -m);

    RationalSeries lhs = RationalSeries::zero(order);
    RationalSeries rhs = RationalSeries::zero(order);
    if (by_b) {
        // x g = b_r x^{2r+1} / (1 - b_0 x)^{r+1}
        const auto g = letter * mul_x(pow(base, -(r + 1)), 2 * r).truncated(order);
        lhs = RiordanArray::with_degenerate_g(f, g).apply(gbs(r + 1, m, order));
        std::vector<Rational> bs(static_cast<std::size_t>(r) + 1);
        bs.front() = first;
        bs.back() = letter;
        rhs = pow(g_from_b(BSequence(std::move(bs)), order), m);
    } else {
        // x g = a_r x^r / (1 - a_1 x)^r
        const auto g = letter * mul_x(pow(base, -r), r - 1).truncated(order);
        lhs = RiordanArray::with_degenerate_g(f, g).apply(gbs(r, m, order));
        std::vector<Rational> as(static_cast<std::size_t>(r) + 1);
        as[0] = Rational(1);
        as[1] = first;
        as.back() = letter;
        rhs = pow(g_from_a(ASequence(std::move(as)), order), m);
    }
    return lhs.order() == rhs.order() && lhs == rhs;
}

} // namespace riordan
