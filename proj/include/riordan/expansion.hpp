#pragma once

#include <optional>
#include <vector>

#include "riordan/eigen_support.hpp"
#include "riordan/mupoly.hpp"
#include "riordan/partitions.hpp"
#include "riordan/sequences.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Coefficients of g^m as sums over partitions.
//
// B-expansion (pseudo-involutions, g = 1 + x g B(x^2 g)), over partitions of n
// into odd parts 2i+1 with multiplicities m_i:
//
//   [x^n] g^m = sum (m|b_0^{m_0}...b_p^{m_p}) b_0^{m_0} ... b_p^{m_p}
//   (m|...)   = m (m+k)_q / ((m+k) m_0! ... m_p!),  k = sum m_i (i+1), q = sum m_i
//
// A-expansion (any g with g_0 = 1, g = A(x g), a_0 = 1), over all partitions of n:
//
//   (m|a_1^{m_1}...a_n^{m_n}) = m (m+n)_q / ((m+n) m_1! ... m_n!)
//
// Every coefficient is a polynomial in m. The (m+k) in the denominator always
// cancels against the first factor of the falling factorial, so it is never
// divided out symbolically.

/// One monomial of an expansion of [x^n] g^mu.
struct ExpansionTerm {
    /// Partition exponents (b_0.. for B-expansions, a_1.. for A-expansions).
    std::vector<int> exponents;
    int n = 0;
    /// Shift in m (m+k)_q / (m+k): sum m_i (i+1) for B, n for A.
    int k = 0;
    int q = 0;
    /// (mu | monomial) as a polynomial in mu.
    MuPoly coefficient;
    /// Value of the letter monomial, when the letters are known.
    std::optional<Rational> monomial_value;

    friend bool operator==(const ExpansionTerm &, const ExpansionTerm &) = default;
};

using ExpansionTable = std::vector<ExpansionTerm>;

/// (mu | b_0^{m_0} ... b_p^{m_p}); 1 for the empty partition.
MuPoly b_coeff(const OddPartition &pt);
Rational b_coeff(const OddPartition &pt, int m);

/// m / (m + r m_r) * C(m + r m_r + m_r - 1, m_r), the coefficient of b_r^{m_r} alone.
MuPoly b_coeff_single(int r, int m_r);

/// m / (m+k-m_r-m_s) * C(m+k-1, m_r) * C(m+k-1-m_r, m_s), k = m_r (r+1) + m_s (s+1).
MuPoly b_coeff_pair(int r, int m_r, int s, int m_s);

/// (mu | a_1^{m_1} ... a_n^{m_n})
MuPoly a_coeff(const Partition &pt);
Rational a_coeff(const Partition &pt, int m);

/// Symbolic B-expansion of [x^n] g^mu: one term per odd partition of n, no letter values.
ExpansionTable b_expansion(int n);
/// Symbolic A-expansion of [x^n] g^mu: one term per partition of n.
ExpansionTable a_expansion(int n);

/// b_expansion(n) with monomial values taken from B (letters past its end are zero).
ExpansionTable expand_b(const BSequence &b, int n);
/// a_expansion(n) with monomial values taken from A; needs a_0 = 1.
ExpansionTable expand_a(const ASequence &a, int n);

/// sum coefficient * monomial_value; every term must carry a value.
MuPoly total(const ExpansionTable &table);

/// g^m as 1/(1-b_0 x)^m + sum over b_0-free odd partitions of
/// (m|b_1^{m_1}...) b_1^{m_1}... x^n / (1 - b_0 x)^{m+k}.
RationalSeries expand_b_regrouped(const BSequence &b, int m, int order);

/// Generalized binomial series B_r(x)^mu: [x^n] = mu / (mu + r n) C(mu + r n, n).
MuSeries gbs_symbolic(int r, int order);
RationalSeries gbs(int r, int m, int order);

/// Generalized Pascal table (m, n)_r for m < rows, n < cols:
/// (m, 0) = 1, (0, n) = 0 for n > 0, (m, n) = (m-1, n) + (m+r-1, n-1).
RationalMatrix gpt(int r, int rows, int cols);

/// [z^n] a(z)^mu for a_0 = 1.
MuPoly sym_coeff(const RationalSeries &a, int n);

/// l_n(mu) = mu (mu+n)^{-1} lt_n(mu+n) with l_n = [x^n] g^mu and lt_n = [x^n] A^mu.
bool lagrange_check(const RationalSeries &g, int n);

/// [x^n] g^mu against three partition sums: (mu)_q with letters g_i, mu^q with
/// letters l_i = [x^i] log g, and the A-expansion with letters a_i.
bool binomial_type_checks(const RationalSeries &g, int n);

/// p_q(mu) = mu prod_{i=1}^{q-1} (mu + q - 2i); p_0 = 1.
MuPoly binomial_sequence_h(int q);

/// Checks, for g = g_from_b(B) and h from its factorization:
///   [x^n] h^mu      = sum p_q(mu) / (m_0!...m_p!) 2^{-q} b-monomial
///   [x^n] g^{mu/2}  = sum mu p_q(mu+n) / ((mu+n) m_0!...m_p!) 2^{-q} b-monomial
///   2mu/(2mu+n) p_q(2mu+n) = 2^q mu (mu+k)_q / (mu+k) for every odd partition of n.
bool h_expansion_check(const BSequence &b, int n);

enum class TwoLetterForm {
    /// B = b_0 + b_r x^r; array (1/(1-b_0 x)^m, b_r x^{2r+1}/(1-b_0 x)^{r+1}) on B_{r+1}^m.
    b_sequence,
    /// A = 1 + a_1 x + a_r x^r; array (1/(1-a_1 x)^m, a_r x^r/(1-a_1 x)^r) on B_r^m.
    a_sequence,
};

/// The Riordan array above applied to the generalized binomial series, compared with
/// the m-th power of g rebuilt from the two-letter sequence.
bool binomial_action_check(const Rational &first, const Rational &letter, int r, int m, int order,
                           TwoLetterForm form = TwoLetterForm::b_sequence);

} // namespace riordan
