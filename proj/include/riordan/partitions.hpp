#pragma once

#include <vector>

namespace riordan {

/// Partition of n into odd parts, as the exponent vector of b_0^{m_0} ... b_p^{m_p}.
/// exponents[i] counts the parts equal to 2i + 1.
struct OddPartition {
    std::vector<int> exponents;

    int n() const;
    /// sum m_i (i + 1)
    int k() const;
    /// sum m_i
    int q() const;

    friend bool operator==(const OddPartition &, const OddPartition &) = default;
};

/// Partition of n into arbitrary parts, as the exponent vector of a_1^{m_1} ... a_n^{m_n}.
/// exponents[i] counts the parts equal to i + 1.
struct Partition {
    std::vector<int> exponents;

    int n() const;
    int q() const;

    friend bool operator==(const Partition &, const Partition &) = default;
};

/// All partitions of n >= 1 into odd parts. Exponent vectors have length
/// floor((n-1)/2) + 1 and come in descending lexicographic order, so b_0^n is
/// first and the single largest part is last.
std::vector<OddPartition> odd_partitions(int n);

/// All partitions of n >= 1; vectors of length n, descending lexicographic order.
std::vector<Partition> all_partitions(int n);

} // namespace riordan
