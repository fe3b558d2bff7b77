#include "riordan/partitions.hpp"

#include <numeric>
#include <string>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

// Exponent vectors m with sum m_i * weights[i] == n, descending lexicographic.
void enumerate(const std::vector<int> &weights, std::size_t pos, int remaining,
               std::vector<int> &current, std::vector<std::vector<int>> &out)
{
    if (pos + 1 == weights.size()) {
        if (remaining % weights[pos] == 0) {
            current[pos] = remaining / weights[pos];
            out.push_back(current);
        }
        return;
    }
    for (int m = remaining / weights[pos]; m >= 0; --m) {
        current[pos] = m;
        enumerate(weights, pos + 1, remaining - m * weights[pos], current, out);
    }
    current[pos] = 0;
}

std::vector<std::vector<int>> exponent_vectors(std::vector<int> weights, int n)
{
    std::vector<int> current(weights.size(), 0);
    std::vector<std::vector<int>> out;
    enumerate(weights, 0, n, current, out);
    return out;
}

void require_positive(int n)
{
    if (n < 1)
        throw precondition_error("partitions need n >= 1, got " + std::to_string(n));
}

} // namespace

int OddPartition::n() const
{
    int r = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        r += exponents[i] * static_cast<int>(2 * i + 1);
    return r;
}

int OddPartition::k() const
{
    int r = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        r += exponents[i] * static_cast<int>(i + 1);
    return r;
}

int OddPartition::q() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

int Partition::n() const
{
    int r = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        r += exponents[i] * static_cast<int>(i + 1);
    return r;
}

int Partition::q() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::vector<OddPartition> odd_partitions(int n)
{
    require_positive(n);
    std::vector<int> weights;
    for (int part = 1; part <= n; part += 2)
        weights.push_back(part);
    std::vector<OddPartition> out;
    for (auto &v : exponent_vectors(std::move(weights), n))
        out.push_back(OddPartition{std::move(v)});
    return out;
}

std::vector<Partition> all_partitions(int n)
{
    require_positive(n);
    std::vector<int> weights(static_cast<std::size_t>(n));
    std::iota(weights.begin(), weights.end(), 1);
    std::vector<Partition> out;
    for (auto &v : exponent_vectors(std::move(weights), n))
        out.push_back(Partition{std::move(v)});
    return out;
}

} // namespace riordan
