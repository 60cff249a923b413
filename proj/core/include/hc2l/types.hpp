#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hc2l {

using Vertex = uint32_t;
using Weight = uint32_t;   // edge weights
using Distance = uint64_t; // path length accumulator

constexpr Distance INFINITE_DISTANCE = std::numeric_limits<Distance>::max();

// distance sentinel inside serialized 32-bit label arrays
constexpr uint32_t LABEL_INFINITY = std::numeric_limits<uint32_t>::max();

inline Distance safe_sum(Distance a, Distance b)
{
    if (a == INFINITE_DISTANCE || b == INFINITE_DISTANCE)
        return INFINITE_DISTANCE;
    return a + b;
}

// balance parameter as an exact rational so size thresholds are integer arithmetic
struct Beta
{
    uint32_t num = 1;
    uint32_t den = 5;

    Beta() = default;
    Beta(uint32_t n, uint32_t d) : num(n), den(d)
    {
        if (d == 0 || n == 0 || 2 * n > d)
            throw std::invalid_argument("beta must lie in (0, 0.5]");
        uint32_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }

    double value() const { return static_cast<double>(num) / den; }

    // ceil(beta * n), floored at 1 for n >= 2
    size_t min_partition_size(size_t n) const
    {
        size_t s = (num * n + den - 1) / den;
        return n >= 2 && s < 1 ? 1 : s;
    }

    // test: size <= (1 - beta) * total
    bool balanced(size_t size, size_t total) const
    {
        return size * den <= static_cast<size_t>(den - num) * total;
    }

    bool operator==(const Beta &) const = default;
};

} // namespace hc2l
