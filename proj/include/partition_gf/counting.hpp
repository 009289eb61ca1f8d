#pragma once

#include "distance_spec.hpp"
#include "errors.hpp"
#include "integer.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace partition_gf {

/// Number of positive divisors of n, by trial division up to sqrt(n).
inline long long divisor_count(long long n)
{
    if (n < 1)
        throw invalid_query("divisor_count needs n >= 1");
    long long count = 0;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0)
            count += (d * d == n) ? 1 : 2;
    return count;
}

/// Unrestricted partition number p(n); p(0) = 1.
inline Integer total_partition_count(long long n)
{
    if (n < 0)
        throw invalid_query("total_partition_count needs n >= 0");
    std::vector<Integer> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (std::size_t part = 1; part <= static_cast<std::size_t>(n); ++part)
        for (std::size_t j = part; j < ways.size(); ++j)
            ways[j] += ways[j - part];
    return ways.back();
}

namespace detail {

// Multisets of parts from {lo, ..., hi} summing to exactly `target`.
inline Integer bounded_part_multisets(long long target, long long lo, long long hi)
{
    if (target < 0)
        return 0;
    std::vector<Integer> ways(static_cast<std::size_t>(target) + 1);
    ways[0] = 1;
    for (long long part = lo; part <= hi && part <= target; ++part)
        for (auto j = static_cast<std::size_t>(part); j < ways.size(); ++j)
            ways[j] += ways[j - static_cast<std::size_t>(part)];
    return ways.back();
}

} // namespace detail

/*
 * p(n, t): partitions of n whose largest and smallest parts differ by t.
 * For each smallest part s, both s and s + t are forced once and the rest
 * of n is any multiset of parts from [s, s + t].
 */
inline Integer count_fixed_diff(long long n, long long t)
{
    if (n < 1)
        throw invalid_query("n must be >= 1, got " + std::to_string(n));
    if (t < 0)
        throw invalid_difference("t must be >= 0, got " + std::to_string(t));
    if (t == 0)
        return divisor_count(n);
    Integer total = 0;
    for (long long s = 1; 2 * s + t <= n; ++s)
        total += detail::bounded_part_multisets(n - 2 * s - t, s, s + t);
    return total;
}

/*
 * p(n, t_1, ..., t_k): partitions with smallest part sigma, largest part
 * sigma + t, every milestone sigma + t_1 + ... + t_i present, and all other
 * parts anywhere in [sigma, sigma + t].
 */
inline Integer count_specified(long long n, const DistanceSpec& spec)
{
    if (n < 1)
        throw invalid_query("n must be >= 1, got " + std::to_string(n));
    const long long k = spec.k(), t = spec.t(), T = spec.T();
    Integer total = 0;
    for (long long sigma = 1; (k + 1) * sigma + T <= n; ++sigma)
        total += detail::bounded_part_multisets(n - (k + 1) * sigma - T, sigma, sigma + t);
    return total;
}

/*
 * Every partition of n (non-increasing) whose largest minus smallest part
 * is t. Exhaustive, for diagnostics and small-n cross-checks only.
 */
inline std::vector<std::vector<long long>> list_fixed_diff_partitions(long long n, long long t)
{
    std::vector<std::vector<long long>> out;
    std::vector<long long> current;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            if (!current.empty() && current.front() - current.back() == t)
                out.push_back(current);
            return;
        }
        for (long long p = std::min(remaining, max_part); p >= 1; --p) {
            if (!current.empty() && current.front() - p > t)
                break;
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (n >= 1)
        rec(rec, n, n);
    return out;
}

} // namespace partition_gf
