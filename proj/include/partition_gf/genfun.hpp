#pragma once

#include "distance_spec.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"
#include "qseries.hpp"
#include "series.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace partition_gf {

namespace detail {

inline std::size_t tri(long long j) { return static_cast<std::size_t>(j * (j + 1) / 2); }

/// prod_{j=from}^{to} (1 - q^j) as (m, 1) denominator factors.
inline std::vector<std::pair<long long, long long>> factor_range(long long from, long long to, long long e = 1)
{
    std::vector<std::pair<long long, long long>> f;
    for (long long j = from; j <= to; ++j)
        f.emplace_back(j, e);
    return f;
}

inline std::vector<std::pair<long long, long long>> concat(std::vector<std::pair<long long, long long>> a,
                                                           const std::vector<std::pair<long long, long long>>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Adds q^lead / prod_{j=0}^{parts-1} (1 - q^{m+j}) into acc.
inline void add_summand(TruncatedSeries& acc, std::size_t lead, long long m, long long parts)
{
    const std::size_t n = acc.order();
    if (lead > n)
        return;
    TruncatedSeries s(n);
    s[lead] = 1;
    for (long long j = 0; j < parts; ++j)
        s.divide_by_one_minus_q_pow(static_cast<std::size_t>(m + j));
    acc += s;
}

} // namespace detail

/*
 * P_t(q) summed over the smallest part m:
 *
 *   sum_{m>=1} q^m/(1-q^m) * prod_{i=1}^{t-1} 1/(1-q^{m+i}) * q^{m+t}/(1-q^{m+t})
 *
 * The m-th summand starts at q^{2m+t}, so only 2m + t <= n contributes.
 */
inline TruncatedSeries direct_series_fixed_diff(long long t, std::size_t n)
{
    if (t < 1)
        throw invalid_difference("direct sum needs t >= 1 (t = 0 is the divisor function), got " +
                                 std::to_string(t));
    TruncatedSeries acc(n);
    for (long long m = 1; static_cast<std::size_t>(2 * m + t) <= n; ++m)
        detail::add_summand(acc, static_cast<std::size_t>(2 * m + t), m, t + 1);
    return acc;
}

/*
 * Closed form of P_t(q) for t > 1, assembled from the three terms
 *
 *     q^{t-1}(1-q) / ((1-q^t)(1-q^{t-1}))
 *   - q^{t-1} / ((1-q^t)^2 (1-q^{t-1})^2 (1-q^{t-2}) ... (1-q^2))
 *   + q^t / ((1-q^t)(1-q^{t-1})^2 (1-q^{t-2}) ... (1-q))
 *
 * over their common denominator, then reduced.
 */
inline FactoredRational closed_form_fixed_diff(long long t)
{
    if (t <= 1)
        throw out_of_range("P_t(q) is rational only for t > 1 (P_0 and P_1 are not rational), got t = " +
                           std::to_string(t));
    const auto ut = static_cast<std::size_t>(t);
    FactoredRational first(IntPolynomial::monomial(ut - 1) * IntPolynomial::one_minus_q_pow(1),
                           {{t, 1}, {t - 1, 1}});
    // at t = 2 the (1-q) cancelled in the middle term is 1-q^{t-1} itself
    FactoredRational second(IntPolynomial::monomial(ut - 1),
                            t == 2 ? detail::concat({{2, 2}}, {{1, 1}})
                                   : detail::concat({{t, 2}, {t - 1, 2}}, detail::factor_range(2, t - 2)));
    FactoredRational third(IntPolynomial::monomial(ut),
                           detail::concat({{t, 1}, {t - 1, 2}}, detail::factor_range(1, t - 2)));
    return (first - second + third).reduced();
}

/*
 * The same P_t(q) written with (q)_t:
 *
 *   q^{t-1}(1-q)/((1-q^t)(1-q^{t-1})) - q^{t-1}(1-q)/((1-q^t)(1-q^{t-1})(q)_t) + q^t/((1-q^{t-1})(q)_t)
 */
inline FactoredRational closed_form_fixed_diff_pochhammer(long long t)
{
    if (t <= 1)
        throw out_of_range("P_t(q) is rational only for t > 1, got t = " + std::to_string(t));
    const auto ut = static_cast<std::size_t>(t);
    const IntPolynomial lead = IntPolynomial::monomial(ut - 1) * IntPolynomial::one_minus_q_pow(1);
    const auto qt = detail::factor_range(1, t);
    FactoredRational first(lead, {{t, 1}, {t - 1, 1}});
    FactoredRational second(lead, detail::concat({{t, 1}, {t - 1, 1}}, qt));
    FactoredRational third(IntPolynomial::monomial(ut), detail::concat({{t - 1, 1}}, qt));
    return (first - second + third).reduced();
}

/*
 * sum_{j=j_min}^{t} [t j] (-1)^j q^{C(j+1,2)}. With j_min = 0 this is the
 * q-binomial theorem and equals (q)_t.
 */
inline IntPolynomial qbinomial_alternating_sum(long long t, long long j_min)
{
    if (t < 0 || j_min < 0 || j_min > t + 1)
        throw out_of_range("need 0 <= j_min <= t + 1");
    IntPolynomial acc;
    for (long long j = j_min; j <= t; ++j) {
        IntPolynomial term = gauss_binomial(t, j).shifted(detail::tri(j));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/*
 * Checks sum_{n>=1} p(n,1) q^n three ways through q^n:
 *   the direct sum over the smallest part,
 *   sum_{m>=1} q^m/(1-q^m) * q^{m+1}/(1-q^{m+1}),
 *   q/(1-q)^2 - sum_{m>=1} q^m/(1-q^m).
 */
inline bool p1_identity_check(std::size_t n)
{
    if (n < 1)
        throw order_too_large("p1_identity_check needs n >= 1");
    const TruncatedSeries direct = direct_series_fixed_diff(1, n);

    TruncatedSeries pairs(n);
    for (long long m = 1; static_cast<std::size_t>(2 * m + 1) <= n; ++m) {
        TruncatedSeries s(n);
        s[static_cast<std::size_t>(2 * m + 1)] = 1;
        s.divide_by_one_minus_q_pow(static_cast<std::size_t>(m));
        s.divide_by_one_minus_q_pow(static_cast<std::size_t>(m + 1));
        pairs += s;
    }

    TruncatedSeries rational = expand_factored(FactoredRational(IntPolynomial{0, 1}, {{1, 2}}), n);
    for (std::size_t m = 1; m <= n; ++m) {
        TruncatedSeries s(n);
        s[m] = 1;
        s.divide_by_one_minus_q_pow(m);
        rational -= s;
    }
    return direct == pairs && pairs == rational;
}

/*
 * P_{t_1..t_k}(q) summed over the smallest part m:
 *
 *   sum_{m>=1} q^{(k+1)m + T} / ((1-q^m)(1-q^{m+1})...(1-q^{m+t}))
 */
inline TruncatedSeries direct_series_specified(const DistanceSpec& spec, std::size_t n)
{
    const long long k = spec.k(), t = spec.t(), T = spec.T();
    TruncatedSeries acc(n);
    for (long long m = 1; static_cast<std::size_t>((k + 1) * m + T) <= n; ++m)
        detail::add_summand(acc, static_cast<std::size_t>((k + 1) * m + T), m, t + 1);
    return acc;
}

/*
 * Closed form of P_{t_1..t_k}(q) for t > k:
 *
 *   (-1)^k q^{T - C(k+1,2)} (sum_{j=0}^{k} [t j](-1)^j q^{C(j+1,2)} - (q)_t)
 *   ------------------------------------------------------------------------
 *                        [t-1 k] (1-q^t) (q)_t
 *
 * 1/[t-1 k] = (q)_k (q)_{t-1-k} / (q)_{t-1}. The cofactor (q)_k (q)_{t-1-k}
 * is taken as the exact quotient (q)_{t-1} / [t-1 k] and multiplied into
 * the numerator, leaving only (1-q^m) factors below.
 */
inline FactoredRational closed_form_specified(const DistanceSpec& spec)
{
    const long long k = spec.k(), t = spec.t(), T = spec.T();
    if (t <= k)
        throw out_of_range("closed form needs t > k, got t = " + std::to_string(t) + ", k = " + std::to_string(k));

    const auto ut = static_cast<std::size_t>(t);
    IntPolynomial bracket;
    for (long long j = 0; j <= k; ++j) {
        IntPolynomial term = gauss_binomial(t, j).shifted(detail::tri(j));
        bracket += (j % 2 == 0) ? term : -term;
    }
    bracket -= pochhammer_q(ut);

    const long long shift = T - static_cast<long long>(detail::tri(k));
    if (shift < 0)
        throw internal_error("negative q-shift in closed form");
    IntPolynomial numerator = bracket.shifted(static_cast<std::size_t>(shift));
    if (k % 2 == 1)
        numerator = -numerator;

    const IntPolynomial cofactor = divide_exact(pochhammer_q(ut - 1), gauss_binomial(t - 1, k));
    numerator *= cofactor;

    auto factors = detail::concat(detail::factor_range(1, t - 1), {{t, 1}});
    factors = detail::concat(std::move(factors), detail::factor_range(1, t));
    return FactoredRational(std::move(numerator), factors).reduced();
}

/*
 * Heine's transformation at monomial arguments a = q^a_exp, b = q^b_exp,
 * c = q^c_exp, z = q^z_exp:
 *
 *   sum_{m>=0} (a)_m (b)_m z^m / ((q)_m (c)_m)
 *     = (c/b)_inf (bz)_inf / ((c)_inf (z)_inf)
 *       * sum_{j>=0} (abz/c)_j (b)_j (c/b)^j / ((q)_j (bz)_j)
 *
 * compared through q^n. The left sum is cut after m = m_cutoff; the right
 * sum terminates on its own when abz/c = q^e with e <= 0, and otherwise
 * once (c/b)^j passes q^n.
 */
inline bool heine_check(long long a_exp, long long b_exp, long long c_exp, long long z_exp, std::size_t n,
                        std::size_t m_cutoff)
{
    if (a_exp < 1 || b_exp < 1 || c_exp < 1 || z_exp < 1)
        throw invalid_exponent("Heine check needs positive exponents");
    if (c_exp <= b_exp)
        throw invalid_exponent("(c/b)_infinity vanishes unless c_exp > b_exp");
    if ((m_cutoff + 1) * static_cast<std::size_t>(z_exp) <= n)
        throw cutoff_too_small("term m = " + std::to_string(m_cutoff + 1) + " starts at q^" +
                               std::to_string((m_cutoff + 1) * static_cast<std::size_t>(z_exp)) +
                               ", inside order " + std::to_string(n));

    TruncatedSeries lhs(n);
    for (std::size_t m = 0; m <= m_cutoff; ++m) {
        const std::size_t lead = m * static_cast<std::size_t>(z_exp);
        if (lead > n)
            break;
        TruncatedSeries term(n, (pochhammer_shifted(a_exp, m) * pochhammer_shifted(b_exp, m)).shifted(lead));
        for (std::size_t i = 1; i <= m; ++i)
            term.divide_by_one_minus_q_pow(i);
        for (std::size_t i = 0; i < m; ++i)
            term.divide_by_one_minus_q_pow(static_cast<std::size_t>(c_exp) + i);
        lhs += term;
    }

    const long long e = a_exp + b_exp + z_exp - c_exp; // abz/c = q^e
    const long long ratio = c_exp - b_exp;             // c/b = q^ratio
    TruncatedSeries sum(n);
    for (long long j = 0;; ++j) {
        if (e <= 0 && j > -e)
            break; // (q^e)_j contains the factor (1 - q^0)
        if (e > 0 && static_cast<std::size_t>(j * ratio) > n)
            break;
        // (q^e)_j = prod (1 - q^{e+i}); a negative exponent -s contributes -q^{-s}(1 - q^s)
        long long lead = j * ratio;
        IntPolynomial num{1};
        for (long long i = 0; i < j; ++i) {
            const long long x = e + i;
            if (x > 0) {
                num *= IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(x));
            } else {
                num *= -IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(-x));
                lead += x;
            }
        }
        if (lead < 0)
            throw internal_error("Heine right-hand term with negative order");
        if (static_cast<std::size_t>(lead) > n)
            continue;
        num *= pochhammer_shifted(b_exp, static_cast<std::size_t>(j));
        TruncatedSeries term(n, num.shifted(static_cast<std::size_t>(lead)));
        for (long long i = 1; i <= j; ++i)
            term.divide_by_one_minus_q_pow(static_cast<std::size_t>(i));
        for (long long i = 0; i < j; ++i)
            term.divide_by_one_minus_q_pow(static_cast<std::size_t>(b_exp + z_exp + i));
        sum += term;
    }

    TruncatedSeries prefactor = pochhammer_infinite(ratio, n);
    prefactor = series_mul(prefactor, pochhammer_infinite(b_exp + z_exp, n), n);
    prefactor = series_div_unit(prefactor, pochhammer_infinite(c_exp, n), n);
    prefactor = series_div_unit(prefactor, pochhammer_infinite(z_exp, n), n);

    return lhs == series_mul(prefactor, sum, n);
}

/// Smallest m_cutoff accepted by heine_check at order n.
inline std::size_t heine_cutoff(long long z_exp, std::size_t n) { return n / static_cast<std::size_t>(z_exp); }

} // namespace partition_gf
