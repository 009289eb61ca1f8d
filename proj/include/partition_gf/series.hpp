#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace partition_gf {

/*
 * Formal power series in q known exactly through q^order. The coefficient
 * vector always has order + 1 entries. Two series compare equal with ==
 * only when their orders match too; use equal_through() to compare at a
 * chosen common order.
 */
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    TruncatedSeries(std::size_t order, const IntPolynomial& p) : coeffs_(order + 1)
    {
        const auto& c = p.coeffs();
        std::copy_n(c.begin(), std::min(c.size(), coeffs_.size()), coeffs_.begin());
    }

    /// Takes ownership of coeffs; the order is coeffs.size() - 1.
    static TruncatedSeries from_coeffs(std::vector<Integer> coeffs)
    {
        if (coeffs.empty())
            throw invalid_exponent("a truncated series needs at least the constant coefficient");
        TruncatedSeries s(0);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    static TruncatedSeries one(std::size_t order) { return TruncatedSeries(order, IntPolynomial{1}); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
    Integer& operator[](std::size_t i) { return coeffs_.at(i); }

    TruncatedSeries truncated(std::size_t order) const
    {
        if (order > this->order())
            throw order_too_large("cannot raise order " + std::to_string(this->order()) + " to " +
                                  std::to_string(order));
        return from_coeffs({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1});
    }

    /// In-place multiplication by 1/(1 - q^m).
    void divide_by_one_minus_q_pow(std::size_t m)
    {
        if (m == 0)
            throw invalid_exponent("1/(1 - q^0) is undefined");
        for (std::size_t j = m; j < coeffs_.size(); ++j)
            coeffs_[j] += coeffs_[j - m];
    }

    /// In-place multiplication by (1 - q^m).
    void multiply_by_one_minus_q_pow(std::size_t m)
    {
        if (m == 0) {
            std::fill(coeffs_.begin(), coeffs_.end(), Integer(0));
            return;
        }
        for (std::size_t j = coeffs_.size(); j-- > m;)
            coeffs_[j] -= coeffs_[j - m];
    }

    /// In-place multiplication by q^s; coefficients pushed past the order drop.
    void shift(std::size_t s)
    {
        if (s == 0)
            return;
        for (std::size_t j = coeffs_.size(); j-- > 0;)
            coeffs_[j] = j >= s ? coeffs_[j - s] : Integer(0);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other)
    {
        require_same_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& other)
    {
        require_same_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
    {
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
            os << (i ? "," : "") << s.coeffs_[i];
        return os << " + O(q^" << s.order() + 1 << ")";
    }

private:
    void require_same_order(const TruncatedSeries& other) const
    {
        if (other.order() != order())
            throw order_too_large("series orders differ: " + std::to_string(order()) + " vs " +
                                  std::to_string(other.order()));
    }

    std::vector<Integer> coeffs_;
};

/// True iff a and b agree on every coefficient q^0..q^n.
inline bool equal_through(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n)
{
    if (n > a.order() || n > b.order())
        throw order_too_large("comparison order " + std::to_string(n) + " exceeds an input order");
    return std::equal(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(n) + 1,
                      b.coeffs().begin());
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n)
{
    if (n > a.order() || n > b.order())
        throw order_too_large("requested order " + std::to_string(n) + " exceeds an input order");
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries::from_coeffs(std::move(c));
}

/// Expansion of 1/(1 - q^m) through q^n.
inline TruncatedSeries geometric_inverse(long long m, std::size_t n)
{
    if (m <= 0)
        throw invalid_exponent("geometric_inverse needs m >= 1, got " + std::to_string(m));
    TruncatedSeries s(n);
    for (std::size_t j = 0; j <= n; j += static_cast<std::size_t>(m))
        s[j] = 1;
    return s;
}

/// The series c with c * b = a through q^n; b must have constant term +1 or -1.
inline TruncatedSeries series_div_unit(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n)
{
    if (n > a.order() || n > b.order())
        throw order_too_large("requested order " + std::to_string(n) + " exceeds an input order");
    const Integer& b0 = b[0];
    if (b0 != 1 && b0 != -1)
        throw non_unit_divisor("constant term is " + b0.str());
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Integer acc = a[i];
        for (std::size_t j = 1; j <= i; ++j)
            if (b[j] != 0)
                acc -= b[j] * c[i - j];
        c[i] = b0 == 1 ? acc : Integer(-acc);
    }
    return TruncatedSeries::from_coeffs(std::move(c));
}

} // namespace partition_gf
