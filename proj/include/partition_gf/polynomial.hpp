#pragma once

#include "errors.hpp"
#include "integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace partition_gf {

/*
 * Polynomial in q with exact integer coefficients. coeffs()[i] is the
 * coefficient of q^i. Trailing zeros are stripped on every mutation, so
 * the zero polynomial is always the empty vector.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    IntPolynomial(std::initializer_list<long long> coeffs)
    {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs)
            coeffs_.emplace_back(c);
        normalize();
    }

    static IntPolynomial constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }

    /// c * q^exponent
    static IntPolynomial monomial(std::size_t exponent, Integer c = 1)
    {
        std::vector<Integer> v(exponent + 1);
        v[exponent] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    /// 1 - q^m
    static IntPolynomial one_minus_q_pow(std::size_t m)
    {
        if (m == 0)
            return {};
        std::vector<Integer> v(m + 1);
        v[0] = 1;
        v[m] = -1;
        return IntPolynomial(std::move(v));
    }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    /// Coefficient of q^i, zero beyond the degree.
    Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    Integer evaluate(const Integer& q) const
    {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * q + *it;
        return acc;
    }

    /// Multiplication by q^s.
    IntPolynomial shifted(std::size_t s) const
    {
        if (is_zero())
            return {};
        std::vector<Integer> v(s, Integer(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator-() const
    {
        IntPolynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    IntPolynomial& operator+=(const IntPolynomial& other)
    {
        if (other.coeffs_.size() > coeffs_.size())
            coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& other) { return *this += -other; }

    IntPolynomial& operator*=(const IntPolynomial& other)
    {
        *this = *this * other;
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(v));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
    {
        if (p.is_zero())
            return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            const Integer& c = p.coeffs_[i];
            if (c == 0)
                continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (!first)
                os << (c < 0 ? " - " : " + ");
            else if (c < 0)
                os << "-";
            if (mag != 1 || i == 0)
                os << mag;
            if (i > 0)
                os << "q" << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return os;
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// Quotient and remainder of integer polynomial long division.
struct PolynomialDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/*
 * Long division over the integers. Every step must divide the leading
 * coefficient exactly, which always holds when the divisor's leading
 * coefficient is +1 or -1 (true of every (q)_m product). A step that does
 * not divide exactly stops the division and leaves the rest in the
 * remainder.
 */
inline PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor)
{
    if (divisor.is_zero())
        throw internal_error("polynomial division by zero");
    std::vector<Integer> rem = dividend.coeffs();
    const auto& d = divisor.coeffs();
    const std::size_t dn = d.size();
    if (rem.size() < dn)
        return {IntPolynomial{}, dividend};
    std::vector<Integer> quot(rem.size() - dn + 1);
    for (std::size_t i = rem.size(); i-- >= dn;) {
        if (rem[i] == 0)
            continue;
        if (rem[i] % d.back() != 0)
            break;
        Integer f = rem[i] / d.back();
        const std::size_t shift = i - (dn - 1);
        quot[shift] = f;
        for (std::size_t j = 0; j < dn; ++j)
            rem[shift + j] -= f * d[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

/// Division that must be exact; a remainder is an internal bug.
inline IntPolynomial divide_exact(const IntPolynomial& dividend, const IntPolynomial& divisor)
{
    auto [q, r] = divide(dividend, divisor);
    if (!r.is_zero())
        throw internal_error("exact polynomial division left a nonzero remainder");
    return q;
}

} // namespace partition_gf
