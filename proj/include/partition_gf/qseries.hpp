#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"
#include "series.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace partition_gf {

/// (q)_m = (1-q)(1-q^2)...(1-q^m); (q)_0 = 1.
inline IntPolynomial pochhammer_q(std::size_t m)
{
    IntPolynomial r{1};
    for (std::size_t i = 1; i <= m; ++i)
        r *= IntPolynomial::one_minus_q_pow(i);
    return r;
}

/// (q^a)_m = (1-q^a)(1-q^{a+1})...(1-q^{a+m-1}).
inline IntPolynomial pochhammer_shifted(long long a, std::size_t m)
{
    if (a < 1)
        throw invalid_exponent("pochhammer_shifted needs a >= 1, got " + std::to_string(a));
    IntPolynomial r{1};
    for (std::size_t j = 0; j < m; ++j)
        r *= IntPolynomial::one_minus_q_pow(static_cast<std::size_t>(a) + j);
    return r;
}

/// (q^a)_infinity modulo q^{n+1}. Factors with a + j > n are 1 at this order.
inline TruncatedSeries pochhammer_infinite(long long a, std::size_t n)
{
    if (a < 1)
        throw invalid_exponent("(q^a)_infinity needs a >= 1, got " + std::to_string(a));
    TruncatedSeries s = TruncatedSeries::one(n);
    for (std::size_t e = static_cast<std::size_t>(a); e <= n; ++e)
        s.multiply_by_one_minus_q_pow(e);
    return s;
}

/*
 * Gaussian binomial [A B] = (q)_A / ((q)_B (q)_{A-B}), obtained by exact
 * long division. The zero polynomial outside 0 <= B <= A.
 */
inline IntPolynomial gauss_binomial(long long a, long long b)
{
    if (a < 0 || b < 0 || b > a)
        return {};
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    return divide_exact(pochhammer_q(ua), pochhammer_q(ub) * pochhammer_q(ua - ub));
}

/*
 * numerator / prod (1 - q^m)^e. The denominator is kept as a map m -> e
 * with every m >= 1 and e >= 1, so each factor inverts to an integer
 * geometric series.
 */
class FactoredRational {
public:
    using Denominator = std::map<std::size_t, std::size_t>;

    FactoredRational() = default;

    /// factors lists (m, e) pairs; repeated m are merged.
    FactoredRational(IntPolynomial numerator, const std::vector<std::pair<long long, long long>>& factors)
        : numerator_(std::move(numerator))
    {
        for (auto [m, e] : factors) {
            if (m < 1 || e < 1)
                throw invalid_exponent("denominator factor (1-q^" + std::to_string(m) + ")^" + std::to_string(e));
            denominator_[static_cast<std::size_t>(m)] += static_cast<std::size_t>(e);
        }
    }

    static FactoredRational polynomial(IntPolynomial p) { return {std::move(p), {}}; }

    const IntPolynomial& numerator() const noexcept { return numerator_; }
    const Denominator& denominator() const noexcept { return denominator_; }

    IntPolynomial denominator_polynomial() const
    {
        IntPolynomial d{1};
        for (auto [m, e] : denominator_)
            for (std::size_t i = 0; i < e; ++i)
                d *= IntPolynomial::one_minus_q_pow(m);
        return d;
    }

    /// Cancels every (1 - q^m) that divides the numerator, largest m first.
    FactoredRational reduced() const
    {
        FactoredRational r = *this;
        if (r.numerator_.is_zero()) {
            r.denominator_.clear();
            return r;
        }
        for (auto it = r.denominator_.rbegin(); it != r.denominator_.rend(); ++it) {
            const IntPolynomial f = IntPolynomial::one_minus_q_pow(it->first);
            while (it->second > 0) {
                auto [quot, rem] = divide(r.numerator_, f);
                if (!rem.is_zero())
                    break;
                r.numerator_ = std::move(quot);
                --it->second;
            }
        }
        std::erase_if(r.denominator_, [](const auto& kv) { return kv.second == 0; });
        return r;
    }

    FactoredRational operator-() const
    {
        FactoredRational r = *this;
        r.numerator_ = -r.numerator_;
        return r;
    }

    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b)
    {
        FactoredRational r;
        r.numerator_ = a.numerator_ * b.numerator_;
        r.denominator_ = a.denominator_;
        for (auto [m, e] : b.denominator_)
            r.denominator_[m] += e;
        return r;
    }

    /// Sum over the smallest common (1 - q^m) multiset.
    friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b)
    {
        FactoredRational r;
        r.denominator_ = a.denominator_;
        for (auto [m, e] : b.denominator_)
            r.denominator_[m] = std::max(r.denominator_[m], e);
        r.numerator_ = a.numerator_ * a.complement(r.denominator_) + b.numerator_ * b.complement(r.denominator_);
        return r;
    }

    friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) { return a + -b; }

    friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FactoredRational& f)
    {
        os << "(" << f.numerator_ << ")";
        if (f.denominator_.empty())
            return os;
        os << " / (";
        bool first = true;
        for (auto [m, e] : f.denominator_) {
            os << (first ? "" : " ") << "(1-q^" << m << ")";
            if (e > 1)
                os << "^" << e;
            first = false;
        }
        return os << ")";
    }

private:
    // product of the factors in `target` that this denominator lacks
    IntPolynomial complement(const Denominator& target) const
    {
        IntPolynomial p{1};
        for (auto [m, e] : target) {
            auto it = denominator_.find(m);
            std::size_t have = it == denominator_.end() ? 0 : it->second;
            for (std::size_t i = have; i < e; ++i)
                p *= IntPolynomial::one_minus_q_pow(m);
        }
        return p;
    }

    IntPolynomial numerator_;
    Denominator denominator_;
};

/// Expansion of a factored rational through q^n.
inline TruncatedSeries expand_factored(const FactoredRational& fr, std::size_t n)
{
    TruncatedSeries s(n, fr.numerator());
    for (auto [m, e] : fr.denominator())
        for (std::size_t i = 0; i < e; ++i)
            s.divide_by_one_minus_q_pow(m);
    return s;
}

} // namespace partition_gf
