#pragma once

#include "distance_spec.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "integer.hpp"
#include "qseries.hpp"

#include "json.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace partition_gf {

/*
 * A function of n that is a polynomial of degree <= d on each residue class
 * modulo the period P. rows()[r][j] is the coefficient of n^j for n = r mod P.
 */
class QuasiPolynomial {
public:
    using Row = std::vector<Rational>;

    QuasiPolynomial(std::size_t period, std::size_t degree, std::vector<Row> rows)
        : period_(period), degree_(degree), rows_(std::move(rows))
    {
        if (period_ == 0)
            throw invalid_query("quasipolynomial period must be positive");
        if (rows_.size() != period_)
            throw invalid_query("expected " + std::to_string(period_) + " rows, got " + std::to_string(rows_.size()));
        for (const auto& row : rows_)
            if (row.size() != degree_ + 1)
                throw invalid_query("every row needs degree + 1 coefficients");
    }

    std::size_t period() const noexcept { return period_; }
    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    Rational evaluate(long long n) const
    {
        if (n < 1)
            throw invalid_query("quasipolynomial evaluated at n < 1");
        const Row& row = rows_[static_cast<std::size_t>(n) % period_];
        Rational acc = 0;
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            acc = acc * n + *it;
        return acc;
    }

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

private:
    std::size_t period_;
    std::size_t degree_;
    std::vector<Row> rows_;
};

inline Rational qp_evaluate(const QuasiPolynomial& qp, long long n) { return qp.evaluate(n); }

namespace detail {

// Solves the (d+1)x(d+1) Vandermonde system sum_j c_j x_i^j = y_i exactly.
inline std::vector<Rational> solve_vandermonde(const std::vector<long long>& xs, const std::vector<Integer>& ys)
{
    const std::size_t m = xs.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < m; ++j) {
            a[i][j] = p;
            p *= xs[i];
        }
        a[i][m] = Rational(ys[i]);
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m)
            throw internal_error("singular interpolation system (repeated sample points)");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    std::vector<Rational> sol(m);
    for (std::size_t i = 0; i < m; ++i)
        sol[i] = a[i][m] / a[i][i];
    return sol;
}

} // namespace detail

/*
 * Fits one polynomial of degree <= d per residue class mod P through the
 * earliest d + 1 samples of that class. Every later sample is a witness:
 * any disagreement means the degree/period hypothesis is wrong.
 */
inline QuasiPolynomial qp_fit(const std::map<long long, Integer>& values, std::size_t degree, std::size_t period)
{
    if (period == 0)
        throw invalid_query("period must be positive");
    std::vector<std::vector<std::pair<long long, Integer>>> classes(period);
    for (const auto& [n, v] : values) {
        if (n < 1)
            throw invalid_query("sample points must be >= 1");
        classes[static_cast<std::size_t>(n) % period].emplace_back(n, v);
    }

    std::vector<QuasiPolynomial::Row> rows;
    rows.reserve(period);
    for (std::size_t r = 0; r < period; ++r) {
        const auto& samples = classes[r];
        if (samples.size() < degree + 1)
            throw insufficient_samples("residue " + std::to_string(r) + " mod " + std::to_string(period) + " has " +
                                       std::to_string(samples.size()) + " samples, needs " +
                                       std::to_string(degree + 1));
        std::vector<long long> xs;
        std::vector<Integer> ys;
        for (std::size_t i = 0; i <= degree; ++i) {
            xs.push_back(samples[i].first);
            ys.push_back(samples[i].second);
        }
        rows.push_back(detail::solve_vandermonde(xs, ys));
    }

    QuasiPolynomial qp(period, degree, std::move(rows));
    for (const auto& [n, v] : values)
        if (qp.evaluate(n) != Rational(v))
            throw inconsistent_samples("fit with degree " + std::to_string(degree) + " and period " +
                                       std::to_string(period) + " misses the sample at n = " + std::to_string(n));
    return qp;
}

/// lcm(1, 2, ..., t)
inline std::size_t lcm_up_to(long long t)
{
    std::size_t l = 1;
    for (long long i = 2; i <= t; ++i)
        l = std::lcm(l, static_cast<std::size_t>(i));
    return l;
}

/// The closed-form generating function: the fixed-difference form for one distance, otherwise the specified-distance form.
inline FactoredRational closed_form(const DistanceSpec& spec)
{
    if (!spec.has_closed_form())
        throw out_of_range("no rational closed form for " + spec.to_string() +
                           ": needs t > max(1, k); P_0 and P_1 are not rational");
    return spec.k() == 1 ? closed_form_fixed_diff(spec.t()) : closed_form_specified(spec);
}

/// First n from which the closed form's coefficients follow a quasipolynomial.
inline long long quasipolynomial_start(const FactoredRational& fr)
{
    std::ptrdiff_t den_degree = 0;
    for (auto [m, e] : fr.denominator())
        den_degree += static_cast<std::ptrdiff_t>(m * e);
    return std::max<long long>(1, fr.numerator().degree() - den_degree + 1);
}

/// Default expansion order: minimal weight, t + 1 periods to fit, and two more as holdout.
inline std::size_t default_fit_order(const DistanceSpec& spec)
{
    const std::size_t period = lcm_up_to(spec.t());
    return static_cast<std::size_t>(spec.minimal_weight()) + period * static_cast<std::size_t>(spec.t() + 1) +
           2 * period;
}

/*
 * Expands the closed form through q^order and fits degree t, period
 * lcm(1..t). Every coefficient not consumed by the fit is checked, so a
 * returned value means the degree/period claim held on the whole range.
 */
inline QuasiPolynomial qp_from_closed_form(const DistanceSpec& spec, std::size_t order)
{
    const FactoredRational fr = closed_form(spec);
    const TruncatedSeries s = expand_factored(fr, order);
    std::map<long long, Integer> values;
    for (long long n = quasipolynomial_start(fr); n <= static_cast<long long>(order); ++n)
        values.emplace(n, s[static_cast<std::size_t>(n)]);
    return qp_fit(values, static_cast<std::size_t>(spec.t()), lcm_up_to(spec.t()));
}

/// The common top-degree coefficient across all residue classes.
inline Rational qp_leading_coefficient(const QuasiPolynomial& qp)
{
    const Rational lead = qp.rows().front().back();
    for (const auto& row : qp.rows())
        if (row.back() != lead)
            throw non_constant_leading("residue classes disagree on the n^" + std::to_string(qp.degree()) +
                                       " coefficient");
    return lead;
}

/// 1 / (t * (t!)^2), the leading coefficient of p(n, t).
inline Rational expected_leading(long long t)
{
    if (t < 2)
        throw out_of_range("leading-coefficient law needs t >= 2");
    Integer f = 1;
    for (long long i = 2; i <= t; ++i)
        f *= i;
    return Rational(Integer(1), Integer(t) * f * f);
}

namespace detail {

inline QuasiPolynomial table_quasipolynomial(long long denominator, const std::vector<std::vector<long long>>& rows)
{
    std::vector<QuasiPolynomial::Row> out;
    for (const auto& row : rows) {
        QuasiPolynomial::Row r;
        for (long long c : row)
            r.emplace_back(Integer(c), Integer(denominator));
        out.push_back(std::move(r));
    }
    const std::size_t period = out.size();
    const std::size_t degree = out.front().size() - 1;
    return QuasiPolynomial(period, degree, std::move(out));
}

} // namespace detail

/// p(n,3) as the published six-case table, (1/108) * (...) by n mod 6.
inline const QuasiPolynomial& p3_table()
{
    // coefficients of n^0..n^3
    static const QuasiPolynomial qp = detail::table_quasipolynomial(108, {
                                                                             {0, -18, 0, 1},
                                                                             {2, -3, 0, 1},
                                                                             {52, -30, 0, 1},
                                                                             {-54, 9, 0, 1},
                                                                             {56, -30, 0, 1},
                                                                             {-2, -3, 0, 1},
                                                                         });
    return qp;
}

/// p(n,2,2) as the published twelve-case table, (1/6912) * (...) by n mod 12.
inline const QuasiPolynomial& p22_table()
{
    static const QuasiPolynomial qp = detail::table_quasipolynomial(6912, {
                                                                              {0, 288, -24, -20, 3},
                                                                              {-397, 492, -78, -20, 3},
                                                                              {304, -48, -24, -20, 3},
                                                                              {-2781, 1260, -78, -20, 3},
                                                                              {2816, -480, -24, -20, 3},
                                                                              {115, 492, -78, -20, 3}, // 155 is sometimes printed here; it is not integral at n = 5
                                                                              {-3024, 720, -24, -20, 3},
                                                                              {35, 492, -78, -20, 3},
                                                                              {3328, -480, -24, -20, 3},
                                                                              {-3213, 1260, -78, -20, 3},
                                                                              {-208, -48, -24, -20, 3},
                                                                              {547, 492, -78, -20, 3},
                                                                          });
    return qp;
}

namespace detail {

inline Integer require_integer(const Rational& r, const char* what)
{
    if (boost::multiprecision::denominator(r) != 1)
        throw internal_mismatch(std::string(what) + " produced the non-integer " + to_decimal(r));
    return boost::multiprecision::numerator(r);
}

// the m-parametrised p(n,3) cases
inline Integer p3_factored(long long n)
{
    const Integer m = [&]() -> Integer {
        switch (n % 6) {
        case 4: return (n + 2) / 6;
        case 5: return (n + 1) / 6;
        default: return n / 6;
        }
    }();
    switch (n % 6) {
    case 0: return m * (2 * m * m - 1);
    case 1: return m * m * (2 * m + 1); // m(2m^2+1) as sometimes printed is wrong from m = 2 on
    case 2: return m * (2 * m * m + 2 * m - 1);
    case 3: return m * (2 * m * m + 3 * m + 2);
    case 4: return (m - 1) * (2 * m * m - 1);
    default: return m * m * (2 * m - 1);
    }
}

} // namespace detail

/// p(n,3) from both published forms, which must agree.
inline Integer tabulated_p3(long long n)
{
    if (n < 1)
        throw invalid_query("n must be >= 1");
    const Integer by_table = detail::require_integer(p3_table().evaluate(n), "p(n,3) table");
    const Integer by_m = detail::p3_factored(n);
    if (by_table != by_m)
        throw internal_mismatch("p(" + std::to_string(n) + ",3): table gives " + by_table.str() +
                                ", factored form gives " + by_m.str());
    return by_table;
}

inline Integer tabulated_p22(long long n)
{
    if (n < 1)
        throw invalid_query("n must be >= 1");
    return detail::require_integer(p22_table().evaluate(n), "p(n,2,2) table");
}

// JSON: {"degree": d, "period": P, "rows": [[["num", "den"], ...], ...]}

inline nlohmann::json to_json(const QuasiPolynomial& qp)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : qp.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row)
            r.push_back({boost::multiprecision::numerator(c).str(), boost::multiprecision::denominator(c).str()});
        rows.push_back(std::move(r));
    }
    return {{"period", qp.period()}, {"degree", qp.degree()}, {"rows", std::move(rows)}};
}

inline QuasiPolynomial quasipolynomial_from_json(const nlohmann::json& j)
{
    std::vector<QuasiPolynomial::Row> rows;
    for (const auto& r : j.at("rows")) {
        QuasiPolynomial::Row row;
        for (const auto& c : r)
            row.emplace_back(Integer(c.at(0).get<std::string>()), Integer(c.at(1).get<std::string>()));
        rows.push_back(std::move(row));
    }
    return QuasiPolynomial(j.at("period").get<std::size_t>(), j.at("degree").get<std::size_t>(), std::move(rows));
}

} // namespace partition_gf
