#pragma once

#include "partition_gf.hpp"
#include "partition_gf/oeis.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace partition_gf::cli {

enum exit_code : int { success = 0, verification_failure = 1, usage_failure = 2, io_failure = 3 };

enum class Format { text, csv, json };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * A parsed --distances argument: either the lone value 0 (all parts equal)
 * or a list of positive distances.
 */
struct Query {
    std::optional<DistanceSpec> spec;

    bool difference_zero() const noexcept { return !spec.has_value(); }
    std::string label() const { return spec ? spec->to_string() : "0"; }
};

inline Query parse_distances(const std::string& text)
{
    std::vector<long long> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("distances must be comma-separated non-negative integers, got '" + text + "'");
        try {
            values.push_back(std::stoll(item));
        } catch (const std::out_of_range&) {
            throw usage_error("distance '" + item + "' is too large");
        }
    }
    if (values.empty() || text.back() == ',')
        throw usage_error("distances must be comma-separated non-negative integers, got '" + text + "'");
    if (values.size() == 1 && values[0] == 0)
        return {};
    if (std::find(values.begin(), values.end(), 0) != values.end())
        throw usage_error("0 is only allowed alone (difference-zero mode)");
    return {DistanceSpec(std::move(values))};
}

/// Sum of q^m/(1 - q^m) over m >= 1: the divisor-function series P_0(q).
inline TruncatedSeries divisor_series(std::size_t order)
{
    TruncatedSeries acc(order);
    for (std::size_t m = 1; m <= order; ++m) {
        TruncatedSeries s(order);
        s[m] = 1;
        s.divide_by_one_minus_q_pow(m);
        acc += s;
    }
    return acc;
}

/// Coefficients 0..order, from the closed form when one exists, else from the direct sum.
inline TruncatedSeries series_for(const Query& q, std::size_t order)
{
    if (q.difference_zero())
        return divisor_series(order);
    if (q.spec->has_closed_form())
        return expand_factored(closed_form(*q.spec), order);
    return direct_series_specified(*q.spec, order);
}

inline Integer compute_value(const Query& q, long long n, const std::string& method)
{
    if (method == "enumerate") {
        if (q.difference_zero())
            return count_fixed_diff(n, 0);
        return q.spec->k() == 1 ? count_fixed_diff(n, q.spec->t()) : count_specified(n, *q.spec);
    }
    if (method == "series")
        return series_for(q, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
    if (method == "quasipoly") {
        if (q.difference_zero() || !q.spec->has_closed_form())
            throw usage_error("method quasipoly needs t > max(1, k); p(n,0) and p(n,1) are not quasipolynomials");
        const QuasiPolynomial qp = qp_from_closed_form(*q.spec, default_fit_order(*q.spec));
        return partition_gf::detail::require_integer(qp.evaluate(n), "quasipolynomial");
    }
    throw usage_error("unknown method '" + method + "'");
}

struct OutputRecord {
    long long n;
    std::string distances;
    std::string method;
    Integer value;
};

inline int cmd_compute(long long n, const std::string& distances, const std::string& method, Format format,
                       std::ostream& out)
{
    if (n < 1)
        throw usage_error("--n must be >= 1");
    const Query q = parse_distances(distances);

    std::vector<std::string> methods;
    if (method == "all") {
        methods = {"enumerate", "series"};
        if (!q.difference_zero() && q.spec->has_closed_form())
            methods.push_back("quasipoly");
    } else {
        methods = {method};
    }

    std::vector<OutputRecord> records;
    for (const auto& m : methods)
        records.push_back({n, q.label(), m, compute_value(q, n, m)});
    const bool agree = std::all_of(records.begin(), records.end(),
                                   [&](const OutputRecord& r) { return r.value == records.front().value; });

    switch (format) {
    case Format::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records)
            arr.push_back({{"n", r.n}, {"distances", r.distances}, {"method", r.method}, {"value", r.value.str()}});
        out << nlohmann::json{{"records", arr}, {"agree", agree}}.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "n,distances,method,value\n";
        for (const auto& r : records)
            out << r.n << ",\"" << r.distances << "\"," << r.method << "," << r.value << "\n";
        break;
    case Format::text:
        for (const auto& r : records)
            out << "p(" << r.n << "; " << r.distances << ") = " << r.value << "  [" << r.method << "]\n";
        if (!agree)
            out << "methods disagree\n";
        break;
    }
    return agree ? success : verification_failure;
}

inline int cmd_series(const std::string& distances, std::size_t order, Format format, std::ostream& out)
{
    if (order < 1)
        throw usage_error("--order must be >= 1");
    const Query q = parse_distances(distances);
    const TruncatedSeries s = series_for(q, order);
    switch (format) {
    case Format::json: {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : s.coeffs())
            coeffs.push_back(c.str());
        out << nlohmann::json{{"spec", q.label()}, {"order", order}, {"coeffs", coeffs}}.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "n,coefficient\n";
        for (std::size_t i = 0; i <= order; ++i)
            out << i << "," << s[i] << "\n";
        break;
    case Format::text:
        for (std::size_t i = 0; i <= order; ++i)
            out << (i ? "," : "") << s[i];
        out << "\n";
        break;
    }
    return success;
}

struct CheckResult {
    std::string id;
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    long long t_max = 6;
    long long n_max = 150;
    std::size_t order = 60;
    unsigned threads = 0; // 0: hardware concurrency
    std::filesystem::path fixtures_dir;
};

namespace detail {

inline std::string pad(long long v)
{
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

using Check = std::function<CheckResult()>;

inline CheckResult guarded(const std::string& id, const std::function<std::pair<bool, std::string>()>& body)
{
    try {
        auto [ok, detail] = body();
        return {id, ok, detail};
    } catch (const std::exception& e) {
        return {id, false, e.what()};
    }
}

inline std::vector<Check> route_checks(const VerifyOptions& opt)
{
    std::vector<Check> checks;
    const auto n_max = static_cast<std::size_t>(opt.n_max);
    checks.push_back([n_max] {
        return guarded("routes.fixed.t=01", [n_max]() -> std::pair<bool, std::string> {
            const TruncatedSeries s = direct_series_fixed_diff(1, n_max);
            for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
                const Integer e = count_fixed_diff(n, 1);
                if (s[static_cast<std::size_t>(n)] != e || e != n - divisor_count(n))
                    return {false, "mismatch at n = " + std::to_string(n)};
            }
            return {true, "direct sum = enumeration = n - d(n)"};
        });
    });
    for (long long t = 2; t <= opt.t_max; ++t) {
        checks.push_back([t, n_max] {
            return guarded("routes.fixed.t=" + pad(t), [t, n_max]() -> std::pair<bool, std::string> {
                const DistanceSpec spec = DistanceSpec::single(t);
                const TruncatedSeries closed = expand_factored(closed_form_fixed_diff(t), n_max);
                const TruncatedSeries direct = direct_series_fixed_diff(t, n_max);
                const QuasiPolynomial qp = qp_from_closed_form(spec, std::max(n_max, default_fit_order(spec)));
                for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
                    const auto i = static_cast<std::size_t>(n);
                    const Integer e = count_fixed_diff(n, t);
                    if (closed[i] != e || direct[i] != e || qp.evaluate(n) != Rational(e))
                        return {false, "mismatch at n = " + std::to_string(n)};
                }
                return {true, "closed form = direct sum = enumeration = quasipolynomial"};
            });
        });
    }
    // specified distances, k = 2, 3 with t_i <= min(4, t_max)
    const long long tmax_i = std::min<long long>(4, opt.t_max);
    std::vector<std::vector<long long>> specs;
    for (long long a = 1; a <= tmax_i; ++a)
        for (long long b = 1; b <= tmax_i; ++b) {
            specs.push_back({a, b});
            for (long long c = 1; c <= tmax_i; ++c)
                specs.push_back({a, b, c});
        }
    for (const auto& d : specs) {
        checks.push_back([d, n_max] {
            const DistanceSpec spec(d);
            return guarded("routes.specified." + spec.to_string(), [spec, n_max]() -> std::pair<bool, std::string> {
                const TruncatedSeries direct = direct_series_specified(spec, n_max);
                std::optional<TruncatedSeries> closed;
                if (spec.t() > spec.k())
                    closed = expand_factored(closed_form_specified(spec), n_max);
                for (long long n = 1; n <= static_cast<long long>(n_max); ++n) {
                    const auto i = static_cast<std::size_t>(n);
                    const Integer e = count_specified(n, spec);
                    if (direct[i] != e || (closed && (*closed)[i] != e))
                        return {false, "mismatch at n = " + std::to_string(n)};
                }
                return {true, closed ? "closed form = direct sum = enumeration" : "direct sum = enumeration (t = k)"};
            });
        });
    }
    return checks;
}

inline std::vector<Check> identity_checks(const VerifyOptions& opt)
{
    std::vector<Check> checks;
    const std::size_t order = opt.order;
    for (long long t = 0; t <= std::max<long long>(10, opt.t_max); ++t)
        checks.push_back([t] {
            return guarded("identities.qbinomial.t=" + pad(t), [t]() -> std::pair<bool, std::string> {
                return {qbinomial_alternating_sum(t, 0) == pochhammer_q(static_cast<std::size_t>(t)),
                        "sum_j [t j](-1)^j q^C(j+1,2) = (q)_t"};
            });
        });
    for (long long t = 2; t <= opt.t_max; ++t)
        for (long long k = 1; k < t; ++k)
            checks.push_back([t, k, order] {
                return guarded("identities.heine.t=" + pad(t) + ".k=" + pad(k),
                               [t, k, order]() -> std::pair<bool, std::string> {
                                   return {heine_check(1, 1, t + 2, k + 1, order, heine_cutoff(k + 1, order)),
                                           "a = b = q, c = q^(t+2), z = q^(k+1)"};
                               });
            });
    checks.push_back([order] {
        return guarded("identities.p1", [order]() -> std::pair<bool, std::string> {
            return {p1_identity_check(order), "three forms of sum p(n,1) q^n"};
        });
    });
    checks.push_back([order] {
        return guarded("identities.displayed_forms", [order]() -> std::pair<bool, std::string> {
            const FactoredRational p2(IntPolynomial::monomial(4), {{1, 1}, {2, 2}});
            const FactoredRational p3(IntPolynomial{0, 0, 0, 0, 0, 1, 1, 1, -1}, {{2, 2}, {3, 2}});
            const FactoredRational p22(IntPolynomial::monomial(9) * IntPolynomial{1, 1, 1, 1, -1},
                                       {{2, 1}, {3, 2}, {4, 2}});
            const bool ok = expand_factored(p2, order) == expand_factored(closed_form_fixed_diff(2), order) &&
                            expand_factored(p3, order) == expand_factored(closed_form_fixed_diff(3), order) &&
                            expand_factored(p22, order) == expand_factored(closed_form_specified(DistanceSpec({2, 2})), order);
            return {ok, "P_2, P_3, P_{2,2} displays match the constructions"};
        });
    });
    for (long long t = 2; t <= opt.t_max; ++t)
        checks.push_back([t, order] {
            return guarded("identities.k1_reduction.t=" + pad(t), [t, order]() -> std::pair<bool, std::string> {
                return {expand_factored(closed_form_specified(DistanceSpec::single(t)), order) ==
                            expand_factored(closed_form_fixed_diff(t), order),
                        "specified-distance form with k = 1 equals P_t"};
            });
        });
    return checks;
}

inline std::vector<Check> asymptotic_checks(const VerifyOptions& opt)
{
    std::vector<Check> checks;
    for (long long t = 2; t <= opt.t_max; ++t)
        checks.push_back([t] {
            return guarded("asymptotics.leading.t=" + pad(t), [t]() -> std::pair<bool, std::string> {
                const DistanceSpec spec = DistanceSpec::single(t);
                const Rational lead = qp_leading_coefficient(qp_from_closed_form(spec, default_fit_order(spec)));
                return {lead == expected_leading(t), "leading coefficient " + to_decimal(lead)};
            });
        });
    return checks;
}

inline std::vector<Check> oeis_checks(const VerifyOptions& opt)
{
    std::vector<Check> checks;
    for (const auto& known : oeis::known_sequences()) {
        if (!std::filesystem::exists(opt.fixtures_dir / oeis::bfile_name(known.id)))
            continue;
        const std::string id = known.id;
        const auto dir = opt.fixtures_dir;
        checks.push_back([id, dir] {
            return guarded("oeis." + id, [id, dir]() -> std::pair<bool, std::string> {
                const auto report = oeis::check_known(id, dir);
                return {report.pass(), std::to_string(report.rows.size()) + " values, " +
                                           std::to_string(report.mismatches()) + " mismatches"};
            });
        });
    }
    return checks;
}

inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i; (i = next++) < checks.size();)
                results[i] = checks[i]();
        }));
    for (auto& w : workers)
        w.get();
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return results;
}

} // namespace detail

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt)
{
    std::vector<detail::Check> checks;
    auto add = [&](std::vector<detail::Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (suite == "routes" || suite == "all")
        add(detail::route_checks(opt));
    if (suite == "identities" || suite == "all")
        add(detail::identity_checks(opt));
    if (suite == "asymptotics" || suite == "all")
        add(detail::asymptotic_checks(opt));
    if (suite == "oeis" || suite == "all")
        add(detail::oeis_checks(opt));
    if (checks.empty() && suite != "oeis")
        throw usage_error("unknown suite '" + suite + "' (routes, identities, asymptotics, oeis, all)");
    return detail::run_checks(checks, opt.threads);
}

inline int cmd_verify(const std::string& suite, const VerifyOptions& opt, Format format, std::ostream& out)
{
    if (opt.t_max < 2 || opt.n_max < 1 || opt.order < 1)
        throw usage_error("need --t-max >= 2, --n-max >= 1, --order >= 1");
    const auto results = run_suite(suite, opt);
    const bool all_pass = !results.empty() && std::all_of(results.begin(), results.end(),
                                                          [](const CheckResult& r) { return r.pass; });
    switch (format) {
    case Format::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
        out << nlohmann::json{{"suite", suite}, {"checks", arr}, {"pass", all_pass}}.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "id,pass,detail\n";
        for (const auto& r : results)
            out << r.id << "," << (r.pass ? "pass" : "FAIL") << ",\"" << r.detail << "\"\n";
        break;
    case Format::text:
        for (const auto& r : results)
            out << (r.pass ? "[pass] " : "[FAIL] ") << r.id << "  " << r.detail << "\n";
        out << (all_pass ? "all " : "some ") << "checks " << (all_pass ? "passed" : "failed") << " ("
            << results.size() << ")\n";
        break;
    }
    return all_pass ? success : verification_failure;
}

inline int cmd_fit(const std::string& distances, const std::optional<std::string>& output,
                   std::optional<std::size_t> order, Format format, std::ostream& out)
{
    const Query q = parse_distances(distances);
    if (q.difference_zero() || !q.spec->has_closed_form())
        throw out_of_range("cannot fit " + q.label() +
                           ": a quasipolynomial exists only when t > max(1, k); P_0(q) and P_1(q) are not "
                           "rational functions (p(n,0) = d(n), p(n,1) = n - d(n))");
    const DistanceSpec& spec = *q.spec;
    const QuasiPolynomial qp = qp_from_closed_form(spec, order.value_or(default_fit_order(spec)));
    const std::string json = to_json(qp).dump();
    if (output) {
        std::ofstream f(*output, std::ios::trunc);
        if (!f || !(f << json << "\n"))
            throw io_error("cannot write " + *output);
    }
    const std::string lead = to_decimal(qp_leading_coefficient(qp));
    switch (format) {
    case Format::json:
        out << json << "\n";
        break;
    case Format::csv:
        out << "distances,period,degree,leading\n\"" << spec.to_string() << "\"," << qp.period() << ","
            << qp.degree() << "," << lead << "\n";
        break;
    case Format::text:
        out << "period " << qp.period() << "\ndegree " << qp.degree() << "\nleading " << lead << "\n";
        break;
    }
    return success;
}

inline int cmd_oeis_check(std::vector<std::string> ids, const std::filesystem::path& dir, long long n_max,
                          Format format, std::ostream& out)
{
    if (ids.empty())
        for (const auto& known : oeis::known_sequences())
            if (std::filesystem::exists(dir / oeis::bfile_name(known.id)))
                ids.push_back(known.id);
    if (ids.empty())
        throw not_found("no fixtures in " + dir.string());
    bool all_pass = true;
    nlohmann::json arr = nlohmann::json::array();
    if (format == Format::csv)
        out << "id,offset,values,mismatches\n";
    for (const auto& id : ids) {
        const auto report = oeis::check_known(id, dir, n_max);
        const auto fixture = oeis::calibrate_offset(oeis::load_fixture(id, dir), oeis::find_known(id).oracle);
        all_pass = all_pass && report.pass();
        switch (format) {
        case Format::json: {
            nlohmann::json bad = nlohmann::json::array();
            for (const auto& r : report.rows)
                if (!r.match)
                    bad.push_back({{"n", r.n}, {"fixture", r.expected.str()}, {"computed", r.computed.str()}});
            arr.push_back({{"id", id}, {"offset", fixture.offset}, {"values", report.rows.size()}, {"mismatches", bad}});
            break;
        }
        case Format::csv:
            out << id << "," << fixture.offset << "," << report.rows.size() << "," << report.mismatches() << "\n";
            break;
        case Format::text:
            out << (report.pass() ? "[pass] " : "[FAIL] ") << id << "  index = n + " << fixture.offset << ", "
                << report.rows.size() << " values, " << report.mismatches() << " mismatches\n";
            for (const auto& r : report.rows)
                if (!r.match)
                    out << "  n = " << r.n << ": fixture " << r.expected << ", computed " << r.computed << "\n";
            break;
        }
    }
    if (format == Format::json)
        out << nlohmann::json{{"sequences", arr}, {"pass", all_pass}}.dump() << "\n";
    return all_pass ? success : verification_failure;
}

inline int cmd_oeis_fetch(const std::string& id, const std::string& endpoint, const std::filesystem::path& dir,
                          std::ostream& out)
{
    const auto f = oeis::fetch_remote(id, endpoint, dir);
    out << "fetched " << f.entries.size() << " values of " << id << " into " << (dir / oeis::bfile_name(id)).string()
        << "\n";
    return success;
}

} // namespace partition_gf::cli
