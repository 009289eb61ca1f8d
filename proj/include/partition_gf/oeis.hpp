#pragma once

#include "counting.hpp"
#include "errors.hpp"
#include "integer.hpp"

#include "httplib.h"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef PARTITION_GF_FIXTURES_DIR
#define PARTITION_GF_FIXTURES_DIR "data/oeis"
#endif

namespace partition_gf::oeis {

/*
 * Values of one OEIS sequence as (index, value) pairs. The sequence index
 * relates to our n by index = n + offset; the offset is unknown until
 * calibrate_offset() has matched the data against an oracle.
 */
struct SequenceFixture {
    std::string id;
    std::vector<std::pair<long long, Integer>> entries;
    long long offset = 0;
    bool calibrated = false;

    long long n_of(long long index) const noexcept { return index - offset; }

    friend bool operator==(const SequenceFixture&, const SequenceFixture&) = default;
};

/// "A008805" -> "008805"; rejects anything that is not A followed by six digits.
inline std::string id_digits(const std::string& id)
{
    static const std::regex pattern("A([0-9]{6})");
    std::smatch m;
    if (!std::regex_match(id, m, pattern))
        throw not_found("not an OEIS sequence id: '" + id + "'");
    return m[1];
}

inline std::string bfile_name(const std::string& id) { return "b" + id_digits(id) + ".txt"; }

namespace detail {

inline bool is_integer_token(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace detail

/// Parses b-file text: one "index value" pair per line, '#' starts a comment line.
inline SequenceFixture parse_bfile(const std::string& id, const std::string& text)
{
    SequenceFixture f;
    f.id = id;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::string index, value, extra;
        fields >> index >> value;
        if (value.empty() || (fields >> extra) || !detail::is_integer_token(index) || !detail::is_integer_token(value))
            throw parse_error(id + " line " + std::to_string(line_no) + ": expected 'index value', got '" + line + "'");
        const long long idx = std::stoll(index);
        if (!f.entries.empty() && idx <= f.entries.back().first)
            throw parse_error(id + " line " + std::to_string(line_no) + ": indices must increase strictly");
        f.entries.emplace_back(idx, Integer(value[0] == '+' ? value.substr(1) : value));
    }
    return f;
}

inline std::string format_bfile(const SequenceFixture& f)
{
    std::string out;
    for (const auto& [i, v] : f.entries)
        out += std::to_string(i) + " " + v.str() + "\n";
    return out;
}

/// --fixtures-dir flag, else $PARTITION_GF_FIXTURES, else the built-in data directory.
inline std::filesystem::path resolve_fixtures_dir(const std::optional<std::string>& flag = std::nullopt)
{
    if (flag && !flag->empty())
        return *flag;
    if (const char* env = std::getenv("PARTITION_GF_FIXTURES"); env && *env)
        return env;
    return PARTITION_GF_FIXTURES_DIR;
}

inline SequenceFixture load_fixture(const std::string& id, const std::filesystem::path& dir)
{
    const auto path = dir / bfile_name(id);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw not_found("no fixture for " + id + " at " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_bfile(id, text.str());
}

/// Writes the fixture as a b-file through a temporary file and a rename.
inline void write_fixture(const SequenceFixture& f, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    const auto path = dir / bfile_name(f.id);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot write " + tmp.string());
        out << format_bfile(f);
        if (!out.flush())
            throw io_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

/*
 * GET <endpoint>/<id>/b<digits>.txt, parse it, and store it in cache_dir.
 * endpoint is "scheme://host[:port][/prefix]", e.g. https://oeis.org.
 */
inline SequenceFixture fetch_remote(const std::string& id, const std::string& endpoint,
                                    const std::filesystem::path& cache_dir)
{
    static const std::regex url("((?:https?)://[^/]+)(/.*)?");
    std::smatch m;
    if (!std::regex_match(endpoint, m, url))
        throw network_error("unsupported endpoint '" + endpoint + "'");
    std::string prefix = m[2].matched ? m[2].str() : "";
    while (!prefix.empty() && prefix.back() == '/')
        prefix.pop_back();
    const std::string path = prefix + "/" + id + "/" + bfile_name(id);

    httplib::Client client(m[1].str());
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res)
        throw network_error("GET " + endpoint + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw network_error("GET " + endpoint + path + " returned HTTP " + std::to_string(res->status));

    SequenceFixture f = parse_bfile(id, res->body);
    write_fixture(f, cache_dir);
    return f;
}

/// n -> p(n, ...) for a sequence whose values we can compute.
using Oracle = std::function<Integer(long long n)>;

struct KnownSequence {
    std::string id;
    std::string description;
    Oracle oracle;
};

/// Sequences giving p(n,t) for fixed t = 0..10.
inline const std::vector<KnownSequence>& known_sequences()
{
    static const std::vector<KnownSequence> table = [] {
        std::vector<KnownSequence> v;
        auto fixed = [](long long t) { return [t](long long n) { return count_fixed_diff(n, t); }; };
        v.push_back({"A000005", "p(n,0) = d(n)", fixed(0)});
        v.push_back({"A049820", "p(n,1) = n - d(n)", fixed(1)});
        v.push_back({"A008805", "p(n,2)", fixed(2)});
        v.push_back({"A128508", "p(n,3)", fixed(3)});
        for (long long t = 4; t <= 10; ++t)
            v.push_back({"A2185" + std::to_string(63 + t), "p(n," + std::to_string(t) + ")", fixed(t)});
        return v;
    }();
    return table;
}

inline const KnownSequence& find_known(const std::string& id)
{
    for (const auto& s : known_sequences())
        if (s.id == id)
            return s;
    throw not_found("no oracle is registered for " + id);
}

/*
 * Finds the offset (index = n + offset) under which the first min_run
 * entries match the oracle, trying offsets by increasing magnitude.
 */
inline SequenceFixture calibrate_offset(SequenceFixture f, const Oracle& oracle, std::size_t min_run = 10,
                                        long long max_shift = 20)
{
    if (f.entries.size() < min_run)
        throw parse_error(f.id + " has " + std::to_string(f.entries.size()) + " entries; calibration needs " +
                          std::to_string(min_run));
    auto matches = [&](long long offset) {
        for (std::size_t i = 0; i < min_run; ++i) {
            const long long n = f.entries[i].first - offset;
            if (n < 1 || oracle(n) != f.entries[i].second)
                return false;
        }
        return true;
    };
    for (long long mag = 0; mag <= max_shift; ++mag) {
        for (long long offset : {-mag, mag}) {
            if (matches(offset)) {
                f.offset = offset;
                f.calibrated = true;
                return f;
            }
            if (mag == 0)
                break;
        }
    }
    throw parse_error("no offset within +-" + std::to_string(max_shift) + " aligns " + f.id + " with its oracle");
}

struct CrossCheckRow {
    long long n;
    long long index;
    Integer expected;
    Integer computed;
    bool match;
};

struct CrossCheckReport {
    std::string id;
    std::vector<CrossCheckRow> rows;

    std::size_t mismatches() const
    {
        std::size_t c = 0;
        for (const auto& r : rows)
            c += r.match ? 0 : 1;
        return c;
    }
    bool pass() const { return mismatches() == 0; }
};

/// Compares fixture values with computed values over the n both cover.
inline CrossCheckReport cross_check(const SequenceFixture& f, const std::map<long long, Integer>& computed)
{
    if (!f.calibrated)
        throw invalid_query(f.id + ": calibrate the offset before cross-checking");
    CrossCheckReport report{f.id, {}};
    for (const auto& [index, value] : f.entries) {
        const long long n = f.n_of(index);
        auto it = computed.find(n);
        if (it == computed.end())
            continue;
        report.rows.push_back({n, index, value, it->second, value == it->second});
    }
    if (report.rows.empty())
        throw empty_overlap(f.id + ": fixture and computed ranges do not intersect");
    return report;
}

/// Loads, calibrates against the oracle, and cross-checks over n <= n_max.
inline CrossCheckReport check_known(const std::string& id, const std::filesystem::path& dir, long long n_max = 400)
{
    const KnownSequence& known = find_known(id);
    SequenceFixture f = calibrate_offset(load_fixture(id, dir), known.oracle);
    std::map<long long, Integer> computed;
    for (const auto& [index, value] : f.entries) {
        const long long n = f.n_of(index);
        if (n >= 1 && n <= n_max)
            computed.emplace(n, known.oracle(n));
    }
    return cross_check(f, computed);
}

} // namespace partition_gf::oeis
