#include <gtest/gtest.h>

#include "partition_gf/oeis.hpp"

#include <cstdlib>
#include <thread>

using namespace partition_gf;
using namespace partition_gf::oeis;

namespace {

const std::filesystem::path fixtures = PARTITION_GF_FIXTURES_DIR;

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("partition_gf_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

std::map<long long, Integer> oracle_values(const Oracle& f, long long n_max)
{
    std::map<long long, Integer> v;
    for (long long n = 1; n <= n_max; ++n)
        v.emplace(n, f(n));
    return v;
}

} // namespace

TEST(ParseBfile, Examples)
{
    const auto f = parse_bfile("A000005", "1 1\n2 2\n3 2\n");
    ASSERT_EQ(f.entries.size(), 3u);
    EXPECT_EQ(f.entries[2], (std::pair<long long, Integer>{3, 2}));
    EXPECT_FALSE(f.calibrated);

    const auto g = parse_bfile("A000005", "# header\n\n1 1\n# mid\n2 2\r\n");
    EXPECT_EQ(g.entries.size(), 2u);
}

TEST(ParseBfile, Errors)
{
    EXPECT_THROW(parse_bfile("A000005", "1 1\n2 \n"), parse_error);
    EXPECT_THROW(parse_bfile("A000005", "1 1\nx 2\n"), parse_error);
    EXPECT_THROW(parse_bfile("A000005", "2 1\n2 2\n"), parse_error);
    EXPECT_THROW(parse_bfile("A000005", "3 1\n1 2\n"), parse_error);
}

TEST(ParseBfile, RoundTripsThroughFormat)
{
    const auto f = parse_bfile("A008805", "0 1\n1 1\n2 3\n3 3\n4 6\n");
    EXPECT_EQ(parse_bfile("A008805", format_bfile(f)), f);
}

TEST(BfileName, Examples)
{
    EXPECT_EQ(bfile_name("A000005"), "b000005.txt");
    EXPECT_EQ(bfile_name("A128508"), "b128508.txt");
    EXPECT_THROW(bfile_name("B12"), not_found);
}

TEST(LoadFixture, Shipped)
{
    const auto d = load_fixture("A000005", fixtures);
    ASSERT_GE(d.entries.size(), 12u);
    EXPECT_EQ(d.entries[11], (std::pair<long long, Integer>{12, 6}));
    const auto nd = load_fixture("A049820", fixtures);
    EXPECT_EQ(nd.entries[5], (std::pair<long long, Integer>{6, 2}));
    EXPECT_THROW(load_fixture("A999999", fixtures), not_found);
}

TEST(CalibrateOffset, ShippedFixtures)
{
    const std::map<std::string, long long> expected{
        {"A000005", 0}, {"A049820", 0}, {"A008805", -4}, {"A128508", 0}};
    for (const auto& [id, offset] : expected) {
        const auto f = calibrate_offset(load_fixture(id, fixtures), find_known(id).oracle);
        EXPECT_TRUE(f.calibrated);
        EXPECT_EQ(f.offset, offset) << id;
    }
}

TEST(CalibrateOffset, NoAlignment)
{
    auto f = load_fixture("A000005", fixtures);
    EXPECT_THROW(calibrate_offset(f, find_known("A128508").oracle), parse_error);
    f.entries.resize(5);
    EXPECT_THROW(calibrate_offset(f, find_known("A000005").oracle), parse_error);
}

TEST(CrossCheck, ShippedFixturesPass)
{
    for (const std::string id : {"A000005", "A049820", "A008805", "A128508"}) {
        const auto report = check_known(id, fixtures, 400);
        EXPECT_TRUE(report.pass()) << id;
        EXPECT_GE(report.rows.size(), 390u) << id;
    }
}

TEST(CrossCheck, CorruptedValueIsReported)
{
    const auto& known = find_known("A008805");
    auto f = calibrate_offset(load_fixture("A008805", fixtures), known.oracle);
    f.entries[50].second += 1;
    const auto report = cross_check(f, oracle_values(known.oracle, 400));
    EXPECT_EQ(report.mismatches(), 1u);
    EXPECT_FALSE(report.pass());
    for (const auto& r : report.rows)
        if (!r.match)
            EXPECT_EQ(r.n, 54);
}

TEST(CrossCheck, Errors)
{
    const auto& known = find_known("A000005");
    auto raw = load_fixture("A000005", fixtures);
    EXPECT_THROW(cross_check(raw, oracle_values(known.oracle, 10)), invalid_query);
    const auto f = calibrate_offset(raw, known.oracle);
    EXPECT_THROW(cross_check(f, {{100000, 1}}), empty_overlap);
    EXPECT_THROW(find_known("A000001"), not_found);
}

TEST(FixturesDir, Resolution)
{
    EXPECT_EQ(resolve_fixtures_dir(std::string("/x/y")), std::filesystem::path("/x/y"));
    ::setenv("PARTITION_GF_FIXTURES", "/from/env", 1);
    EXPECT_EQ(resolve_fixtures_dir(), std::filesystem::path("/from/env"));
    EXPECT_EQ(resolve_fixtures_dir(std::string("/x/y")), std::filesystem::path("/x/y"));
    ::unsetenv("PARTITION_GF_FIXTURES");
    EXPECT_EQ(resolve_fixtures_dir(), std::filesystem::path(PARTITION_GF_FIXTURES_DIR));
}

TEST(WriteFixture, RoundTrip)
{
    const auto dir = scratch_dir("write");
    auto f = load_fixture("A128508", fixtures);
    write_fixture(f, dir);
    EXPECT_EQ(load_fixture("A128508", dir), f);
    EXPECT_FALSE(std::filesystem::exists(dir / "b128508.txt.tmp"));
    std::filesystem::remove_all(dir);
}

TEST(FetchRemote, LocalServerAndCache)
{
    std::ifstream in(fixtures / "b008805.txt");
    std::stringstream body;
    body << in.rdbuf();

    httplib::Server server;
    std::string requested;
    server.Get(R"(/mirror/(A\d{6})/(b\d{6}\.txt))", [&](const httplib::Request& req, httplib::Response& res) {
        requested = req.path;
        if (req.matches[1] == "A008805")
            res.set_content(body.str(), "text/plain");
        else
            res.status = 404;
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    const auto dir = scratch_dir("fetch");
    const std::string endpoint = "http://127.0.0.1:" + std::to_string(port) + "/mirror/";
    const auto f = fetch_remote("A008805", endpoint, dir);
    EXPECT_EQ(requested, "/mirror/A008805/b008805.txt");
    EXPECT_EQ(f, load_fixture("A008805", fixtures));
    EXPECT_EQ(load_fixture("A008805", dir), f);
    EXPECT_TRUE(check_known("A008805", dir).pass());

    EXPECT_THROW(fetch_remote("A000005", endpoint, dir), network_error);

    server.stop();
    worker.join();
    std::filesystem::remove_all(dir);
}

TEST(FetchRemote, Unreachable)
{
    const auto dir = scratch_dir("unreachable");
    EXPECT_THROW(fetch_remote("A000005", "http://127.0.0.1:1", dir), network_error);
    EXPECT_THROW(fetch_remote("A000005", "ftp://example", dir), network_error);
    EXPECT_FALSE(std::filesystem::exists(dir / "b000005.txt"));
}
