#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

using namespace partition_gf;

int main(int argc, char** argv)
{
    CLI::App app{"Partitions with fixed differences between largest and smallest parts"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::optional<std::string> fixtures_flag;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--fixtures-dir", fixtures_flag, "OEIS b-file directory (env PARTITION_GF_FIXTURES)");

    long long n = 0;
    std::string distances;
    std::string method = "all";
    auto* compute = app.add_subcommand("compute", "Count partitions of n with the given distances");
    compute->add_option("--n", n, "Number to partition")->required();
    compute->add_option("--distances", distances, "Comma-separated distances, or 0 alone")->required();
    compute->add_option("--method", method, "Counting method")
        ->check(CLI::IsMember({"enumerate", "series", "quasipoly", "all"}))
        ->capture_default_str();

    std::size_t order = 0;
    auto* series = app.add_subcommand("series", "Print generating-function coefficients q^0..q^order");
    series->add_option("--distances", distances)->required();
    series->add_option("--order", order)->required();

    std::string suite = "all";
    cli::VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run identity and cross-route checks");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"routes", "identities", "asymptotics", "oeis", "all"}))
        ->capture_default_str();
    verify->add_option("--t-max", vopt.t_max)->capture_default_str();
    verify->add_option("--n-max", vopt.n_max)->capture_default_str();
    verify->add_option("--order", vopt.order)->capture_default_str();
    verify->add_option("--threads", vopt.threads, "Worker threads (0: all cores)")->capture_default_str();

    std::optional<std::string> output;
    std::optional<std::size_t> fit_order;
    auto* fit = app.add_subcommand("fit", "Fit the quasipolynomial of a closed-form generating function");
    fit->add_option("--distances", distances)->required();
    fit->add_option("--output", output, "Write the quasipolynomial JSON here");
    fit->add_option("--order", fit_order, "Expansion order used for fitting and validation");

    auto* oeis_cmd = app.add_subcommand("oeis", "Cross-check against OEIS b-files");
    oeis_cmd->require_subcommand(1);
    std::vector<std::string> ids;
    long long oeis_n_max = 400;
    auto* check = oeis_cmd->add_subcommand("check", "Compare cached b-files with computed values");
    check->add_option("--id", ids, "Sequence ids (default: every cached fixture)");
    check->add_option("--n-max", oeis_n_max)->capture_default_str();
    std::string fetch_id;
    std::string endpoint = "https://oeis.org";
    auto* fetch = oeis_cmd->add_subcommand("fetch", "Download a b-file into the fixture cache");
    fetch->add_option("--id", fetch_id)->required();
    fetch->add_option("--endpoint", endpoint)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::success : cli::usage_failure;
    }

    static const std::map<std::string, cli::Format> formats{
        {"text", cli::Format::text}, {"csv", cli::Format::csv}, {"json", cli::Format::json}};
    const cli::Format format = formats.at(format_name);
    const auto fixtures_dir = oeis::resolve_fixtures_dir(fixtures_flag);

    try {
        if (*compute)
            return cli::cmd_compute(n, distances, method, format, std::cout);
        if (*series)
            return cli::cmd_series(distances, order, format, std::cout);
        if (*verify) {
            vopt.fixtures_dir = fixtures_dir;
            return cli::cmd_verify(suite, vopt, format, std::cout);
        }
        if (*fit)
            return cli::cmd_fit(distances, output, fit_order, format, std::cout);
        if (*check)
            return cli::cmd_oeis_check(ids, fixtures_dir, oeis_n_max, format, std::cout);
        if (*fetch)
            return cli::cmd_oeis_fetch(fetch_id, endpoint, fixtures_dir, std::cout);
    } catch (const cli::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::usage_failure;
    } catch (const invalid_distance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::usage_failure;
    } catch (const out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::usage_failure;
    } catch (const network_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::io_failure;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::io_failure;
    } catch (const not_found& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::io_failure;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::io_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::verification_failure;
    }
    return cli::usage_failure;
}
