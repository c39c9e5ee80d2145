#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "nilgen/json_io.hpp"

// Drives the installed-style binary end to end through a shell.

namespace {

struct CliRun {
    int exit_code = -1;
    std::string stdout_text;
};

CliRun run_cli(const std::string& args) {
    const std::string command = std::string(NILGEN_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.stdout_text.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nilgen::Json payload_of(const CliRun& run) {
    REQUIRE(run.exit_code == 0);
    const nilgen::Json envelope = nilgen::Json::parse(run.stdout_text);
    REQUIRE(envelope.at("status") == "ok");
    REQUIRE(envelope.contains("elapsed_ms"));
    return envelope.at("payload");
}

}  // namespace

TEST_CASE("phi subcommand: exact and brute force") {
    const nilgen::Json p = payload_of(run_cli("phi --divisors 2,2 --k 2 --exact"));
    CHECK(p.at("exact").at("value").at("num") == "3");
    CHECK(p.at("exact").at("value").at("den") == "8");

    const nilgen::Json b = payload_of(run_cli("phi --divisors 12 --k 2 --brute-force"));
    CHECK(b.at("brute_force").at("count") == "96");
    CHECK(b.at("brute_force").at("total") == "144");

    // Round trip: the emitted group re-parses under the schema.
    CHECK(nilgen::group_from_json(b.at("group")).order() == 12);
}

TEST_CASE("phi subcommand: trivial group via empty divisors") {
    const nilgen::Json p = payload_of(run_cli("phi --divisors '' --k 0 --exact"));
    CHECK(p.at("exact").at("value").at("num") == "1");
    CHECK(p.at("exact").at("value").at("den") == "1");
}

TEST_CASE("phi subcommand: Monte Carlo is seed-deterministic") {
    const std::string args = "phi --divisors 12 --k 2 --monte-carlo --trials 4000 --seed 5";
    const nilgen::Json a = payload_of(run_cli(args));
    const nilgen::Json b = payload_of(run_cli(args));
    CHECK(a.at("monte_carlo") == b.at("monte_carlo"));
    CHECK(a.at("monte_carlo").at("seed") == 5);
}

TEST_CASE("bounds subcommand: profile and divisors forms") {
    const nilgen::Json p = payload_of(run_cli("bounds --profile 2:3:3 --epsilon 1/2"));
    CHECK(p.at("report").at("rank_bound_k") == 5);
    CHECK(p.at("report").at("len_bound_k") == 4);
    CHECK(!p.at("report").contains("pak_bound_k"));

    const nilgen::Json cube =
        payload_of(run_cli("bounds --divisors 2,2,2 --epsilon 1/10 --exact-min-k"));
    CHECK(cube.at("report").at("rank_bound_k") == 8);
    CHECK(cube.at("report").at("len_bound_k") == 7);
    CHECK(cube.at("report").at("exact_min_k") == 7);

    const nilgen::Json d =
        payload_of(run_cli("bounds --divisors 12 --epsilon 1/2 --exact-min-k"));
    CHECK(d.at("report").at("rank_bound_k") == 3);
    CHECK(d.at("report").at("len_bound_k") == 4);
    CHECK(d.at("report").at("pak_bound_k") == 7);
    CHECK(d.at("report").at("exact_min_k").get<long>() <= 3);
}

TEST_CASE("bounds subcommand rejects decimal epsilon") {
    CHECK(run_cli("bounds --divisors 12 --epsilon 0.5").exit_code == 2);
}

TEST_CASE("bounds subcommand requires a group or a profile") {
    CHECK(run_cli("bounds --epsilon 1/2").exit_code == 2);
    // an explicitly empty divisor list is the trivial group
    const nilgen::Json p = payload_of(run_cli("bounds --divisors '' --epsilon 1/2"));
    CHECK(p.at("report").at("rank_bound_k") == 2);
    CHECK(p.at("report").at("len_bound_k") == 1);
}

TEST_CASE("tightness subcommand") {
    const nilgen::Json p = payload_of(run_cli("tightness --mode len --n 4 --epsilon 1/4"));
    CHECK(p.at("k") == 4);
    CHECK(p.at("phi").at("num") == "315");
    CHECK(p.at("phi").at("den") == "1024");
    CHECK(p.at("claim_holds") == true);

    const nilgen::Json r = payload_of(run_cli("tightness --mode rank --n 1 --epsilon 1/2"));
    CHECK(r.at("k") == 0);
    CHECK(r.at("phi").at("num") == "0");
    CHECK(r.at("claim_holds") == true);

    const nilgen::Json big = payload_of(run_cli("tightness --mode len --n 20 --epsilon 1/100"));
    CHECK(big.at("claim_holds") == true);
}

TEST_CASE("ahsp subcommand plans and simulates from an instance file") {
    const char* path = "cli_test_instance.json";
    {
        std::ofstream out(path);
        out << R"({"group": {"divisors": [2, 2]}, "hidden_subgroup_generators": [[1, 0]]})";
    }
    const nilgen::Json p = payload_of(
        run_cli(std::string("ahsp ") + path +
                " --epsilon 1/2 --strategy len --trials 5000 --seed 11"));
    CHECK(p.at("plan").at("k") == 2);
    CHECK(p.at("plan").at("strategy") == "len");
    CHECK(p.at("orthogonal_subgroup").at("order") == "2");
    const double rate = p.at("simulation").at("successes").get<double>() / 5000.0;
    CHECK(rate >= 0.5);
    std::remove(path);
}

TEST_CASE("ahsp subcommand: full hidden subgroup recovers immediately") {
    const char* path = "cli_test_instance_full.json";
    {
        std::ofstream out(path);
        out << R"({"group": {"divisors": [2, 2]},)"
            << R"( "hidden_subgroup_generators": [[1, 0], [0, 1]]})";
    }
    const nilgen::Json p = payload_of(
        run_cli(std::string("ahsp ") + path + " --epsilon 1/2 --trials 200 --seed 2"));
    CHECK(p.at("orthogonal_subgroup").at("order") == "1");
    CHECK(p.at("simulation").at("successes") == 200);
    std::remove(path);
}

TEST_CASE("ahsp subcommand rejects a bad instance") {
    CHECK(run_cli("ahsp does_not_exist.json --epsilon 1/2").exit_code == 2);
}

TEST_CASE("regev subcommand") {
    const nilgen::Json n = payload_of(run_cli("regev --n-bits 2048"));
    CHECK(n.at("repetitions") == 48);
    CHECK(n.at("prior_repetitions") == 50);

    CHECK(payload_of(run_cli("regev --n-bits 1")).at("repetitions") == 3);
    CHECK(payload_of(run_cli("regev --rank 10")).at("repetitions") == 12);
    CHECK(run_cli("regev").exit_code == 2);
}

TEST_CASE("exit codes: invalid input and resource limits") {
    CHECK(run_cli("phi --divisors 1 --k 1").exit_code == 2);
    // 1021 is prime; 1021^3 tuples exceed the brute-force cap.
    CHECK(run_cli("phi --divisors 1021 --k 3 --brute-force").exit_code == 3);
    // flag misuse maps to the invalid-input code as well
    CHECK(run_cli("phi --divisors 4 --k 1 --exact --monte-carlo").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output flag writes the envelope to a file") {
    const char* path = "cli_test_output.json";
    const CliRun run = run_cli(std::string("regev --rank 3 --output ") + path);
    CHECK(run.exit_code == 0);
    CHECK(run.stdout_text.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    nilgen::Json envelope;
    in >> envelope;
    CHECK(envelope.at("payload").at("repetitions") == 5);
    std::remove(path);
}
