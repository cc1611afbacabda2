#include <cstdio>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "chenlorenz/rational.hpp"

#include "cli_util.hpp"

using namespace chenlorenz;
using chenlorenz::testutil::cli_path_from_env;
using chenlorenz::testutil::run_command;
using nlohmann::json;

TEST_CASE("decide subcommand") {
    std::string cli = cli_path_from_env();

    auto ok = run_command(cli + " decide 45 5 28");
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j["verdict"] == "NonEquivalent-ResultantNonzero");
    CHECK(j["m0"] == "291933448125");

    auto oos = run_command(cli + " decide 2 3 1");
    CHECK(oos.exit_code == 2);
    CHECK(json::parse(oos.out)["verdict"] == "OutOfScope");

    CHECK(run_command(cli + " decide 45 5 x").exit_code == 1);
    CHECK(run_command(cli + " decide 45 5").exit_code == 1);
}

TEST_CASE("m0 / equilibria / charpoly subcommands") {
    std::string cli = cli_path_from_env();

    json m0 = json::parse(run_command(cli + " m0 45 5 28").out);
    CHECK(m0["m0"] == "291933448125");
    CHECK(m0["m0_approx"].get<double>() == Catch::Approx(2.9193e11).epsilon(1e-4));

    json eq = json::parse(run_command(cli + " equilibria chen 45 5 28").out);
    CHECK(eq["count"] == 3);
    CHECK(eq["points"][0]["label"] == "Q1");
    CHECK(eq["points"][1]["x"]["radicand"] == "55");
    CHECK(eq["points"][1]["z"]["rational"] == "11");

    json cp = json::parse(run_command(cli + " charpoly chen 45 5 28 --at Q1").out);
    CHECK(cp["c2"] == "22");
    CHECK(cp["c1"] == "-410");
    CHECK(cp["c0"] == "-2475");

    // Rational and decimal inputs are equivalent.
    json cp2 = json::parse(run_command(cli + " charpoly lorenz 10 8/3 28").out);
    json cp3 = json::parse(run_command(cli + " charpoly lorenz 10.0 8/3 28.0").out);
    CHECK(cp2 == cp3);

    CHECK(run_command(cli + " charpoly lorenz 10 8/3 1 --at P2").exit_code == 1);
}

TEST_CASE("verify-factorization subcommand") {
    std::string cli = cli_path_from_env();
    json j = json::parse(run_command(cli + " verify-factorization").out);
    REQUIRE(j["peeled_factors"].size() == 3);
    for (const auto& f : j["peeled_factors"]) CHECK(f["divided_exactly"] == true);
    CHECK(j["printed_quintic_match"] == false);
    CHECK_FALSE(j["quintic_diffs"].empty());
}

TEST_CASE("scan subcommand") {
    std::string cli = cli_path_from_env();
    std::string base = cli + " scan --a 45 --a-max 45 --a-step 1 --b 5 --b-max 5 "
                             "--b-step 1 --c 28 --c-max 28 --c-step 1";
    auto single = run_command(base);
    CHECK(single.exit_code == 0);
    CHECK(single.out == "a,b,c,m0_sign,on_b0,on_a2c,on_c1,has3eq\n45,5,28,1,0,0,0,1\n");

    // Byte-identical output independent of thread count.
    std::string grid = cli + " scan --a 1 --a-max 3 --a-step 1 --b 1 --b-max 3 "
                             "--b-step 1 --c -2 --c-max 2 --c-step 1";
    auto t1 = run_command(grid + " --threads 1");
    auto t4 = run_command(grid + " --threads 4");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == t4.out);

    // min > max is a usage error.
    CHECK(run_command(cli + " scan --a 5 --a-max 1 --a-step 1 --b 1 --b-max 1 "
                            "--b-step 1 --c 1 --c-max 1 --c-step 1")
              .exit_code == 1);
}

TEST_CASE("simulate subcommand") {
    std::string cli = cli_path_from_env();
    auto r = run_command(cli + " simulate lorenz 10 8/3 28 --t 2 --dt 0.01");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,x,y,z");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows == 201);

    auto origin = run_command(cli + " simulate chen 45 5 28 --t 1 --dt 0.01 --x0 0 0 0");
    CHECK(origin.exit_code == 0);
    std::istringstream ois(origin.out);
    std::string line;
    std::getline(ois, line); // header
    while (std::getline(ois, line))
        CHECK(line.substr(line.find(',')) == ",0,0,0");
}

TEST_CASE("lyapunov subcommand") {
    std::string cli = cli_path_from_env();
    auto r = run_command(cli + " lyapunov chen 45 5 28 --t 250 --dt 0.002");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["lambda_max"].get<double>() > 0);
    CHECK(j["label"] == "heuristic evidence of chaos");
}
