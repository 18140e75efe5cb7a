#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wirtinger/cli.hpp"

using namespace wirtinger;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::vector<double> csv_numbers(const std::string& line) {
    std::vector<double> out;
    std::istringstream is(line);
    for (std::string cell; std::getline(is, cell, ',');) out.push_back(cell.empty() ? NAN : std::stod(cell));
    return out;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("alpha, human output") {
        const Run r = cli({"alpha", "--p", "2", "--q", "2", "--r", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("3.141592654") != std::string::npos);
        CHECK(r.out.find("CLOSED_FORM_EQUALITY") != std::string::npos);
    }

    TEST_CASE("alpha, JSON output round-trips") {
        const Run r = cli({"alpha", "--p", "inf", "--q", "2", "--r", "2", "--json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["alpha"].get<double>() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
        CHECK(j["p"] == "inf");
        CHECK(j.dump() + "\n" == r.out);

        const Run s = cli({"alpha", "--p", "2", "--q", "8", "--r", "2", "--json"});
        const auto k = nlohmann::json::parse(s.out);
        CHECK(k.dump() + "\n" == s.out);
        CHECK(k["regime"] == "STRICT_INEQUALITY");
        CHECK(k["interior_roots"].size() == 1);
    }

    TEST_CASE("alpha, rescaled to (0, 1)") {
        const Run base = cli({"alpha", "--p", "2", "--q", "8", "--r", "2", "--json"});
        const Run scaled = cli({"alpha", "--p", "2", "--q", "8", "--r", "2", "--a", "0", "--b", "1", "--json"});
        const double alpha = nlohmann::json::parse(base.out)["alpha"];
        const double ab = nlohmann::json::parse(scaled.out)["alpha_rescaled"];
        CHECK(ab == doctest::Approx(std::pow(2.0, 0.5 + 0.125) * alpha).epsilon(1e-14));
    }

    TEST_CASE("exit codes") {
        const Run inadmissible = cli({"alpha", "--p", "2", "--q", "inf", "--r", "3"});
        CHECK(inadmissible.code == 2);
        CHECK(inadmissible.err.find("q = inf requires r = 2") != std::string::npos);
        CHECK(cli({"alpha", "--p", "0.5", "--q", "2", "--r", "2"}).code == 2);
        CHECK(cli({"alpha", "--p", "2", "--q", "2"}).code == 2);
        CHECK(cli({"alpha", "--p", "2", "--q", "2", "--r", "2", "--a", "1", "--b", "0"}).code == 2);
        CHECK(cli({"frobnicate"}).code == 2);
        CHECK(cli({}).code == 2);
        CHECK(cli({"--help"}).code == 0);
        CHECK(cli({"profile", "--p", "2", "--q", "2", "--r", "2", "--n", "100"}).code == 2);
    }

    TEST_CASE("numerical failure maps to exit 3") {
        // A tolerance the quadrature cannot meet within its level budget.
        const Run r = cli({"alpha", "--p", "2", "--q", "8", "--r", "2", "--tol", "1e-300"});
        CHECK(r.code == 3);
    }

    TEST_CASE("scan CSV") {
        const Run r = cli({"scan", "--p", "2", "--r", "2", "--q-from", "5", "--q-to", "7", "--n", "21", "--parallel"});
        REQUIRE(r.code == 0);
        const auto ls = lines(r.out);
        CHECK(ls.front() == "p,q,r,alpha,alpha_qq,gap,m_star,regime,quad_error,error");
        int rows = 0;
        for (const auto& line : ls) {
            if (line.empty() || line[0] == '#' || line[0] == 'p') continue;
            ++rows;
            const auto v = csv_numbers(line.substr(0, line.find(",CLOSED") != std::string::npos
                                                           ? line.find(",CLOSED")
                                                           : line.find(",STRICT") != std::string::npos
                                                                 ? line.find(",STRICT")
                                                                 : line.find(",INCONCLUSIVE")));
            const double q = v[1];
            const double gap = v[5];
            if (q <= 5.0) CHECK(std::abs(gap) <= 1e-7 * v[4]);
            if (q >= 6.9) CHECK(gap > 0.0);
        }
        CHECK(rows == 21);
        CHECK(r.out.find("# q_star in (") != std::string::npos);
        CHECK(r.out.find('\r') == std::string::npos);
    }

    TEST_CASE("scan with r = 3 shows strict rows above q = 10") {
        const Run r = cli({"scan", "--p", "2", "--r", "3", "--q-from", "8", "--q-to", "12", "--n", "9", "--out", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.dump() + "\n" == r.out);
        for (const auto& row : j["rows"]) {
            if (row["q"].get<double>() > 10.0) CHECK(row["regime"] == "STRICT_INEQUALITY");
        }
    }

    TEST_CASE("two-point scan") {
        const Run r = cli({"scan", "--p", "2", "--r", "2", "--q-from", "3", "--q-to", "4", "--n", "2"});
        REQUIRE(r.code == 0);
        int rows = 0;
        for (const auto& line : lines(r.out)) {
            if (!line.empty() && line[0] != '#' && line[0] != 'p') ++rows;
        }
        CHECK(rows == 2);
    }

    TEST_CASE("profile CSV") {
        const Run r = cli({"profile", "--p", "2", "--q", "2", "--r", "2", "--n", "257"});
        REQUIRE(r.code == 0);
        const auto ls = lines(r.out);
        CHECK(ls.front() == "x,u,du");
        int rows = 0;
        double err = 0.0;
        for (const auto& line : ls) {
            if (line[0] == '#' || line[0] == 'x') continue;
            ++rows;
            const auto v = csv_numbers(line);
            err = std::max(err, std::abs(v[1] - std::cos(std::numbers::pi * v[0])));
            if (v[0] == 0.0) {
                CHECK(v[1] == 1.0);
                CHECK(v[2] == 0.0);
            }
        }
        CHECK(rows == 257);
        CHECK(err <= 1e-6);
    }

    TEST_CASE("profile residual block") {
        const std::string path = "wirtinger_cli_profile_test.csv";
        const Run r = cli({"profile", "--p", "2", "--q", "8", "--r", "2", "--n", "513", "--out", path});
        REQUIRE(r.code == 0);
        std::ifstream in(path);
        int residuals = 0;
        for (std::string line; std::getline(in, line);) {
            if (line.rfind("# ", 0) != 0 || line.find("gamma") != std::string::npos) continue;
            ++residuals;
            CHECK(std::stod(line.substr(line.find('=') + 1)) <= 1e-6);
        }
        CHECK(residuals == 6);
        std::remove(path.c_str());
    }

    TEST_CASE("verify quick") {
        const Run r = cli({"verify", "--suite", "quick", "--json"});
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j.dump() + "\n" == r.out);
    }
}
