#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lifepde/commands.hpp"
#include "lifepde/config.hpp"

using namespace lifepde;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.h = 0.25;
    cfg.k = 0.1;
    cfg.lambda0 = {0.03, 0.05};
    cfg.paths = 2000;
    cfg.steps_per_year = 20;
    return cfg;
}

}  // namespace

TEST_CASE("defaults follow the standard parameter set") {
    const RunConfig cfg;
    CHECK(cfg.mu == 0.04);
    CHECK(cfg.sigma == 0.10);
    CHECK(cfg.lambda_bar == 0.02);
    CHECK(cfg.alpha == 0.10);
    CHECK(cfg.M == 10.0);
    CHECK(cfg.h == 0.1);
    CHECK(cfg.k == 0.01);
    CHECK(cfg.T == 10.0);
    CHECK(cfg.lambda0.size() == 12);
    CHECK(cfg.n == std::vector<int>{1});
    CHECK(cfg.format == "csv");
}

TEST_CASE("parsing") {
    std::istringstream in(
        "# comment\n"
        "mu = 0.03\n"
        "sigma=0\n"
        "lambda0 = 0.02, 0.04\n"
        "n = 1,2,5\n"
        "seed = 99\n"
        "format = json\n");
    const RunConfig cfg = RunConfig::parse(in);
    CHECK(cfg.mu == 0.03);
    CHECK(cfg.sigma == 0.0);
    CHECK(cfg.lambda0 == std::vector<double>{0.02, 0.04});
    CHECK(cfg.n == std::vector<int>{1, 2, 5});
    CHECK(cfg.seed == 99);
    CHECK(cfg.format == "json");
    CHECK(cfg.T == 10.0);  // untouched default

    SUBCASE("unknown key rejected") {
        std::istringstream bad("mu = 0.03\nnu = 1\n");
        CHECK_THROWS_AS(RunConfig::parse(bad), std::invalid_argument);
    }
    SUBCASE("bad number rejected") {
        std::istringstream bad("mu = zero\n");
        CHECK_THROWS_AS(RunConfig::parse(bad), std::invalid_argument);
        std::istringstream bad2("mu = 0.03 extra\n");
        CHECK_THROWS_AS(RunConfig::parse(bad2), std::invalid_argument);
    }
    SUBCASE("bad format rejected") {
        std::istringstream bad("format = yaml\n");
        CHECK_THROWS_AS(RunConfig::parse(bad), std::invalid_argument);
    }
    SUBCASE("non-integer n rejected") {
        std::istringstream bad("n = 1.5\n");
        CHECK_THROWS_AS(RunConfig::parse(bad), std::invalid_argument);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(RunConfig::parse_file("/nonexistent/path.cfg"),
                        std::invalid_argument);
    }
}

TEST_CASE("serialize / parse round trip is idempotent") {
    RunConfig cfg = small_config();
    cfg.discount_file = "curve.csv";
    cfg.out = "table.csv";
    const std::string once = cfg.serialize();
    std::istringstream in(once);
    const std::string twice = RunConfig::parse(in).serialize();
    CHECK(once == twice);
}

TEST_CASE("price command") {
    const RunConfig cfg = small_config();
    const CommandResult r = cmd_price(cfg);
    REQUIRE(r.exit_code == kOk);
    CHECK(r.output.rfind("lambda0,net_premium,P,", 0) == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 3);  // header + 2 rows

    SUBCASE("identical config gives byte-identical output") {
        const CommandResult r2 = cmd_price(cfg);
        CHECK(r.output == r2.output);
    }
    SUBCASE("multiple n rejected") {
        RunConfig multi = cfg;
        multi.n = {1, 2};
        CHECK(cmd_price(multi).exit_code == kConfigError);
    }
    SUBCASE("invalid grid surfaces as a config error") {
        RunConfig bad = cfg;
        bad.h = 0.3;
        CHECK(cmd_price(bad).exit_code == kConfigError);
    }
    SUBCASE("json format") {
        RunConfig js = cfg;
        js.format = "json";
        const CommandResult rj = cmd_price(js);
        CHECK(rj.exit_code == kOk);
        CHECK(rj.output.find("\"rows\"") != std::string::npos);
    }
}

TEST_CASE("converge command") {
    RunConfig cfg = small_config();
    cfg.n = {1, 2, 5, 10};
    const CommandResult r = cmd_converge(cfg);
    REQUIRE(r.exit_code == kOk);
    CHECK(r.output.rfind("lambda0,n,A_per_contract,B_per_contract,P,gap,bound\n", 0) == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 1 + 4 * 2);

    SUBCASE("gaps shrink as the portfolio grows") {
        // parse the gap column for the first lambda0
        std::istringstream lines(r.output);
        std::string line;
        std::getline(lines, line);  // header
        double prev_gap = 1e9;
        int seen = 0;
        while (std::getline(lines, line)) {
            std::istringstream ls(line);
            std::string field;
            for (int i = 0; i < 6; ++i) std::getline(ls, field, ',');
            if (line.rfind("0.03,", 0) == 0) {
                const double gap = std::stod(field);
                CHECK(gap < prev_gap);
                prev_gap = gap;
                ++seen;
            }
        }
        CHECK(seen == 4);
    }
    SUBCASE("sigma = 0 keeps the same ordering") {
        RunConfig det = cfg;
        det.sigma = 0.0;
        const CommandResult rd = cmd_converge(det);
        CHECK(rd.exit_code == kOk);
    }
    SUBCASE("empty n rejected") {
        RunConfig bad = cfg;
        bad.n = {};
        CHECK(cmd_converge(bad).exit_code == kConfigError);
    }
}

TEST_CASE("mc-check command") {
    RunConfig cfg = small_config();
    cfg.paths = 4000;
    cfg.lambda0 = {0.04};
    const CommandResult r = cmd_mc_check(cfg);
    REQUIRE(r.exit_code == kOk);
    CHECK(r.output.rfind("lambda0,quantity,pde_value,mc_mean,mc_stderr,paths,z\n", 0) == 0);

    SUBCASE("sigma = 0 gives exactly zero z-scores") {
        RunConfig det = cfg;
        det.sigma = 0.0;
        det.paths = 1000;
        const CommandResult rd = cmd_mc_check(det);
        REQUIRE(rd.exit_code == kOk);
        std::istringstream lines(rd.output);
        std::string line;
        std::getline(lines, line);
        while (std::getline(lines, line)) {
            CHECK(line.substr(line.rfind(',') + 1) == "0");
        }
    }
    SUBCASE("too few paths rejected") {
        RunConfig bad = cfg;
        bad.paths = 100;
        CHECK(cmd_mc_check(bad).exit_code == kConfigError);
    }
}

TEST_CASE("export-surface command") {
    const RunConfig cfg = small_config();
    for (const char* q : {"f", "g", "f0", "P", "net", "A", "B"}) {
        const CommandResult r = cmd_export_surface(cfg, q);
        REQUIRE(r.exit_code == kOk);
        CHECK(r.output.rfind("tau,", 0) == 0);
    }
    CHECK(cmd_export_surface(cfg, "bogus").exit_code == kConfigError);
}
