#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = weyl::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}

std::string strip_config(const std::string& s) {
    std::istringstream in(s);
    std::string line, acc;
    while (std::getline(in, line))
        if (line.rfind("# config:", 0) != 0) acc += line + "\n";
    return acc;
}

std::vector<std::string> csv_rows(const std::string& s) {
    std::istringstream in(s);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
}

std::string tmpfile(const std::string& name, const std::string& body) {
    std::string p = testing::TempDir() + name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST(Cli, LocalMassCsv) {
    auto r = run({"plancherel", "localmass", "--p", "2", "--fmax", "4"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto rows = csv_rows(r.out);
    std::vector<std::string> expect{"a,m_a", "0,1", "1,1", "2,7", "3,27", "4,108"};
    EXPECT_EQ(rows, expect);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"plancherel", "localmass", "--p", "2"}).rc, 1);
    EXPECT_EQ(run({"plancherel", "localmass", "--p", "4", "--fmax", "3"}).rc, 2);
    EXPECT_EQ(run({"foo"}).rc, 1);
    EXPECT_EQ(run({}).rc, 1);
    EXPECT_EQ(run({"gl1", "count", "--X", "2e9"}).rc, 2);
    EXPECT_EQ(run({"specfun", "eval", "--fn", "nope", "--at", "2"}).rc, 1);
    EXPECT_EQ(run({"specfun", "eval", "--fn", "zeta", "--at", "1"}).rc, 2);
    auto flagged = run({"tauber", "run", "--series", "zeta", "--X", "1000", "--t-cut", "0.05"});
    EXPECT_EQ(flagged.rc, 3);
    EXPECT_TRUE(nlohmann::json::parse(flagged.out)["flagged"].get<bool>());
}

TEST(Cli, HoloCountGridAndFixture) {
    auto r = run({"gl2", "holo", "count", "--xmax", "44", "--per-decade", "1"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_GE(rows.size(), 3u);
    EXPECT_EQ(rows[0], "X,N_D,prediction,ratio");
    EXPECT_EQ(rows[1].substr(0, 5), "10,0,");
    EXPECT_EQ(rows.back().substr(0, 5), "44,1,");
    EXPECT_NE(r.out.find("# fixtures:"), std::string::npos);
    EXPECT_NE(r.out.find("c6c7a442a78e1077"), std::string::npos);
    EXPECT_EQ(run({"gl2", "holo", "count", "--xmax", "44", "--dim-oracle", "/nonexistent.csv"}).rc, 2);
}

TEST(Cli, SeventeenDigitCells) {
    auto r = run({"gl1", "count", "--X", "100", "--out", "csv"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    std::vector<std::string> cells;
    std::stringstream ss(rows[1]);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    const std::string pred = cells[8];
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", std::strtod(pred.c_str(), nullptr));
    EXPECT_EQ(pred, buf);
    EXPECT_EQ(cells[1], "42927457");
}

TEST(Cli, JsonOutputAndSpecialValues) {
    auto r = run({"specfun", "eval", "--fn", "zeta", "--at", "2", "--out", "json"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["value_re"].get<double>(), weyl::pi * weyl::pi / 6, 1e-14);
    EXPECT_EQ(j["config"]["command"], "specfun eval");
    auto c = run({"specfun", "eval", "--fn", "zeta", "--at", "0.5+14.134725141734693i", "--out", "csv"});
    ASSERT_EQ(c.rc, 0) << c.err;
    EXPECT_EQ(csv_rows(c.out).size(), 2u);
}

TEST(Cli, ConfigFileAndOverride) {
    auto cfg = tmpfile("weyl_lm.cfg", "# local masses\np = 3\nfmax = 2\n");
    auto a = run({"plancherel", "localmass", "--config", cfg});
    ASSERT_EQ(a.rc, 0) << a.err;
    EXPECT_EQ(csv_rows(a.out), (std::vector<std::string>{"a,m_a", "0,1", "1,6", "2,57"}));
    auto b = run({"plancherel", "localmass", "--config", cfg, "--p", "2"});
    ASSERT_EQ(b.rc, 0) << b.err;
    EXPECT_EQ(csv_rows(b.out), (std::vector<std::string>{"a,m_a", "0,1", "1,1", "2,7"}));
    EXPECT_NE(b.out.find("\"p\":\"2\""), std::string::npos);
    EXPECT_EQ(run({"plancherel", "localmass", "--config", "/nonexistent.cfg"}).rc, 1);
}

TEST(Cli, OutputToFile) {
    std::string path = testing::TempDir() + "weyl_out.json";
    std::remove(path.c_str());
    auto r = run({"gl1", "count", "--X", "50", "--out", path});
    ASSERT_EQ(r.rc, 0) << r.err;
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    auto j = nlohmann::json::parse(ss.str());
    EXPECT_EQ(j["config"]["command"], "gl1 count");
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
    std::vector<std::string> base{"tauber", "run", "--series", "zeta", "--X", "500", "--out", "json"};
    auto a = run(base), b = run(base);
    ASSERT_EQ(a.rc, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto t4 = base;
    t4.insert(t4.end(), {"--threads", "4"});
    auto c = run(t4);
    auto ja = nlohmann::json::parse(a.out), jc = nlohmann::json::parse(c.out);
    ja.erase("config");
    jc.erase("config");
    EXPECT_EQ(ja.dump(), jc.dump());
    auto h1 = run({"gl2", "holo", "count", "--xmax", "1000"});
    auto h2 = run({"gl2", "holo", "count", "--xmax", "1000", "--threads", "3"});
    EXPECT_EQ(strip_config(h1.out), strip_config(h2.out));
}

TEST(Cli, ConductorValidateVerdicts) {
    auto r = run({"conductor", "validate", "--name", "square", "--out", "csv"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_NE(rows[4].find("false"), std::string::npos);
    EXPECT_NE(rows[5].find("false"), std::string::npos);
    EXPECT_NE(rows[1].find("true"), std::string::npos);
}
