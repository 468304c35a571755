#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irrcount/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using irrcount::cli::dispatch;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> csv_rows(const std::string& text)
{
    std::vector<std::string> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
}

}  // namespace

TEST_CASE("list syntax")
{
    using irrcount::cli::parse_list;
    CHECK(parse_list("4..7") == std::vector<std::uint64_t>{4, 5, 6, 7});
    CHECK(parse_list("3,5,9") == std::vector<std::uint64_t>{3, 5, 9});
    CHECK(parse_list("1,3..5") == std::vector<std::uint64_t>{1, 3, 4, 5});
    CHECK(parse_list("6") == std::vector<std::uint64_t>{6});
    CHECK_THROWS_AS(parse_list("5..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_list("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_list("-1"), std::invalid_argument);
}

TEST_CASE("pi-star table")
{
    const auto r = run({"pi-star", "--p", "2", "--n", "4..13"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "p,n,pi,pi_star,lower,upper,verdict");
    CHECK(rows[1].rfind("2,4,3,1,", 0) == 0);
    CHECK(rows[10].rfind("2,13,630,155,", 0) == 0);
    CHECK(r.out.rfind("# config: ", 0) == 0);
}

TEST_CASE("bijection-check report")
{
    const auto r = run({"bijection-check", "--k", "2", "--h", "3"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["family_size"] == "81");
    CHECK(j["distinct"] == 81);
    CHECK(j["config"]["subcommand"] == "bijection-check");
    CHECK(j["config"]["--k"] == "2");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({"census", "--n", "99"}).code == 2);
    CHECK(run({"census", "--n", "4", "--h", "50"}).code == 2);
    const auto unknown = run({"census", "--n", "2", "--bogus"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bijection-check", "--k", "2"}).code == 2);
    CHECK(run({"lift", "--n", "5", "--h", "4", "--p", "2"}).code == 2);
    CHECK(run({"lift", "--n", "6", "--h", "3"}).code == 2);
    CHECK(run({"bound", "--n", "7", "--h", "3", "--p", "6"}).code == 2);
    CHECK(run({"bound", "--n", "7", "--h", "3", "--p", "x"}).code == 2);
    CHECK(run({"--out", "xml", "census", "--n", "2"}).code == 2);
    CHECK(run({"--budget", "-5", "census", "--n", "2"}).code == 2);
    CHECK(run({"--budget", "10", "census", "--n", "2", "--h", "1"}).code == 2);
    CHECK(run({"--budget", "16", "census", "--n", "2", "--h", "1"}).code == 0);
}

TEST_CASE("help exits cleanly")
{
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("JSON reports round-trip")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--out", "json", "census", "--n", "2", "--h", "2", "--spec"},
             {"lift", "--n", "5", "--h", "3", "--p", "2"},
             {"bound", "--n", "7", "--h", "5"},
             {"--out", "json", "bound-table", "--n-list", "5,7", "--h-list", "3"},
             {"cross-check", "--k", "2", "--h", "3"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(json::parse(j.dump()) == j);
        CHECK(j.contains("config"));
        CHECK(j["config"]["subcommand"] == args[args[0] == "--out" ? 2 : 0]);
    }
}

TEST_CASE("lift report fields")
{
    const auto j = json::parse(run({"lift", "--n", "5", "--h", "3", "--p", "2"}).out);
    CHECK(j["n"] == 5);
    CHECK(j["h"] == "3");
    CHECK(j["p"] == 2);
    CHECK(j["pi_star"] == "1");
    CHECK(j["sum_lifts"] == "5");
    CHECK(j["thm12_rhs"] == "8/5");
    CHECK(j["pass"] == true);

    const auto e = json::parse(run({"lift", "--n", "5", "--h", "3", "--p", "2", "--enumerate"}).out);
    REQUIRE(e["sources"].size() == 1);
    CHECK(e["sources"][0]["g"] == "1 0 1 0 0 1");
    CHECK(e["sources"][0]["lifts"].size() == 5);
}

TEST_CASE("exit code 1 exactly when a verdict fails")
{
    // The analytic lower bound on pi* is negative at n = 5, so certified mode degrades to 0.
    const auto fail = run({"bound", "--n", "5", "--h", "3", "--mode", "certified"});
    CHECK(fail.code == 1);
    const auto j = json::parse(fail.out);
    CHECK(j["pass"] == false);
    CHECK(j["lifting"]["degraded"] == true);
    bool any_fail = false;
    for (const auto& v : j["verdicts"]) any_fail = any_fail || v["verdict"] == "FAIL";
    CHECK(any_fail);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"lift", "--n", "5", "--h", "3", "--p", "2"},
             {"bound", "--n", "5", "--h", "3"},
             {"--out", "json", "census", "--n", "3", "--h", "1", "--spec"}}) {
        const auto r = run(args);
        const auto doc = json::parse(r.out);
        bool failed = doc.contains("pass") && doc["pass"] == false;
        if (doc.contains("verdicts"))
            for (const auto& v : doc["verdicts"]) failed = failed || v["verdict"] == "FAIL";
        CHECK(r.code == (failed ? 1 : 0));
    }
}

TEST_CASE("reports do not depend on the worker count")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"census", "--n", "3", "--h", "1", "--spec"},
             {"census", "--n", "3", "--h", "2", "--mode", "sample", "--samples", "2000"},
             {"lift", "--n", "7", "--h", "5", "--p", "2"},
             {"corollary-check", "--n", "4..14"}}) {
        std::vector<std::string> base = {"--jobs", "1"};
        base.insert(base.end(), args.begin(), args.end());
        const auto one = run(base);
        for (const char* jobs : {"4", "16"}) {
            base[1] = jobs;
            CHECK(run(base).out == one.out);
        }
    }
}

TEST_CASE("automatic prime selection")
{
    CHECK(json::parse(run({"bound", "--n", "7", "--h", "5"}).out)["p"] == 2);
    CHECK(json::parse(run({"--budget", "1000", "bound", "--n", "7", "--h", "4"}).out)["p"] == 37);
    CHECK(json::parse(run({"bound", "--n", "5", "--h", "6"}).out)["p"] == 5);
}

TEST_CASE("sampled census is labelled as an estimate")
{
    const auto r = run({"census", "--n", "3", "--h", "2", "--mode", "sample", "--samples", "500"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sample-ESTIMATE") != std::string::npos);
}

TEST_CASE("out-file receives the report")
{
    const std::string path = "irrcount_cli_test_out.csv";
    std::remove(path.c_str());
    const auto r = run({"--out-file", path, "corollary-check", "--n", "4..6"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(csv_rows(ss.str()).size() == 4);
    std::remove(path.c_str());
}

TEST_CASE("budget falls back to the environment")
{
    ::setenv("IRRCOUNT_BUDGET", "10", 1);
    CHECK(run({"census", "--n", "2", "--h", "1"}).code == 2);
    CHECK(run({"--budget", "100", "census", "--n", "2", "--h", "1"}).code == 0);
    ::setenv("IRRCOUNT_BUDGET", "500", 1);
    const auto j = json::parse(run({"bijection-check", "--k", "1", "--h", "2"}).out);
    CHECK(j["config"]["--budget"] == "500");
    CHECK(j["config"]["--seed"] == "1");
    ::unsetenv("IRRCOUNT_BUDGET");
    CHECK(run({"census", "--n", "2", "--h", "1"}).code == 0);
}
