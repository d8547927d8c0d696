#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqblocks/cli.hpp"

#include <json.hpp>

using namespace seqblocks;
using nlohmann::json;

namespace {

json run_json(const std::vector<std::string>& args, int expect_code = 0) {
    auto result = cli::run(args);
    REQUIRE(result.exit_code == expect_code);
    return json::parse(result.output);
}

}  // namespace

TEST_CASE("classify 1/n") {
    json j = run_json({"classify", "1/n"});
    CHECK(j["status"] == "ok");
    CHECK(j["block"] == "G");
    CHECK(j["profile"] == json::array({"0", "0"}));
}

TEST_CASE("classify the Table 1 forms through the CLI") {
    CHECK(run_json({"classify", "n*(sinq(n)-1)"})["block"] == "A");
    CHECK(run_json({"classify", "n*(sinq(n)-1)"})["profile"] == json::array({"-inf", "0"}));
    CHECK(run_json({"classify", "n*sinq(n)"})["profile"] == json::array({"-inf", "+inf"}));
    CHECK(run_json({"classify", "sinq(n)"})["block"] == "B");
}

TEST_CASE("numeric classification agrees here") {
    json j = run_json({"classify", "n", "--numeric"});
    CHECK(j["block"] == "F");
    CHECK(j["method"] == "numeric");
    CHECK(j["profile"] == json::array({"+inf", "+inf"}));
    json g = run_json({"classify", "1/n", "--numeric", "--horizon", "5000"});
    CHECK(g["block"] == "G");
}

TEST_CASE("identical argv produce byte-identical output") {
    std::vector<std::string> args = {"connect", "n*sinq(n)", "--target", "B"};
    CHECK(cli::run(args).output == cli::run(args).output);
    CHECK(cli::run({"metrics"}).output == cli::run({"metrics"}).output);
    CHECK(cli::run({"graph", "--level", "micro", "--format", "dot"}).output ==
          cli::run({"graph", "--level", "micro", "--format", "dot"}).output);
}

TEST_CASE("metrics prints the paper statistics exactly") {
    json j = run_json({"metrics"});
    CHECK(j["coverage"] == "2/3");
    CHECK(j["consistency"] == "1");
    CHECK(j["jaccard"] == "2/3");
    CHECK(j["hamming"] == "35/49");
    CHECK(j["counts"]["n11"] == 28);
    CHECK(j["counts"]["n10"] == 14);
    CHECK(j["counts"]["n01"] == 0);
    CHECK(j["counts"]["n00"] == 7);
}

TEST_CASE("connect reports obstructions with exit code 0") {
    auto result = cli::run({"connect", "piecewise(mod 2; 0, 1)", "--target", "F"});
    CHECK(result.exit_code == 0);
    json j = json::parse(result.output);
    CHECK(j["status"] == "obstruction");
    CHECK(j["kind"] == "obstruction");
    CHECK(j["reason"] == "InfinitelyManyZeros");
    CHECK(j["target"] == "F");
}

TEST_CASE("connect returns a validated connector") {
    json j = run_json({"connect", "0-n", "--target", "F"});
    CHECK(j["status"] == "ok");
    CHECK(j["kind"] == "connector");
    CHECK(j["pattern"] == "NegateEF");
    CHECK(j["product_profile"] == json::array({"+inf", "+inf"}));
}

TEST_CASE("representative with and without a shift") {
    json j = run_json({"representative", "G"});
    CHECK(j["expr"] == "piecewise(mod 1; n^-1)");
    json s = run_json({"representative", "G", "--shift", "1/2"});
    CHECK(s["profile"] == json::array({"1/2", "1/2"}));
}

TEST_CASE("transfer and code subcommands") {
    json t = run_json({"transfer", "n", "--from", "F", "--to", "B", "--depth", "4"});
    CHECK(t["to"] == "B");
    CHECK(t["code"]["depth"] == 4);
    CHECK(t["recovered_code"] == t["code"]["value"]);

    json c = run_json({"code", "0", "--coder", "weighted", "--depth", "3"});
    CHECK(c["code"] == "81/512");
    CHECK(c["coder"] == "weighted");
}

TEST_CASE("subspace verdicts through the CLI") {
    json yes = run_json({"subspace", "--union", "B,G"});
    CHECK(yes["is_subspace"] == true);
    json no = run_json({"subspace", "--union", "A,C,G"});
    CHECK(no["is_subspace"] == false);
    CHECK(no["witness"]["kind"] == "AdditionEscape");
    CHECK(no["witness"]["result_block"] == "D");
}

TEST_CASE("matrix output in both formats") {
    json j = run_json({"matrix", "--level", "micro"});
    CHECK(j["entries"][6] == json::array({0, 0, 0, 0, 0, 0, 0}));  // row G
    CHECK(j["blocks"][0] == "A");

    auto csv = cli::run({"matrix", "--level", "macro", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind(",A,B,C,D,E,F,G\n", 0) == 0);
    CHECK(csv.output.find("A,0,1,1,1,1,1,1\n") != std::string::npos);
}

TEST_CASE("graph emits DOT text") {
    auto dot = cli::run({"graph", "--level", "macro", "--format", "dot"});
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.rfind("digraph macroscale", 0) == 0);
}

TEST_CASE("regions lists the seven profile patterns") {
    json j = run_json({"regions"});
    REQUIRE(j["regions"].size() == 7);
    CHECK(j["regions"][0]["block"] == "A");
    CHECK(j["regions"][0]["l1"] == "-inf");
    CHECK(j["regions"][6]["constraint"] == "l1 == l2");
    CHECK(j["regions"][1]["constraint"] == "l1 < l2");
    CHECK(j["regions"][3]["description"] == "fully-unbounded oscillatory");
}

TEST_CASE("parse errors surface verbatim with offsets and a nonzero exit") {
    auto result = cli::run({"classify", "n +"});
    CHECK(result.exit_code == 1);
    json j = json::parse(result.output);
    CHECK(j["status"] == "error");
    CHECK(j["offset"] == 3);

    auto bad_div = cli::run({"classify", "1/(n+1)"});
    CHECK(bad_div.exit_code == 1);
    CHECK(json::parse(bad_div.output)["message"] ==
          "division requires a nonzero rational constant or a power of n");
}

TEST_CASE("unknown block letters and block mismatches are errors") {
    CHECK(cli::run({"representative", "Z"}).exit_code == 1);
    CHECK(cli::run({"connect", "n", "--target", "X"}).exit_code == 1);

    auto mismatch = cli::run({"transfer", "sinq(n)", "--from", "F", "--to", "G"});
    CHECK(mismatch.exit_code == 1);
    json j = json::parse(mismatch.output);
    CHECK(j["status"] == "error");
}

TEST_CASE("SEQBLOCKS_DEPTH overrides the default coder depth") {
    json before = run_json({"code", "n"});
    CHECK(before["depth"] == 8);
    setenv("SEQBLOCKS_DEPTH", "3", 1);
    json overridden = run_json({"code", "n"});
    CHECK(overridden["depth"] == 3);
    json explicit_depth = run_json({"code", "n", "--depth", "5"});
    CHECK(explicit_depth["depth"] == 5);
    unsetenv("SEQBLOCKS_DEPTH");
    CHECK(run_json({"code", "n"})["depth"] == 8);
}

TEST_CASE("help is available") {
    auto help = cli::run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("piecewise") != std::string::npos);
    auto sub_help = cli::run({"classify", "--help"});
    CHECK(sub_help.exit_code == 0);
}
