#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zred_cli/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = zred::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TextOutput) {
    EXPECT_EQ(run({"sigma", "1", "5", "2"}).out, "10011\n");
    EXPECT_EQ(run({"gamma", "1", "3", "-2"}).out, "3,1,1\n");
    EXPECT_EQ(run({"beta", "1", "5", "2"}).out, "1,3,1,1\n");
    EXPECT_EQ(run({"mu", "--", "-2", "3", "1"}).out, "(2,5,1)\n");
    EXPECT_EQ(run({"tau", "1,1"}).out, "(1,3,1)\n");
    EXPECT_EQ(run({"xi", "3,1,1"}).out, "(2,6,-4)\n");
    EXPECT_EQ(run({"caliber", "2", "10", "4"}).out, "5\n");
    EXPECT_EQ(run({"denjoy-period", "1", "5", "2"}).out, "1010111\n");
    EXPECT_EQ(run({"cf", "7/2", "--parity", "odd"}).out, "3,1,1\n");
    EXPECT_EQ(run({"surd-cf", "--p", "5", "--q", "2", "--delta", "17", "--kind", "neg", "--terms", "5"}).out,
              "5,3,2,2,3\n");
    EXPECT_EQ(run({"reduce", "--op", "z", "1", "5", "2"}).out,
              "pre-period: \ncycle: (1,5,2) (2,5,1) (4,7,2) (4,9,4) (2,7,4)\n");
    EXPECT_EQ(run({"cycles", "--delta", "5"}).out, "(1,3,1)\n");
}

TEST(Cli, JsonOutput) {
    using nlohmann::json;
    EXPECT_EQ(json::parse(run({"pell", "17"}).out), json::parse(R"({"t":"8","u":"2","epsilon":-4})"));
    EXPECT_EQ(json::parse(run({"--json", "beta", "1", "5", "2"}).out), json::parse("[1,3,1,1]"));
    EXPECT_EQ(json::parse(run({"--json", "sigma", "1", "5", "2"}).out), json("10011"));
    EXPECT_EQ(json::parse(run({"--json", "tau", "1,1"}).out), json::parse(R"(["1","3","1"])"));
    const json c = json::parse(run({"--json", "reduce", "1", "5", "2"}).out);
    EXPECT_TRUE(c["pre_period"].empty());
    EXPECT_EQ(c["cycle"].size(), 5u);
    const json v = json::parse(run({"--json", "verify", "--suite", "rotation", "--delta-max", "50"}).out);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0]["suite"], "rotation");
    EXPECT_EQ(v[0]["passed"], true);
}

TEST(Cli, RoundTripBeadsThroughTau) {
    const std::string beads = run({"beta", "1", "3", "1"}).out;
    EXPECT_EQ(beads, "1,1\n");
    EXPECT_EQ(run({"tau", beads.substr(0, beads.size() - 1)}).out, "(1,3,1)\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"verify", "--suite", "rotation", "--delta-max", "100"}).code, 0);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"sigma", "1", "x", "2"}).code, 2);
    EXPECT_EQ(run({"sigma", "1", "5"}).code, 2);
    EXPECT_EQ(run({"tau", "1,,1"}).code, 2);
    EXPECT_EQ(run({"cf", "7", "--parity", "odd"}).code, 2);
    EXPECT_EQ(run({"cf", "7/2", "--parity", "both"}).code, 2);
    EXPECT_EQ(run({"beta", "1", "3", "-2"}).code, 3);
    EXPECT_EQ(run({"pell", "4"}).code, 3);
    EXPECT_EQ(run({"tau", "3"}).code, 3);
    EXPECT_EQ(run({"verify", "--suite", "nope", "--delta-max", "10"}).code, 3);
    EXPECT_EQ(run({"help"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

// Two suites fail honestly: formfrombeads at delta 5 and denjoy on
// imprimitive forms such as (2,6,2). A full run therefore exits 1.
TEST(Cli, VerifyAllReportsEverySuite) {
    const Result r = run({"verify", "--suite", "all", "--delta-max", "300", "--jobs", "2"});
    EXPECT_EQ(r.code, 1);
    std::istringstream lines(r.out);
    std::string line;
    int pass = 0, fail = 0;
    while (std::getline(lines, line)) {
        if (line.find(": PASS (") != std::string::npos) ++pass;
        if (line.find(": FAIL (") != std::string::npos) {
            ++fail;
            EXPECT_TRUE(line.rfind("denjoy:", 0) == 0 || line.rfind("formfrombeads:", 0) == 0) << line;
        }
    }
    EXPECT_EQ(pass, 13);
    EXPECT_EQ(fail, 2);
}

TEST(Cli, JobsFromEnvironment) {
    ::setenv("ZRED_JOBS", "3", 1);
    EXPECT_EQ(run({"verify", "--suite", "zcaliber", "--delta-max", "100"}).code, 0);
    ::unsetenv("ZRED_JOBS");
}
