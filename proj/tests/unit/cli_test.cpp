#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "mopareto/mopareto.hpp"

namespace mopareto {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("mopareto_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }
    std::string path(const char* name) const { return (dir_ / name).string(); }
    std::string out() const { return out_.str(); }
    std::string err() const { return err_.str(); }

private:
    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(Cli, GenThenMinPrintsTwo) {
    ASSERT_EQ(run({"gen", "prop-dominated", "--eps", "1", "-o", path("p1.json")}), 0) << err();
    ASSERT_EQ(run({"min", "--relation", "quasi-k", "--k", "1", "--eps", "1", "-i", path("p1.json")}), 0) << err();
    EXPECT_EQ(out(), "2\n");
}

TEST_F(Cli, ComputeThenVerify) {
    ASSERT_EQ(run({"gen", "random", "--n", "60", "--p", "3", "--seed", "4", "-o", path("r.json")}), 0) << err();
    for (const auto& algo : {"grid", "greedy-cover", "gap"}) {
        std::vector<std::string> relation{"--relation", "quasi-k", "--k", "2", "--eps", "1/2"};
        if (std::string(algo) == "gap") relation = {"--relation", "epsilon", "--eps", "1/2"};
        std::vector<std::string> compute{"compute", "--algo", algo, "-i", path("r.json"), "-o", path("set.json")};
        compute.insert(compute.end(), relation.begin(), relation.end());
        ASSERT_EQ(run(compute), 0) << algo << ": " << err();
        const auto set = load_set(read_text_file(path("set.json")));
        EXPECT_FALSE(set.members.empty());
        std::vector<std::string> verify{"verify", "-i", path("r.json"), "--set", path("set.json")};
        verify.insert(verify.end(), relation.begin(), relation.end());
        ASSERT_EQ(run(verify), 0) << algo << ": " << err();
        EXPECT_EQ(out(), "ok\n");
    }
}

TEST_F(Cli, ComputeIsByteDeterministic) {
    ASSERT_EQ(run({"gen", "random", "--n", "40", "--p", "2", "--seed", "9", "-o", path("r.json")}), 0);
    for (const auto& algo : {"bi-greedy", "bi-dual2", "grid"}) {
        ASSERT_EQ(run({"compute", "--algo", algo, "--eps", "1/3", "-i", path("r.json")}), 0) << err();
        const std::string first = out();
        ASSERT_EQ(run({"compute", "--algo", algo, "--eps", "1/3", "-i", path("r.json")}), 0);
        EXPECT_EQ(out(), first);
    }
}

TEST_F(Cli, VerifyFailurePrintsCounterexample) {
    ASSERT_EQ(run({"gen", "antichain", "--n", "3", "-o", path("a.json")}), 0);
    write_text_file_atomic(path("s.json"), R"({"relation": {"kind": "epsilon", "eps": "1"}, "members": ["x1"], "certificate": []})");
    EXPECT_EQ(run({"verify", "--relation", "one-exact", "--eps", "1", "-i", path("a.json"), "--set", path("s.json")}), 4);
    EXPECT_EQ(out(), "x3\n");
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"frobnicate"}), 2);
    EXPECT_EQ(run({"compute", "-i", "x.json"}), 2);
    ASSERT_EQ(run({"gen", "antichain", "--n", "3", "-o", path("a.json")}), 0);
    EXPECT_EQ(run({"compute", "--eps", "0.5x", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"compute", "--eps", "0", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"compute", "--eps", "1", "--relation", "quasi-k", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"compute", "--eps", "1", "--relation", "quasi-k", "--k", "3", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"compute", "--eps", "1", "--relation", "two-exact", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"compute", "--eps", "1", "--algo", "gap", "--relation", "one-exact", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"compute", "--eps", "1", "--algo", "magic", "-i", path("a.json")}), 2);
    EXPECT_EQ(run({"gen", "prop-one-exact", "--n", "2", "--delta", "1/10", "--eps", "1"}), 2);
    EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(Cli, MalformedInput) {
    write_text_file_atomic(path("bad.json"), R"({"p": 1, "solutions": [{"id": "a", "f": ["0"]}]})");
    EXPECT_EQ(run({"compute", "--eps", "1", "-i", path("bad.json")}), 3);
    EXPECT_NE(err().find("nonpositive objective value"), std::string::npos);
    EXPECT_EQ(run({"compute", "--eps", "1", "-i", path("missing.json")}), 3);
    write_text_file_atomic(path("junk.json"), "not json");
    EXPECT_EQ(run({"stats", "--eps", "1", "-i", path("junk.json")}), 3);
}

TEST_F(Cli, SolverLimit) {
    ASSERT_EQ(run({"gen", "antichain", "--n", "30", "-o", path("a.json")}), 0);
    EXPECT_EQ(run({"min", "--eps", "1/100", "-i", path("a.json")}), 5);
    EXPECT_EQ(run({"min", "--eps", "1/100", "--limit", "30", "-i", path("a.json")}), 0);
    EXPECT_EQ(out(), "30\n");
    ::setenv("MOPARETO_EXACT_LIMIT", "30", 1);
    EXPECT_EQ(run({"min", "--eps", "1/100", "-i", path("a.json")}), 0);
    EXPECT_EQ(run({"min", "--eps", "1/100", "--limit", "10", "-i", path("a.json")}), 5);
    ::unsetenv("MOPARETO_EXACT_LIMIT");
}

TEST_F(Cli, StatsJsonAndCsv) {
    ASSERT_EQ(run({"gen", "prop-dominated", "--eps", "1", "-o", path("p1.json")}), 0);
    ASSERT_EQ(run({"stats", "--eps", "1", "--relation", "quasi-k", "--k", "1", "--exact", "-i", path("p1.json")}), 0) << err();
    const auto doc = nlohmann::json::parse(out());
    EXPECT_EQ(doc["n"], 6);
    EXPECT_EQ(doc["M"], 2);
    EXPECT_EQ(doc["efficient"], 4);
    EXPECT_EQ(doc["rows"][0]["exact_relation"], 2);
    EXPECT_EQ(doc["rows"][0]["nonempty_cells"], 5);

    ASSERT_EQ(run({"stats", "--sweep", "1,1/2,1/4", "--csv", "-i", path("p1.json")}), 0) << err();
    std::istringstream lines(out());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    EXPECT_EQ(count, 4);
}

TEST_F(Cli, LiftAndGenFamilies) {
    ASSERT_EQ(run({"gen", "prop-dominated", "--eps", "1", "-o", path("p1.json")}), 0);
    write_text_file_atomic(path("s.json"), R"({"relation": {"kind": "epsilon", "eps": "1"}, "members": ["x5", "x6"], "certificate": []})");
    ASSERT_EQ(run({"lift", "-i", path("p1.json"), "--set", path("s.json"), "-o", path("lifted.json")}), 0) << err();
    EXPECT_EQ(load_set(read_text_file(path("lifted.json"))).members, (std::vector<std::string>{"x2", "x3"}));

    EXPECT_EQ(run({"gen", "prop-one-exact", "--n", "2", "--delta", "1/10"}), 0) << err();
    EXPECT_EQ(load_instance(out()).size(), 7U);
    EXPECT_EQ(run({"gen", "quasi2-gap", "--eps", "1", "--n", "3"}), 0);
    EXPECT_EQ(load_instance(out()).p(), 3U);
    ASSERT_EQ(run({"gen", "antichain", "--n", "4", "-o", path("a.json")}), 0);
    EXPECT_EQ(run({"gen", "duplicated", "--base", path("a.json"), "-p", "5", "--mode", "quasi-k-over-half"}), 0) << err();
    EXPECT_EQ(load_instance(out()).p(), 5U);
    EXPECT_EQ(run({"gen", "duplicated", "--base", path("missing.json"), "-p", "5", "--mode", "quasi-k-over-half"}), 3);
}

}  // namespace
}  // namespace mopareto
