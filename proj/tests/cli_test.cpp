#include "nottingham/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace nottingham::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int rc = run(args, out, err);
    return {rc, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() /
               ("nottingham_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text)
    {
        auto path = dir_ / name;
        std::ofstream(path, std::ios::binary) << text;
        return path.string();
    }

    std::filesystem::path dir_;
};

const std::string sigma62 = "p=2 N=62\n1:1 2:1 6:1 12:1 14:1 24:1 26:1 28:1 30:1 48:1 50:1 52:1 54:1 56:1 58:1 60:1 62:1\n";

TEST_F(CliTest, SigmaAllRoutes)
{
    auto r = invoke({"sigma", "--trunc", "62"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, sigma62);
    for (const char* m : {"closed", "algebraic", "relation"}) {
        auto rm = invoke({"sigma", "--trunc", "62", "--method", m});
        EXPECT_EQ(rm.code, 0);
        EXPECT_EQ(rm.out, sigma62) << m;
    }
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"sigma"}).code, 2);
    EXPECT_EQ(invoke({"sigma", "--trunc", "62", "--method", "magic"}).code, 2);
    EXPECT_EQ(invoke({"sigma", "--trunc", "1"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"verify"}).code, 2);
    EXPECT_EQ(invoke({"klopsch", "-p", "4", "-m", "1", "-a", "1", "--trunc", "5"}).code, 2);
    EXPECT_EQ(invoke({"klopsch", "-p", "3", "-m", "3", "-a", "1", "--trunc", "5"}).code, 2);
    EXPECT_EQ(invoke({"klopsch", "-p", "3", "-m", "1", "-a", "3", "--trunc", "5"}).code, 2);
    auto missing = invoke({"depth", "--in", (dir_ / "nope.txt").string()});
    EXPECT_EQ(missing.code, 2);
    EXPECT_TRUE(missing.out.empty());
}

TEST_F(CliTest, HelpExitsZero)
{
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("klopsch"), std::string::npos);
}

TEST_F(CliTest, VerifyPasses)
{
    auto r = invoke({"verify", "--trunc", "1024"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "PASS artin_schreier\nPASS factorization\nPASS relation\nPASS automorphism\nPASS order\nPASS route_agreement\n");
}

TEST_F(CliTest, VerifyCorruptedFileFails)
{
    std::string bad = sigma62;
    bad.replace(bad.find(" 6:1"), 4, "");
    auto good = invoke({"verify", "--sigma", write("good.txt", sigma62)});
    EXPECT_EQ(good.code, 0);
    auto r = invoke({"verify", "--sigma", write("bad.txt", bad)});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL order at t^16"), std::string::npos);
    EXPECT_NE(r.err.find("automorphism at t^8"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--sigma", write("good2.txt", sigma62), "--trunc", "64"}).code, 2);
}

TEST_F(CliTest, KlopschExample)
{
    auto r = invoke({"klopsch", "-p", "3", "-m", "1", "-a", "1", "--trunc", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "p=3 N=5\n1:1 2:1 3:1 4:1 5:1\n");
    auto neg = invoke({"klopsch", "-p", "3", "-m", "1", "-a", "-2", "--trunc", "5"});
    EXPECT_EQ(neg.out, r.out);
}

TEST_F(CliTest, OrderDepthPowerInverse)
{
    const auto sigma = write("sigma.txt", sigma62);
    EXPECT_EQ(invoke({"order", "--in", sigma}).out, "4\n");
    EXPECT_EQ(invoke({"depth", "--in", sigma}).out, "1\n");

    auto sq = invoke({"power", "--in", sigma, "-k", "2"});
    EXPECT_EQ(sq.code, 0);
    const auto sqf = write("sq.txt", sq.out);
    EXPECT_EQ(invoke({"depth", "--in", sqf}).out, "3\n");
    EXPECT_EQ(invoke({"order", "--in", sqf}).out, "2\n");

    auto fourth = invoke({"power", "--in", sigma, "-k", "4"});
    EXPECT_EQ(fourth.out, "p=2 N=62\n1:1\n");
    EXPECT_EQ(invoke({"depth", "--in", write("id.txt", fourth.out)}).out, "inf\n");

    auto inv = invoke({"inverse", "--in", sigma});
    EXPECT_EQ(inv.out, invoke({"power", "--in", sigma, "-k", "3"}).out);

    auto comp = invoke({"compose", "--lhs", sigma, "--rhs", write("inv.txt", inv.out)});
    EXPECT_EQ(comp.out, "p=2 N=62\n1:1\n");
}

TEST_F(CliTest, OrderCorruptedAndCapped)
{
    std::string bad = sigma62;
    bad.replace(bad.find(" 6:1"), 4, "");
    const auto badf = write("bad.txt", bad);
    EXPECT_EQ(invoke({"order", "--in", badf}).out, "8\n");
    auto capped = invoke({"order", "--in", badf, "--cap", "4"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_TRUE(capped.out.empty());
    EXPECT_EQ(invoke({"order", "--in", badf, "--cap", "0"}).code, 2);
}

TEST_F(CliTest, ComposeContextMismatch)
{
    auto a = write("a.txt", "p=2 N=4\n1:1\n");
    auto b = write("b.txt", "p=2 N=5\n1:1\n");
    auto c = write("c.txt", "p=2 N=4\n0:1 1:1\n");
    EXPECT_EQ(invoke({"compose", "--lhs", a, "--rhs", b}).code, 2);
    EXPECT_EQ(invoke({"compose", "--lhs", a, "--rhs", c}).code, 2);
    EXPECT_EQ(invoke({"power", "--in", c, "-k", "2"}).code, 2);
}

TEST_F(CliTest, OutputIsReparseable)
{
    auto k = invoke({"klopsch", "-p", "5", "-m", "2", "-a", "3", "--trunc", "30"});
    const auto path = write("k.txt", k.out);
    EXPECT_EQ(invoke({"compose", "--lhs", path, "--rhs", write("id.txt", "p=5 N=30\n1:1\n")}).out, k.out);
    EXPECT_EQ(invoke({"order", "--in", path}).out, "5\n");
}

} // namespace
} // namespace nottingham::cli
