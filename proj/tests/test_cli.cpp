#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

run_result run(const std::string& args)
{
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    std::string err_path = (dir / ("dilogid_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++))).string();
    std::string cmd = std::string(DILOGID_CLI) + " " + args + " 2>" + err_path;
    run_result r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    std::filesystem::remove(err_path);
    return r;
}

std::vector<nlohmann::json> lines(const std::string& text)
{
    std::vector<nlohmann::json> v;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) v.push_back(nlohmann::json::parse(line));
    return v;
}

}  // namespace

TEST(Cli, ListPrintsIdsAndAnchors)
{
    auto r = run("list");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("R1\t(qot1)"), std::string::npos);
    EXPECT_NE(r.out.find("T1a\t(thmhaf1)"), std::string::npos);
    EXPECT_NE(r.out.find("J2\t"), std::string::npos);
}

TEST(Cli, EvalLi2AtOne)
{
    auto r = run("eval li2 1 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1.64493406684823\n");
}

TEST(Cli, EvalOtherFunctions)
{
    EXPECT_EQ(run("eval zeta 4").out, "1.08232323371114\n");
    EXPECT_EQ(run("eval digamma 1 0").out, "-0.577215664901533\n");
    EXPECT_EQ(run("eval hurwitz 2 0.5 0").out, "4.93480220054468\n");
    EXPECT_EQ(run("eval polygamma 1 1 0").out, "1.64493406684823\n");
    auto c = run("eval li3 0.5 0.5");
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find('i'), std::string::npos);
}

TEST(Cli, EvalDomainErrorEchoesParameter)
{
    auto r = run("eval li2 2 0");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("z"), std::string::npos);
    EXPECT_EQ(run("eval digamma 0 0").code, 3);
    EXPECT_EQ(run("eval bogus 1").code, 2);
}

TEST(Cli, VerifyR1)
{
    auto r = run("verify --id R1 --tol 1e-10");
    EXPECT_EQ(r.code, 0);
    auto js = lines(r.out);
    ASSERT_EQ(js.size(), 1u);
    EXPECT_EQ(js[0]["id"], "R1");
    EXPECT_TRUE(js[0]["pass"].get<bool>());
    EXPECT_LT(js[0]["abs_residual"].get<double>(), 1e-10);
}

TEST(Cli, VerifyRejectsRayWithExitThree)
{
    auto r = run("verify --id T1a --tol 1e-9 -- --sample a=-2");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("(−∞, −1)"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("a"), std::string::npos);
}

TEST(Cli, VerifyExplicitComplexSample)
{
    auto r = run("verify --id T1a --tol 1e-9 -- --sample a=0.3+0.4i --sample a=-0.5,0.2");
    EXPECT_EQ(r.code, 0) << r.err;
    auto js = lines(r.out);
    ASSERT_EQ(js.size(), 2u);
    EXPECT_EQ(js[0]["params"]["a"][0].get<double>(), 0.3);
    EXPECT_EQ(js[1]["params"]["a"][1].get<double>(), 0.2);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run("verify --bogus").code, 2);
    EXPECT_EQ(run("verify --id NOPE").code, 2);
    EXPECT_EQ(run("verify --id R1 --tol 1e-20").code, 2);
    EXPECT_EQ(run("verify --id R1 --parallelism 0").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify --id T1a -- --sample b=1").code, 2);
}

TEST(Cli, FailingIdentityExitsOne)
{
    auto r = run("verify --id H4 --tol 1e-13");
    EXPECT_EQ(r.code, 1);
    bool any_fail = false;
    for (const auto& j : lines(r.out)) any_fail = any_fail || !j["pass"].get<bool>();
    EXPECT_TRUE(any_fail);
}

TEST(Cli, StressRowsNeverCount)
{
    auto r = run("verify --id E8a.p --stress");
    EXPECT_EQ(r.code, 0);
    bool any_fail = false;
    for (const auto& j : lines(r.out)) any_fail = any_fail || !j["pass"].get<bool>();
    EXPECT_TRUE(any_fail);
}

TEST(Cli, JsonlToFileAndTableAgree)
{
    auto path = (std::filesystem::temp_directory_path() / ("dilogid_cli_" + std::to_string(::getpid()) + ".jsonl")).string();
    auto r = run("verify --id J2 --samples 4 --table --jsonl " + path);
    EXPECT_EQ(r.code, 0);
    auto js = lines(slurp(path));
    std::filesystem::remove(path);
    ASSERT_EQ(js.size(), 4u);
    for (const auto& j : js) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", j["lhs"][0].get<double>());
        EXPECT_NE(r.out.find(buf), std::string::npos) << buf;
        std::snprintf(buf, sizeof buf, "%.12g", j["abs_residual"].get<double>());
        EXPECT_NE(r.out.find(buf), std::string::npos) << buf;
    }
}

TEST(Cli, DeterministicAcrossParallelism)
{
    auto a = run("verify --id 'T*' --samples 9 --seed 4 --parallelism 1");
    auto b = run("verify --id 'T*' --samples 9 --seed 4 --parallelism 8");
    auto c = run("verify --id 'T*' --samples 9 --seed 4 --parallelism 8");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(Cli, StdoutDashAndPassCount)
{
    auto r = run("verify --id 'SV*' --jsonl -");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 3u);
    EXPECT_NE(r.err.find("3/3 passed"), std::string::npos) << r.err;
}
