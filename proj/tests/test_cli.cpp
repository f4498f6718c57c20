#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + " " WINF_CLI_PATH " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if(!pipe) {
        return r;
    }
    std::array<char, 4096> buf{};
    while(std::fgets(buf.data(), buf.size(), pipe)) {
        r.out += buf.data();
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json json_of(const std::string& args) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, ClassProduct) {
    const auto j = json_of("classprod [1] [2]");
    EXPECT_EQ(j.dump(), R"({"lhs":"[1]","result":[{"coeff":"2","partition":"[2]"},{"coeff":"1","partition":"[2,1]"}],"rhs":"[2]"})");
}

TEST(Cli, HurwitzShiftedNumber) {
    const auto j = json_of("hurwitz 0 7 [4,3] [2,1] [4,2,1]");
    EXPECT_EQ(j["value"], "5/4");
    EXPECT_EQ(j["h"], -1);
    EXPECT_EQ(run("--format tsv hurwitz --connected 0 3 [3] [] [3]").out,
              "# winf-tsv v1 hurwitz-connected\ng\th\tn\tramification\tvalue\n0\t0\t3\t[3] [] [3]\t1/3\n");
}

TEST(Cli, CharacterAndPhi) {
    EXPECT_EQ(json_of("char [] []")["value"], "1");
    EXPECT_EQ(json_of("char [2,1] [3]")["value"], "-1");
    EXPECT_EQ(json_of("phi [3,1] [1]")["value"], "4");
}

TEST(Cli, CutJoinApply) {
    const auto j = json_of("cutjoin apply [1] [2,1] 1/2*[3]");
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["partition"], "[3]");
    EXPECT_EQ(j["terms"][0]["coeff"], "3/2");
    EXPECT_EQ(j["terms"][1]["partition"], "[2,1]");
    EXPECT_EQ(j["terms"][1]["coeff"], "3");
}

TEST(Cli, GenFunRepeatedInsertion) {
    const auto j = json_of("--max-n 2 genfun --insert [2] --insert v=[1] --u-max 1");
    ASSERT_FALSE(j.empty());
    EXPECT_EQ(j[0]["u_exps"].size(), 2u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("char [2,] [3]").code, 2);
    EXPECT_EQ(run("char [2,1] [2]").code, 2);
    EXPECT_EQ(run("verify nope").code, 2);
    EXPECT_EQ(run("hurwitz --bogus 0 2 [2] [2]").code, 2);
    EXPECT_EQ(run("classprod [1] [2] [3]").code, 2);
    EXPECT_EQ(run("--format xml char [1] [1]").code, 2);
    EXPECT_EQ(run("hurwitz 0 9 [2]").code, 2);
    EXPECT_EQ(run("--operator-max-n -1 cutjoin build [2]").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, VerifyExitCode) {
    const auto r = run("verify examples32");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], true);
}

TEST(Cli, Deterministic) {
    const std::string args = "--format tsv classprod [2,1] [2]";
    const auto a = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run(args).out);
    EXPECT_EQ(a.out, run("--threads 4 " + args).out);
    EXPECT_EQ(run("cutjoin build [2,1]").out, run("--threads 3 cutjoin build [2,1]").out);
}

TEST(Cli, ConfigFile) {
    const auto path = std::filesystem::temp_directory_path() / "winf_cli_test.ini";
    {
        std::ofstream f(path);
        f << "format=tsv\nhurwitz-max-n=9\n";
    }
    const auto direct = run("--config " + path.string() + " hurwitz 0 9 [2] [2]");
    EXPECT_EQ(direct.code, 0);
    EXPECT_EQ(direct.out.rfind("# winf-tsv v1 hurwitz\n", 0), 0u);
    const auto via_env = run("hurwitz 0 9 [2] [2]", "WINF_CONFIG=" + path.string());
    EXPECT_EQ(via_env.out, direct.out);
    std::filesystem::remove(path);
}
