#include "superext/classical.hpp"
#include "superext/io.hpp"
#include "superext/map_algebra.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace superext;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + SUPEREXT_BINARY + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("superext_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string save(const std::string& name, const std::string& args) {
        const CliResult r = run(args + " --output " + path(name));
        EXPECT_EQ(r.code, 0) << args;
        return path(name);
    }

private:
    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, AlgebraBuildIsOsp) {
    const CliResult r = run("algebra build --kind osp --n 1");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(algebra_from_json(j) == osp_1_2n(1));
    EXPECT_EQ(algebra_from_json(j).superdim(), "(3|2)");
}

TEST_F(Cli, OutputIsByteIdentical) {
    EXPECT_EQ(run("algebra build --kind p --n 2 --points 0:2").out, run("algebra build --kind p --n 2 --points 0:2").out);
    EXPECT_EQ(run("verify --suite thm_main").out, run("--jobs 3 verify --suite thm_main").out);
}

TEST_F(Cli, TruncatedCohomologyVanishes) {
    const std::string a = save("a.json", "algebra build --kind osp --n 1 --points 0:2");
    const Json stored = [&] {
        std::ifstream in(a);
        return Json::parse(in);
    }();
    EXPECT_TRUE(algebra_from_json(stored) ==
                tensor_algebra(osp_1_2n(1), build_multipoint({{Scalar(0), 2}}, PointBasis::local)).algebra);
    const CliResult r = run("cohomology --algebra " + a + " --module triv --degree 1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"degree\":1,\"even_dim\":0,\"odd_dim\":0}\n");
}

TEST_F(Cli, EvaluationModulesAndExt) {
    const std::string a = save("a.json", "algebra build --kind osp --n 1 --points 0:2");
    const std::string v = save("v.json", "module build --algebra " + a + " --kind irrep --lambda 1 --point 0");
    const CliResult r = run("ext --algebra " + a + " --from " + v + " --to " + v + " --degree 1");
    ASSERT_EQ(r.code, 0);
    // g (x) V(1) contains V(1) once and d = 1.
    EXPECT_EQ(Json::parse(r.out)["even_dim"], 1);
    const CliResult lhs = run("lhs --algebra " + a + " --module " + v + " --ideal-point 0 --ideal-order 1");
    ASSERT_EQ(lhs.code, 0);
    EXPECT_TRUE(Json::parse(lhs.out)["reconstruction_check"].get<bool>());
}

TEST_F(Cli, EmittedModuleReparses) {
    const std::string a = save("a.json", "algebra build --kind gl --m 1 --n 1");
    const std::string v = save("v.json", "module build --algebra " + a + " --kind defining");
    std::ifstream in(v);
    const Json j = Json::parse(in);
    const Representation back = module_from_json(j, share(gl(1, 1)));
    EXPECT_EQ(to_json(back), j);
}

TEST_F(Cli, VerifyAggregates) {
    const CliResult r = run("verify --suite all --scale small");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["passed"], j["reports"].size());
}

TEST_F(Cli, BlocksTwoPoints) {
    const CliResult r = run("blocks --points 0,1 --lambda-max 2");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["components"], Json(std::vector<int>(9, 0)));
}

TEST_F(Cli, BlocksSeeOnlyTheFamily) {
    // V(0) and V(1) are linked only through V(2), which this family leaves out.
    const CliResult r = run("blocks --points 0 --lambda-max 1");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["components"], Json::array({0, 1}));
    EXPECT_EQ(j["verdict"], "fail");
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("cohomology --algebra " + path("missing.json") + " --module triv").code, 2);
    EXPECT_EQ(run("algebra build --kind nope").code, 2);
    EXPECT_EQ(run("--guard-dim 3 algebra build --kind osp --n 1").code, 3);
    EXPECT_EQ(run("algebra build --kind osp --n 1", "SUPEREXT_GUARD_DIM=4").code, 3);
    EXPECT_EQ(run("algebra build --kind osp --n 1", "SUPEREXT_GUARD_DIM=5").code, 0);
    std::ofstream(path("bad.json")) << R"({"parity": [0, 1], "brackets": [[1, 1, [[1, "1"]]]]})";
    EXPECT_EQ(run("algebra validate --algebra " + path("bad.json")).code, 2);
}

TEST_F(Cli, PrettyTables) {
    const CliResult r = run("--pretty blocks --points 0 --lambda-max 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
    EXPECT_NE(r.out.find("component"), std::string::npos);
}
