#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "omlkit/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = omlkit::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("omlkit_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        ::unsetenv("OMLKIT_SIZE_CAP");
    }
    void TearDown() override {
        fs::remove_all(dir_);
        ::unsetenv("OMLKIT_SIZE_CAP");
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string gen(const std::string& family, const std::string& param = "") {
        const std::string p = path(family + param + ".oml");
        std::vector<std::string> args{"gen", family};
        if (!param.empty()) args.push_back(param);
        args.insert(args.end(), {"-o", p});
        EXPECT_EQ(run(args).code, 0);
        return p;
    }
    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ValidateExitCodes) {
    const CliResult ok = run({"validate", gen("mo", "2")});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("SUMMARY 6 0"), std::string::npos);

    const CliResult bad = run({"validate", gen("benzene")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("\nORTHOMODULAR FAIL x y\n"), std::string::npos);
    EXPECT_NE(bad.out.find("CHECK oml/ortholattice PASS"), std::string::npos);

    EXPECT_EQ(run({"validate", path("missing.oml")}).code, 2);
    std::ofstream(path("broken.oml")) << "oml x\nelements: 0\n";
    const CliResult broken = run({"validate", path("broken.oml")});
    EXPECT_EQ(broken.code, 2);
    EXPECT_NE(broken.err.find("MissingSection"), std::string::npos);
}

TEST_F(Cli, GenFamilies) {
    EXPECT_EQ(slurp(gen("boolean", "0")), "oml boolean0\nelements: 0\nbottom: 0\ntop: 0\nleq: 0 0\nperp: 0 0\nend\n");
    EXPECT_EQ(slurp(gen("mo", "2")), slurp(OMLKIT_TEST_DATA "/mo2.oml"));
    EXPECT_NE(slurp(gen("product", "mo2,chain2")).find("elements: (0,0) (0,1) (a,0)"), std::string::npos);
    const CliResult stdout_run = run({"gen", "chain2"});
    EXPECT_EQ(stdout_run.code, 0);
    EXPECT_EQ(stdout_run.out.rfind("oml chain2\n", 0), 0u);
    EXPECT_EQ(run({"gen", "boolean", "9"}).code, 2);
    EXPECT_EQ(run({"gen", "mo", "0"}).code, 2);
    EXPECT_EQ(run({"gen", "mo"}).code, 2);
    EXPECT_EQ(run({"gen", "chain2", "3"}).code, 2);
    EXPECT_EQ(run({"gen", "cube"}).code, 2);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"linmaps", gen("chain2")}).code, 2);
    EXPECT_EQ(run({"linmaps", gen("chain2"), "--count", "--list"}).code, 2);
    EXPECT_EQ(run({"sasaki", gen("chain2"), "-a", "zz"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Linmaps) {
    const std::string c2 = gen("chain2");
    EXPECT_EQ(run({"linmaps", c2, "--count"}).out, "COUNT 2\n");
    EXPECT_EQ(run({"linmaps", c2, "--list"}).out, "MAP [0,0] ADJ [0,0]\nMAP [0,1] ADJ [0,1]\nCOUNT 2\n");
    EXPECT_EQ(run({"linmaps", gen("mo", "2"), "--count"}).out, "COUNT 234\n");
    const CliResult list = run({"linmaps", gen("boolean", "2"), "--list", "--jobs", "3"});
    std::vector<std::string> lines;
    std::istringstream in(list.out);
    for (std::string l; std::getline(in, l);)
        if (l.rfind("MAP ", 0) == 0) lines.push_back(l);
    // Sorted by the index tables, which is the order enumerate_lin returns.
    const auto maps = omlkit::enumerate_lin(omlkit::gen_boolean(2));
    ASSERT_EQ(lines.size(), maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) EXPECT_EQ(lines[i].substr(4, lines[i].find(" ADJ") - 4), maps[i].render());
    EXPECT_EQ(run({"linmaps", gen("benzene"), "--count"}).code, 1);
}

TEST_F(Cli, Sasaki) {
    const CliResult r = run({"sasaki", gen("mo", "2"), "-a", "a"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "SASAKI a\n0 0\na a\na' 0\nb a\nb' a\n1 a\n");
}

TEST_F(Cli, FoulisAndVerifyAll) {
    const CliResult f = run({"foulis", gen("mo", "2")});
    EXPECT_EQ(f.code, 0) << f.out;
    EXPECT_NE(f.out.find("NOTE lin/size 234"), std::string::npos);

    const CliResult v = run({"verify-all", gen("boolean", "2"), "--jobs", "2"});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_NE(v.out.find("CHECK m-claims/M3 PASS"), std::string::npos);
    EXPECT_NE(v.out.find("CHECK sasaki-action/image-is-downset PASS"), std::string::npos);

    const CliResult one = run({"verify-all", gen("one")});
    EXPECT_EQ(one.code, 0) << one.out;

    const CliResult b = run({"verify-all", gen("benzene")});
    EXPECT_EQ(b.code, 1);
    EXPECT_EQ(b.out.find("sasaki/"), std::string::npos);
    EXPECT_NE(b.out.find("SUMMARY 1 3"), std::string::npos);

    const CliResult big = run({"verify-all", gen("mo", "3")});
    EXPECT_EQ(big.code, 0) << big.out;
    EXPECT_NE(big.out.find("CHECK kernel/zero-set-is-downset PASS"), std::string::npos);
    EXPECT_NE(big.out.find("NOTE lin/skipped"), std::string::npos);
}

TEST_F(Cli, Dot) {
    const std::string out = path("mo2.dot");
    EXPECT_EQ(run({"dot", gen("mo", "2"), "-o", out}).code, 0);
    const std::string text = slurp(out);
    EXPECT_EQ(text.rfind("digraph \"mo2\" {\n", 0), 0u);
    EXPECT_EQ(run({"dot", gen("mo", "2")}).out, text);
}

TEST_F(Cli, SizeCapCanOnlyBeLowered) {
    const std::string mo2 = gen("mo", "2");
    ::setenv("OMLKIT_SIZE_CAP", "4", 1);
    const CliResult low = run({"validate", mo2});
    EXPECT_EQ(low.code, 1);
    EXPECT_NE(low.out.find("CHECK oml/ortholattice FAIL SizeCap"), std::string::npos);
    EXPECT_EQ(run({"gen", "mo", "2"}).code, 2);
    ::setenv("OMLKIT_SIZE_CAP", "1000", 1);
    EXPECT_EQ(run({"validate", mo2}).code, 0);
    EXPECT_EQ(run({"gen", "boolean", "6"}).code, 0);
    EXPECT_EQ(run({"gen", "product", "mo8,mo2"}).code, 2);
    ::setenv("OMLKIT_SIZE_CAP", "abc", 1);
    EXPECT_EQ(run({"validate", mo2}).code, 2);
}

TEST_F(Cli, OutputIsDeterministic) {
    const std::string mo2 = gen("mo", "2");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen", "mo", "2"}, {"verify-all", mo2}, {"verify-all", mo2, "--jobs", "4"}, {"dot", mo2}, {"linmaps", mo2, "--list"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
    EXPECT_EQ(run({"verify-all", mo2, "--jobs", "1"}).out, run({"verify-all", mo2, "--jobs", "4"}).out);
}
