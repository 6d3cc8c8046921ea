#include <codp/codp.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct CliResult
{
    int code = -1;
    std::string out;
};

CliResult cli(const std::string& args)
{
    std::string cmd = std::string(CODP_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST(Cli, ExtSeries)
{
    CliResult r = cli("ext --algebra Kr:q=2 --x K+ --y K+");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(first_line(r.out).find("1 + t^3"), std::string::npos) << r.out;
}

TEST(Cli, ExtJson)
{
    CliResult r = cli("--json ext --algebra Kr:q=2 --x K- --y K-");
    ASSERT_EQ(r.code, 0);
    auto j = codp::json::parse(r.out);
    EXPECT_EQ(j["series"], "t^-1 + 1");
    EXPECT_EQ(j["certified"], true);
}

TEST(Cli, ReproduceTables)
{
    for (const char* id : {"exts-tcap:q=1", "sphericity:q=2", "localization:p=1", "spinor-chi:d=4", "lattice"}) {
        CliResult r = cli(std::string("reproduce ") + id);
        EXPECT_EQ(r.code, 0) << id;
    }
    CliResult list = cli("reproduce --list");
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("koszul:p=2"), std::string::npos);
}

TEST(Cli, ReproduceDetectsMismatch)
{
    auto dir = std::filesystem::temp_directory_path() / "codp_golden_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "eta-chi_d1.txt") << "chi(eta S, eta S) = 3\nchi(K, K) = 2\n";
    CliResult r = cli("reproduce eta-chi:d=1 --golden-dir " + dir.string());
    EXPECT_EQ(r.code, 1);
    std::filesystem::remove_all(dir);
}

TEST(Cli, Nonfactoriality)
{
    CliResult r = cli("nonfact --matrix '[[0]]'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("neither"), std::string::npos);
    EXPECT_NE(cli("nonfact --matrix '[[2]]'").out.find("Q-maximal-only"), std::string::npos);
}

TEST(Cli, SurveyJson)
{
    CliResult r = cli("--json survey --matrix '[[1,1]]'");
    ASSERT_EQ(r.code, 0);
    auto j = codp::json::parse(r.out);
    EXPECT_EQ(j["patterns"]["++"], true);
    EXPECT_EQ(j["patterns"]["+-"], false);
    EXPECT_EQ(j["projective_count"], 2);
}

TEST(Cli, ChecksReturnOneOnFailure)
{
    EXPECT_EQ(cli("check exceptional --algebra Kr:q=1 --x E").code, 0);
    EXPECT_EQ(cli("check exceptional --algebra Kr:q=1 --x K+").code, 1);
    EXPECT_EQ(cli("check kronecker --algebra Kr:q=2 --x E --x K+").code, 0);
    EXPECT_EQ(cli("check kronecker --algebra Kr:q=2 --x E --x K-").code, 1);
    EXPECT_EQ(cli("pinfty --algebra B:q=2 --x freeB").code, 0);
    EXPECT_EQ(cli("pinfty --algebra B:q=2 --x kB").code, 1);
}

TEST(Cli, InputErrorsExitTwo)
{
    EXPECT_EQ(cli("ext --algebra Kr:q=zz --x E --y E").code, 2);
    EXPECT_EQ(cli("ext --algebra Kr:q=1 --x nothing --y E").code, 2);
    EXPECT_EQ(cli("nonfact --matrix '[[1,'").code, 2);
    EXPECT_EQ(cli("reproduce unknown:q=1").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("ext --algebra Kr:q=1 --x E").code, 2);
    EXPECT_EQ(cli("serre --algebra B:q=1 --x freeB").code, 2);
}

TEST(Cli, AbsorbAcrossBlocks)
{
    CliResult r = cli("absorb --algebra Kr:q=2,r=2 --es E@1,E@2 --ks K+@1,K+@2");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(cli("absorb --algebra Kr:q=2,r=2 --es E@1,E@2 --ks K+@2,K+@1").code, 1);
}

TEST(Cli, QuadricCommands)
{
    EXPECT_NE(cli("quadric-chi --d 3 --f 'S(1)' --g S").out.find("-1"), std::string::npos);
    EXPECT_NE(cli("quadric-chi --d 2 --f S --g \"S'\" --eta").out.find("1"), std::string::npos);
    EXPECT_EQ(cli("gram --d 5").code, 0);
    EXPECT_NE(cli("spinor-rank --n 7").out.find("4"), std::string::npos);
    EXPECT_EQ(cli("quadric-chi --d 3 --f T --g S").code, 2);
}

TEST(Cli, ObjectCommands)
{
    EXPECT_EQ(cli("mutate --algebra Kr:q=1 --e E --f \"E'\" --side left").code, 0);
    EXPECT_EQ(cli("twist --algebra Kr:q=1 --k K+ --f E").code, 0);
    EXPECT_EQ(cli("serre --algebra Kr:q=2 --x K+").code, 0);
    EXPECT_EQ(cli("helix --q 2 --i -1").code, 0);
    CliResult loc = cli("localize --algebra Kr:q=2 --x K-");
    EXPECT_NE(loc.out.find("torsion(m=1, s=1)"), std::string::npos) << loc.out;
    EXPECT_EQ(cli("koszul-dual --algebra A:p=1 --x A").code, 0);
    EXPECT_NE(cli("trunc --p 1 --i 3").out.find("1 + t^2 + t^4"), std::string::npos);
    EXPECT_EQ(cli("self-ext --q 2").code, 0);
}

TEST(Cli, CurveTreeInline)
{
    CliResult r = cli("--json curve-tree --graph '{\"components\":[\"a\",\"b\",\"c\"],\"edges\":[{\"u\":0,\"v\":1},{\"u\":1,\"v\":2}]}'");
    ASSERT_EQ(r.code, 0);
    auto j = codp::json::parse(r.out);
    EXPECT_EQ(j["is_tree"], true);
    EXPECT_EQ(j["pinfty_count"], 2);
}

TEST(Cli, DeterministicOutput)
{
    CliResult a = cli("--json absorb --algebra Kr:q=1,r=2 --es E@1,E@2 --ks K+@1,K+@2");
    CliResult b = cli("--json absorb --algebra Kr:q=1,r=2 --es E@1,E@2 --ks K+@1,K+@2");
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SampleInputs)
{
    const std::string dir = CODP_SAMPLES_DIR;
    CliResult r = cli("ext --algebra Kr:q=2 --x " + dir + "/k_plus_q2.json --y K+");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(first_line(r.out).find("1 + t^3"), std::string::npos) << r.out;

    r = cli("serre --algebra " + dir + "/a3_zero_relation.json --x P:3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[P1[1], P2[0], P3[0]]"), std::string::npos) << r.out;

    r = cli("--json survey --file " + dir + "/quintic_dp_r2.json");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(codp::json::parse(r.out)["class"], "maximal") << r.out;

    r = cli("--json nonfact --file " + dir + "/two_curves.csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(codp::json::parse(r.out)["class"], "Q-maximal-only") << r.out;

    r = cli("curve-tree --file " + dir + "/chain_graph.json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("C3"), std::string::npos) << r.out;
}
