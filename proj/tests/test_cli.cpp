#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args)
{
    static int counter = 0;
    const std::string out_path = "/tmp/fockso_cli_out_" + std::to_string(counter++) + ".txt";
    const std::string cmd =
        std::string(FOCKSO_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    std::remove(out_path.c_str());
    return r;
}

} // namespace

TEST_CASE("kernel command prints K^0(1,1) = e")
{
    RunResult r = run_cli("kernel --m 0 --z 1+0i --v 1+0i");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value_re") != std::string::npos);
    CHECK(r.out.find("2.718281828") != std::string::npos);
}

TEST_CASE("bmo command reproduces the closed-form oscillation")
{
    RunResult r = run_cli("bmo --symbol zb^1 --p 2 --r 1 --delta 1 --R 4");
    CHECK(r.exit_code == 0);
    // every lattice value is 1/sqrt(2); check one data line
    std::istringstream in(r.out);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "z_re,z_im,value");
    REQUIRE(std::getline(in, line));
    const double v = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(std::abs(v - 1.0 / std::sqrt(2.0)) < 1e-3);
}

TEST_CASE("verify lemma23 t = 0 exits clean")
{
    RunResult r = run_cli("verify lemma23 --t 0 --ymax 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict   = bounded") != std::string::npos);
}

TEST_CASE("verify exit code 3 on a violated equivalence")
{
    // forcing tol so large that the vanishing verdicts disagree with the tag
    RunResult r = run_cli("verify thm32 --symbol conj_z --tol-vanish 10 --delta 1 --R 8");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("violated") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run_cli("kernel --m 0 --z 1+0i").exit_code == 2);          // missing required
    CHECK(run_cli("kernel --zz 1 --z 1 --v 1").exit_code == 2);      // unknown flag
    CHECK(run_cli("norm --symbol \"z^\"").exit_code == 2);           // malformed symbol
    CHECK(run_cli("norm --symbol \"expq(0.5)\"").exit_code == 2);    // admissibility
    CHECK(run_cli("nonsense").exit_code == 2);                       // unknown command
}

TEST_CASE("json format emits meta and data")
{
    RunResult r = run_cli("norm --symbol zb^1 --p 2 --m 0 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"meta\"") != std::string::npos);
    CHECK(r.out.find("\"data\"") != std::string::npos);
}

TEST_CASE("config file feeds defaults and flags override")
{
    const std::string cfg_path = "/tmp/fockso_test_config.ini";
    {
        std::ofstream cfg(cfg_path);
        cfg << "[run]\np = 2\nr = 1\n[lattice]\ndelta = 1\nR = 4\n";
    }
    RunResult r = run_cli("bmo --symbol zb^1 --config " + cfg_path);
    CHECK(r.exit_code == 0);

    // unknown keys are rejected
    {
        std::ofstream cfg(cfg_path);
        cfg << "[run]\nbogus = 1\n";
    }
    CHECK(run_cli("bmo --symbol zb^1 --config " + cfg_path).exit_code == 2);
    std::remove(cfg_path.c_str());
}

TEST_CASE("--out redirects the data")
{
    const std::string out_path = "/tmp/fockso_test_out.csv";
    RunResult r = run_cli("kernel --m 1 --z 2+0i --v 2+0i --out " + out_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const std::string data = slurp(out_path);
    CHECK(data.find("value_re") != std::string::npos);
    std::remove(out_path.c_str());
}

TEST_CASE("repeat runs are byte-identical")
{
    for (const std::string args :
         {std::string("bmo --symbol zb^1 --p 2 --r 1 --delta 1 --R 4"),
          std::string("verify lemma23 --t 1 --ymax 30"),
          std::string("hankel-probe --symbol zb^1 --m 0 --radii 0,2,4"),
          std::string("project --symbol \"|z|^2\" --m 0 --L 6")}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        INFO(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("hankel-norm prints the flat norm")
{
    RunResult r = run_cli("hankel-norm --symbol zb^1 --m 0 --N 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("m,N,L,section_norm") != std::string::npos);
    CHECK(r.out.find("0,4,16,") != std::string::npos);
    const double v = std::stod(r.out.substr(r.out.rfind(',') + 1));
    CHECK(std::abs(v - 1.0) < 1e-6);
}

TEST_CASE("catalog names resolve as symbols")
{
    RunResult r = run_cli("carleson --symbol disk_ind --p 2 --r 1 --mode vanishing "
                          "--delta 1 --R 5");
    CHECK(r.exit_code == 0);
}
