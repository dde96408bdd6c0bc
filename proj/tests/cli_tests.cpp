#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output; // stdout and stderr merged
};

const char* cli_path() {
    const char* path = std::getenv("BINOMID_CLI");
    REQUIRE_MESSAGE(path != nullptr, "BINOMID_CLI must point at the binomid binary");
    return path;
}

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("verify a builtin identity") {
    const CmdResult r = run_cli("verify pascal");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pascal: PASS"));
}

TEST_CASE("verify with an overridden range") {
    const CmdResult r = run_cli("verify pascal --range n=0..100");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pascal: PASS"));
    CHECK(contains(r.output, "bindings=101"));
}

TEST_CASE("verify emits machine records") {
    const CmdResult r = run_cli("verify reflection --format machine");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output,
                   "result identity=reflection strategy=both bindings=31"));
    CHECK(contains(r.output, "status=pass"));
}

TEST_CASE("machine output is identical for any jobs count") {
    const std::string args = "verify lemma_binomial_1 --range n=0..5 --range x=-6..6 "
                             "--range y=-6..6 --format machine";
    const CmdResult serial = run_cli(args + " --jobs 1");
    const CmdResult threaded = run_cli(args + " --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(threaded.exit_code == 0);
    CHECK(serial.output == threaded.output);
}

TEST_CASE("verify multiple identities in one run") {
    const CmdResult r = run_cli("verify pascal s_diagonal --strategy symbolic");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "pascal: PASS strategy=symbolic"));
    CHECK(contains(r.output, "s_diagonal: PASS strategy=symbolic"));
}

TEST_CASE("verify points strategy alone") {
    const CmdResult r = run_cli("verify eq_xincrement --strategy points --range n=0..8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "eq_xincrement: PASS strategy=points"));
}

TEST_CASE("unknown identity fails before any verification") {
    const CmdResult r = run_cli("verify pascal no_such_identity");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "no_such_identity"));
    CHECK_FALSE(contains(r.output, "pascal: "));
}

TEST_CASE("bare verify is a usage error") {
    const CmdResult r = run_cli("verify");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bad strategy value is a usage error") {
    const CmdResult r = run_cli("verify pascal --strategy bogus");
    CHECK(r.exit_code == 2);
}

TEST_CASE("malformed range is rejected") {
    const CmdResult r = run_cli("verify pascal --range n=5");
    CHECK(r.exit_code == 2);
    const CmdResult below = run_cli("verify pascal --range n=-4..4");
    CHECK(below.exit_code == 2);
    CHECK(contains(below.output, "below"));
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("expand prints the exact normal form") {
    const CmdResult square = run_cli("expand \"f: (x+1)^2\"");
    CHECK(square.exit_code == 0);
    CHECK(square.output == "x^2 + 2*x + 1\n");

    const CmdResult choose = run_cli("expand \"binom(x, 3)\"");
    CHECK(choose.exit_code == 0);
    CHECK(choose.output == "1/6*x^3 - 1/2*x^2 + 1/3*x\n");

    const CmdResult bound = run_cli("expand \"sum(m = 0 .. n, binom(x, m))\" --bind n=2");
    CHECK(bound.exit_code == 0);
    CHECK(bound.output == "1/2*x^2 + 1/2*x + 1\n");
}

TEST_CASE("expand without a needed binding fails") {
    const CmdResult r = run_cli("expand \"binom(x, n)\"");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "n"));
}

TEST_CASE("expand syntax errors carry positions") {
    const CmdResult r = run_cli("expand \"x @ y\"");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "line 1, column 3"));
}

TEST_CASE("table values") {
    const CmdResult r = run_cli("table S --n 0..4 --x 0..8 --format machine");
    CHECK(r.exit_code == 0);
    for (int x = 0; x <= 8; ++x) {
        CHECK(contains(r.output, "table family=S n=0 x=" + std::to_string(x) + " value=1\n"));
    }
    CHECK(contains(r.output, "table family=S n=4 x=4 value=1\n"));
    CHECK(contains(r.output, "table family=S n=1 x=5 value=4\n"));
    CHECK(contains(r.output, "table family=S n=2 x=0 value=2\n"));

    const CmdResult text = run_cli("table S --n 0..2 --x -2..2");
    CHECK(text.exit_code == 0);
    CHECK(contains(text.output, "x=-2"));
    CHECK(contains(text.output, "n=2"));

    CHECK(run_cli("table Q").exit_code == 2);
    CHECK(run_cli("table S --n 5..1").exit_code == 2);
}

TEST_CASE("verify identities from a file") {
    const char* data = std::getenv("BINOMID_DATA");
    REQUIRE_MESSAGE(data != nullptr, "BINOMID_DATA must point at the identities directory");
    const std::string sample = std::string(data) + "/sample.bid";
    const CmdResult all = run_cli("verify --file \"" + sample + "\"");
    CHECK(all.exit_code == 0);
    CHECK(contains(all.output, "absorption: PASS"));
    CHECK(contains(all.output, "hockey_stick: PASS"));

    const CmdResult one = run_cli("verify hockey_stick --file \"" + sample + "\"");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.output, "hockey_stick: PASS"));
    CHECK_FALSE(contains(one.output, "absorption"));

    const CmdResult missing = run_cli("verify nope --file \"" + sample + "\"");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("file syntax errors are reported with positions") {
    const std::string path = "/tmp/binomid_cli_bad.bid";
    {
        std::ofstream out(path);
        out << "identity broken\nparams n >= 0\nvars x\nlhs binom(x n)\nrhs x\n";
    }
    const CmdResult r = run_cli("verify --file " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "line 4"));
    std::remove(path.c_str());
}

TEST_CASE("a false identity from a file yields exit 1 and witnesses") {
    const std::string path = "/tmp/binomid_cli_false.bid";
    {
        std::ofstream out(path);
        out << "identity off_by_one\nparams n >= 0\nvars x\n"
               "lhs binom(x, n + 1)\nrhs binom(x - 1, n + 1) + 2*binom(x - 1, n)\n";
    }
    const CmdResult r = run_cli("verify --file " + path + " --format machine");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "counterexample identity=off_by_one strategy=symbolic"));
    CHECK(contains(r.output, "counterexample identity=off_by_one strategy=points"));
    CHECK(contains(r.output, "status=fail"));
    std::remove(path.c_str());
}
