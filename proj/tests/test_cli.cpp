// Exit-code contract of the CLI: 0 pass, 1 verified-false, 2 usage/parse error.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(DERIVKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("exit 0 on verified-true runs") {
    CHECK(run("check-order \"D\" --n 1 --seed 42") == 0);
    CHECK(run("decompose \"3*id + t*D^2\" --n 2 --seed 42") == 0);
    CHECK(run("poly-decompose \"x^2+3*x+1\" --n 2 --seed 42") == 0);
    CHECK(run("stabilize --lambda 2 --epsilon 1/100 --depth 10 --samples 20 --seed 42") == 0);
}

TEST_CASE("exit 1 on verified-false runs") {
    CHECK(run("check-order \"D^2\" --n 1 --seed 42") == 1);
    CHECK(run("check-order \"id\" --n 1 --seed 42") == 1);
    CHECK(run("decompose \"3*id + D^2\" --n 1 --seed 42") == 1);
    CHECK(run("poly-decompose \"x^3\" --n 2 --seed 42") == 1);
    CHECK(run("stabilize --fixture square --depth 8 --samples 20 --seed 42") == 1);
}

TEST_CASE("exit 2 on usage and parse errors") {
    CHECK(run("check-order \"D^\" --n 1") == 2);
    CHECK(run("check-order \"t + D\" --n 1") == 2);
    CHECK(run("check-order") == 2);
    CHECK(run("no-such-command") == 2);
    CHECK(run("poly-decompose \"1/x\" --n 2") == 2);
}

TEST_CASE("probe dump/load reproduces the stabilize report") {
    std::string dir = "/tmp/derivkit_cli_test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    std::string probes = dir + "/probes.txt";
    std::string out1 = dir + "/a.json";
    std::string out2 = dir + "/b.json";
    std::string base = std::string(DERIVKIT_CLI_PATH) +
                       " stabilize --lambda 2 --epsilon 1/100 --depth 10 --samples 20 --seed 42";
    CHECK(std::system((base + " --dump-probes " + probes + " > " + out1 + " 2>/dev/null").c_str()) == 0);
    CHECK(std::system((base + " --probes-file " + probes + " > " + out2 + " 2>/dev/null").c_str()) == 0);
    CHECK(std::system(("cmp -s " + out1 + " " + out2).c_str()) == 0);
}
