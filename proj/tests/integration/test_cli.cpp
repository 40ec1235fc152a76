// End-to-end checks of the installed command-line surface: exit codes,
// output shapes, and the byte-exact table export.

#include "naqm/verification.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(NAQM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("verify subcommand") {
    SUBCASE("single suite prints the case tally") {
        const RunResult r = run_cli("verify --suite quaternion-bracket");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("9/9 passed") != std::string::npos);
    }
    SUBCASE("all runs the twelve-suite registry") {
        const RunResult r = run_cli("verify --suite all");
        CHECK(r.exit_code == 0);
        std::istringstream stream(r.output);
        std::string line;
        std::size_t suite_lines = 0;
        while (std::getline(stream, line)) {
            if (line.find("/") != std::string::npos && line.find(" passed") != std::string::npos &&
                line.rfind("  ", 0) != 0 && line.rfind("all ", 0) != 0)
                ++suite_lines;
        }
        CHECK(suite_lines == 12);
        CHECK(r.output.find("all requested suites passed") != std::string::npos);
    }
    SUBCASE("unknown suite is a usage error") {
        CHECK(run_cli("verify --suite bogus").exit_code == 2);
    }
    SUBCASE("json format is machine readable") {
        const RunResult r = run_cli("verify --suite leibniz-failure --format json");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("\"suite\": \"leibniz-failure\"") != std::string::npos);
        CHECK(r.output.find("\"failures\": []") != std::string::npos);
        CHECK(r.output.find("quaternionic m=1 b=i5 c=i6") != std::string::npos);
    }
    SUBCASE("extra reports outside the registry") {
        CHECK(run_cli("verify --suite matrix-rep").output.find("16/16 passed") !=
              std::string::npos);
        CHECK(run_cli("verify --suite pauli-relations").output.find("9/9 passed") !=
              std::string::npos);
    }
    SUBCASE("non-default hbar-tilde still passes") {
        CHECK(run_cli("verify --suite scaled-brackets --hbar-tilde 0.7").exit_code == 0);
    }
}

TEST_CASE("eval subcommand") {
    SUBCASE("bracket value") {
        const RunResult r = run_cli("eval \"[i4,i5,i2]\"");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "-2*i3\n");
    }
    SUBCASE("table product") {
        CHECK(run_cli("eval \"i0*i1\"").output == "-e1\n");
    }
    SUBCASE("scalar arithmetic") {
        CHECK(run_cli("eval \"I*I\"").output == "-1\n");
    }
    SUBCASE("errors exit with 3") {
        CHECK(run_cli("eval \"i1*\"").exit_code == 3);
        CHECK(run_cli("eval \"j2\"").exit_code == 3);
    }
}

TEST_CASE("table subcommand") {
    SUBCASE("csv output is the bit-exact fixture") {
        const RunResult r = run_cli("table --format csv");
        CHECK(r.exit_code == 0);
        CHECK(r.output == naqm::verification::reference_table_csv());
        CHECK(count_lines(r.output) == 17);
    }
    SUBCASE("markdown cells carry signed tokens") {
        const RunResult r = run_cli("table --format markdown");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("| -e7 |") != std::string::npos);
    }
    SUBCASE("unknown format is a usage error") {
        CHECK(run_cli("table --format xml").exit_code == 2);
    }
}

TEST_CASE("simulate subcommand") {
    const std::string temp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/naqm_cli_test_trajectory.csv";
    SUBCASE("default run writes the rotation CSV and drift summary") {
        const RunResult r = run_cli("simulate --model na-qubit --output " + temp);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("rows: 6284") != std::string::npos);
        CHECK(r.output.find("drift:") != std::string::npos);
        std::ifstream file(temp);
        REQUIRE(file.good());
        std::string header;
        std::getline(file, header);
        CHECK(header == "t,s1,s2,s3");
        std::string first;
        std::getline(file, first);
        CHECK(first == "0,1,0,0");
        std::remove(temp.c_str());
    }
    SUBCASE("extended oscillatory run stays bounded") {
        const RunResult r =
            run_cli("simulate --model extended --n1 1 --n2 -1 --t-max 6.0 --output " + temp);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("|s|^2+|l|^2 drift:") != std::string::npos);
        std::ifstream file(temp);
        REQUIRE(file.good());
        std::string header;
        std::getline(file, header);
        CHECK(header == "t,s1,s2,s3,l1,l2,l3");
        std::remove(temp.c_str());
    }
    SUBCASE("zero step size is a usage error") {
        CHECK(run_cli("simulate --model na-qubit --dt 0").exit_code == 2);
    }
    SUBCASE("t-max below dt is a usage error") {
        CHECK(run_cli("simulate --model na-qubit --t-max 1e-5 --dt 1e-3").exit_code == 2);
    }
    SUBCASE("hyperbolic blow-up is reported, exit 1") {
        const RunResult r = run_cli(
            "simulate --model extended --s0 1,0,0 --l0 0,1,0 --t-max 1000 --dt 0.01 --output " +
            temp);
        CHECK(r.exit_code == 1);
        std::remove(temp.c_str());
    }
}

TEST_CASE("top-level usage") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
