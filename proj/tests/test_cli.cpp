#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "kwise/certificate_io.hpp"
#include "kwise/rational.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(KWISE_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("compute emits the exact certificate") {
    const RunResult run = run_cli("compute --n 4 --k 2 --p 1/2");
    REQUIRE(run.exit_code == 0);
    const auto json = nlohmann::json::parse(run.output);
    CHECK(json["M"] == "1/6");
    CHECK(json["support"] == nlohmann::json({1, 2, 4}));
    CHECK(json["masses"] == nlohmann::json({"1/3", "1/2", "1/6"}));
    CHECK(json["checks"]["moments"] == true);
    CHECK(json["checks"]["zero_gap"] == true);
}

TEST_CASE("compute accepts decimal marginals exactly") {
    const RunResult run = run_cli("compute --n 6 --k 2 --p 0.3");
    REQUIRE(run.exit_code == 0);
    const auto json = nlohmann::json::parse(run.output);
    CHECK(json["p"] == "3/10");
}

TEST_CASE("odd k is reported as a reduction") {
    const RunResult run = run_cli("compute --n 4 --k 3 --p 1/2");
    REQUIRE(run.exit_code == 0);
    const auto json = nlohmann::json::parse(run.output);
    CHECK(json["M"] == "1/8");
    CHECK(json["reduction"] == "odd");
}

TEST_CASE("both routes must agree") {
    const RunResult run = run_cli("compute --n 12 --k 4 --p 2/3 --method both");
    REQUIRE(run.exit_code == 0);
    const auto json = nlohmann::json::parse(run.output);
    CHECK(json["agreement"] == true);
    CHECK(json["M"] == json["dual"]["M"]);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("compute --n 3 --k 5 --p 1/2").exit_code == 1);
    CHECK(run_cli("compute --n 3 --k 2 --p 7/5").exit_code == 1);
    CHECK(run_cli("compute --n 3 --k 2 --p 0.5x").exit_code == 1);
    CHECK(run_cli("verify --suite nonsense").exit_code == 1);
    CHECK(run_cli("poly --n 4 --k 3 --p 1/2 --samples 5").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("the enumeration budget maps to exit 3") {
    CHECK(run_cli("compute --n 20 --k 8 --p 1/2 --method dual --max-candidates 10")
              .exit_code == 3);
}

TEST_CASE("scan covers the small grid with exact columns") {
    const RunResult run = run_cli("scan --ns 3,4 --ks 2 --ps 1/2");
    REQUIRE(run.exit_code == 0);
    CHECK(run.output ==
          "n,k,p,M,M_tilde,ratio,degenerate,regime,status\n"
          "3,2,1/2,1/4,1/4,1,1,na,ok\n"
          "4,2,1/2,1/6,1/5,6/5,0,na,ok\n");
}

TEST_CASE("scan records per-row failures without failing the run") {
    const RunResult run = run_cli("scan --ns 3 --ks 2,5 --ps 1/2");
    REQUIRE(run.exit_code == 0);
    CHECK(run.output.find("3,5,1/2,,,,,") != std::string::npos);
    CHECK(run.output.find("error:") != std::string::npos);
}

TEST_CASE("poly emits the sampled dual polynomial with its zeros") {
    const RunResult run = run_cli("poly --n 20 --k 6 --p 1/2 --samples 401 --out /tmp/kwise_poly_test.csv");
    REQUIRE(run.exit_code == 0);
    const auto meta = nlohmann::json::parse(run.output);
    const auto zeros = meta["zeros"].get<std::vector<long>>();
    REQUIRE(zeros.size() == 6);
    for (size_t i = 0; i < zeros.size(); i += 2) {
        CHECK(zeros[i + 1] == zeros[i] + 1); // adjacent pairs
    }

    std::ifstream csv("/tmp/kwise_poly_test.csv");
    REQUIRE(csv.good());
    std::string header, line;
    std::getline(csv, header);
    CHECK(header == "x,P");
    size_t rows = 0;
    std::string last;
    while (std::getline(csv, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == 401);
    CHECK(last == "20,1"); // P(n) = 1 exactly
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string invocation = "sample --n 4 --k 2 --p 1/2 --count 200 --seed 42";
    const RunResult a = run_cli(invocation);
    const RunResult b = run_cli(invocation);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    const RunResult c = run_cli("compute --n 10 --k 4 --p 3/10 --method both");
    const RunResult d = run_cli("compute --n 10 --k 4 --p 3/10 --method both");
    REQUIRE(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("emitted rationals round-trip through parse and re-serialize") {
    const RunResult run = run_cli("compute --n 9 --k 4 --p 2/3");
    REQUIRE(run.exit_code == 0);
    const auto json = nlohmann::json::parse(run.output);
    for (const std::string key : {"p", "M"}) {
        const auto text = json[key].get<std::string>();
        CHECK(kwise::Rational::from_string(text).str() == text);
    }
    for (const std::string key : {"masses", "dual_coeffs"}) {
        for (const auto& entry : json[key]) {
            const auto text = entry.get<std::string>();
            CHECK(kwise::Rational::from_string(text).str() == text);
        }
    }
}

TEST_CASE("sample emits weight-consistent bitstrings") {
    const RunResult run = run_cli("sample --n 4 --k 2 --p 1/2 --count 50 --seed 7");
    REQUIRE(run.exit_code == 0);
    size_t lines = 0;
    std::stringstream ss(run.output);
    std::string line;
    while (std::getline(ss, line)) {
        ++lines;
        CHECK(line.size() == 4);
        for (char c : line) CHECK((c == '0' || c == '1'));
    }
    CHECK(lines == 50);
}

TEST_CASE("certificate reserialization reproduces the bytes") {
    const RunResult run = run_cli("compute --n 8 --k 2 --p 1/3");
    REQUIRE(run.exit_code == 0);
    // drop the trailing newline added by the CLI
    std::string text = run.output;
    while (!text.empty() && text.back() == '\n') text.pop_back();
    const auto json = nlohmann::json::parse(text);
    (void)json;
    CHECK(kwise::reserialize_certificate_json(text) == text);
}
