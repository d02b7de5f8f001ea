#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "cycloqsp/cli.hpp"

using namespace cycloqsp::cli;
using nlohmann::json;

namespace {

struct ExecResult {
    int exit_code = -1;
    std::string output;
};

ExecResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CYCLOQSP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    ExecResult result;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.output.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

// Every line must be a JSON document that survives parse -> dump -> parse.
std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> docs;
    for (const auto& line : lines_of(text)) {
        auto doc = json::parse(line);
        CHECK(json::parse(doc.dump()) == doc);
        docs.push_back(std::move(doc));
    }
    return docs;
}

}  // namespace

TEST_CASE("angles command") {
    std::ostringstream out;
    const auto report = cmd_angles(3, Format::json, out);
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.exit_code() == 0);
    const auto docs = parse_jsonl(out.str());
    REQUIRE(docs.size() == 1);
    CHECK(docs[0]["degree"] == 3);
    CHECK(docs[0]["angles_as_multiples_of_2pi_over_n"] == json({1, 2, 0}));

    std::ostringstream err_out;
    const auto even = cmd_angles(4, Format::json, err_out);
    CHECK(even.verdict == Verdict::error);
    CHECK(even.exit_code() == 2);
    CHECK(even.details.find("odd") != std::string::npos);
    CHECK(err_out.str().empty());
}

TEST_CASE("angles via the binary") {
    const auto csv = run_cli("angles --degree 3 --format csv");
    CHECK(csv.exit_code == 0);
    const auto rows = lines_of(csv.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "index,angle_radians");
    CHECK(rows[1].substr(0, 2) == "1,");
    CHECK(std::stod(rows[1].substr(2)) == doctest::Approx(2.0943951023931953).epsilon(1e-15));
    CHECK(rows[3] == "3,0");

    CHECK(run_cli("angles --degree 4").exit_code == 2);
    CHECK(run_cli("angles --degree -1").exit_code == 2);
    CHECK(run_cli("angles").exit_code == 2);  // missing required flag

    const auto single = run_cli("angles --degree 1 --format csv");
    CHECK(single.exit_code == 0);
    CHECK(lines_of(single.output) == std::vector<std::string>{"index,angle_radians", "1,0"});
}

TEST_CASE("verify-exact streams one record per degree") {
    std::ostringstream out;
    const auto report = cmd_verify_exact(1, 9, false, Format::json, out);
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.exit_code() == 0);
    const auto docs = parse_jsonl(out.str());
    REQUIRE(docs.size() == 5);  // odd degrees only
    std::vector<int> ns;
    for (const auto& doc : docs) {
        ns.push_back(doc["n"].get<int>());
        CHECK(doc["verdict"] == "holds");
        CHECK(doc.contains("wall_ms"));
        CHECK_FALSE(doc.contains("witness"));
    }
    CHECK(ns == std::vector<int>{1, 3, 5, 7, 9});
}

TEST_CASE("verify-exact reports the even witness") {
    std::ostringstream out;
    const auto report = cmd_verify_exact(2, 2, true, Format::json, out);
    CHECK(report.verdict == Verdict::fail);
    CHECK(report.exit_code() == 1);
    const auto docs = parse_jsonl(out.str());
    REQUIRE(docs.size() == 1);
    CHECK(docs[0]["verdict"] == "fails");
    CHECK(docs[0]["witness"] == "x^0 y^2: [-1]; x^2 y^0: [-1]");

    // without the flag the range selects nothing even
    std::ostringstream out2;
    const auto skipped = cmd_verify_exact(2, 2, false, Format::json, out2);
    CHECK(skipped.verdict == Verdict::pass);
    CHECK(parse_jsonl(out2.str()).empty());

    std::ostringstream out3;
    CHECK(cmd_verify_exact(5, 3, false, Format::json, out3).exit_code() == 2);
    CHECK(cmd_verify_exact(0, 3, false, Format::json, out3).exit_code() == 2);
}

TEST_CASE("verify-exact csv output is a valid table") {
    const auto res = run_cli("verify-exact --min 1 --max 5 --format csv");
    CHECK(res.exit_code == 0);
    const auto rows = lines_of(res.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,verdict,wall_ms,witness");
    CHECK(rows[1].substr(0, 8) == "1,holds,");
}

TEST_CASE("verify-numeric thresholds") {
    std::ostringstream out;
    const auto pass = cmd_verify_numeric(3, 1000, 42, 1e-10, Format::json, out);
    CHECK(pass.verdict == Verdict::pass);
    const auto docs = parse_jsonl(out.str());
    REQUIRE(docs.size() == 1);
    CHECK(docs[0]["verdict"] == "pass");
    CHECK(docs[0]["max_abs_error"].get<double>() <= 1e-10);
    CHECK(docs[0]["samples"] == 1000);

    std::ostringstream out2;
    // below the float noise floor
    const auto fail = cmd_verify_numeric(3, 1000, 42, 1e-18, Format::json, out2);
    CHECK(fail.verdict == Verdict::fail);
    CHECK(fail.exit_code() == 1);

    std::ostringstream out3;
    CHECK(cmd_verify_numeric(4, 100, 1, 1e-9, Format::json, out3).exit_code() == 2);
}

TEST_CASE("verify-numeric is stable across runs") {
    const std::string args = "verify-numeric --degree 9 --samples 300 --seed 7 --tol 1e-9";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("check-lemmas passes exhaustively at order five") {
    std::ostringstream out;
    const auto report = cmd_check_lemmas(5, Format::json, out);
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.details.find("16 functions") != std::string::npos);
    const auto docs = parse_jsonl(out.str());
    REQUIRE(docs.size() == 7);
    for (const auto& doc : docs) {
        CHECK(doc["failures"] == 0);
        CHECK(doc["verdict"] == "pass");
    }
    CHECK(docs[0]["check"] == "normal_form_oracle");
    CHECK(docs[0]["cases"] == 32);
    CHECK(docs[2]["check"] == "lemma2_star_negation");
    CHECK(docs[2]["cases"] == 80);  // 16 functions x 5 shifts
    CHECK(docs[6]["check"] == "orbit_sum");
    CHECK(docs[6]["cases"] == 16);
}

TEST_CASE("check-lemmas surfaces the even-order degeneracy without failing") {
    std::ostringstream out;
    const auto report = cmd_check_lemmas(4, Format::json, out);
    CHECK(report.verdict == Verdict::pass);
    CHECK(report.exit_code() == 0);
    const auto docs = parse_jsonl(out.str());
    bool found = false;
    for (const auto& doc : docs) {
        if (doc["check"] != "even_degeneracy") continue;
        found = true;
        CHECK(doc["verdict"] == "info");
        CHECK(doc["note"].get<std::string>().find("known even-n degeneracy") !=
              std::string::npos);
        const auto witnesses = doc["functions"].get<std::vector<std::string>>();
        CHECK(std::find(witnesses.begin(), witnesses.end(), "+-+-") != witnesses.end());
    }
    CHECK(found);
    // no shift-rule or orbit-sum records at even orders
    for (const auto& doc : docs) {
        CHECK(doc["check"] != "lemma2_shift_rule");
        CHECK(doc["check"] != "orbit_sum");
    }
}

TEST_CASE("check-lemmas rejects tiny and huge orders") {
    std::ostringstream out;
    CHECK(cmd_check_lemmas(2, Format::json, out).exit_code() == 2);
    CHECK(cmd_check_lemmas(40, Format::json, out).exit_code() == 2);
    CHECK(run_cli("check-lemmas --degree 3").exit_code == 0);
}

TEST_CASE("unknown flags and subcommands are invocation errors") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify-exact --min 1").exit_code == 2);  // missing --max
    CHECK(run_cli("--help").exit_code == 0);
}
