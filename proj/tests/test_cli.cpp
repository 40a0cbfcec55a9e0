#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winger/verify.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace winger;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const fs::path kWorkDir = fs::path(WINGER_TEST_DIR) / "cli";

int run_cli(const std::string& args, const std::string& stdout_file = "/dev/null") {
    fs::create_directories(kWorkDir);
    std::string cmd = std::string(WINGER_CLI) + " " + args + " > " + stdout_file + " 2> " + (kWorkDir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("full run writes a consistent report") {
    fs::path report = kWorkDir / "full.json";
    int code = run_cli("--report " + report.string());
    auto j = ordered_json::parse(slurp(report));
    CHECK(j["format"] == "winger-report 1");
    CHECK(j["suites"].size() == suite_names().size());
    std::size_t pass = 0, fail = 0;
    for (const auto& s : j["suites"])
        for (const auto& c : s["checks"]) (c["status"] == "pass" ? pass : fail) += 1;
    CHECK(j["summary"]["pass"] == pass);
    CHECK(j["summary"]["fail"] == fail);
    CHECK(code == (fail == 0 ? 0 : 1));
    CHECK(j["headline"]["index_in_SL2O"] == 20);
    CHECK(j["headline"]["index_SL2Oo_in_SL2O"] == 10);
    CHECK(j["headline"]["index_in_SL2Oo"] == 2);
    CHECK(!j["suites"][0].contains("tables"));
}

TEST_CASE("reports are deterministic") {
    fs::path a = kWorkDir / "a.json", b = kWorkDir / "b.json";
    run_cli("--report " + a.string());
    run_cli("--report " + b.string());
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("module filter") {
    fs::path report = kWorkDir / "rep.json";
    run_cli("--modules rep-a5 --report " + report.string());
    auto j = ordered_json::parse(slurp(report));
    REQUIRE(j["suites"].size() == 1);
    CHECK(j["suites"][0]["name"] == "rep-a5");
    CHECK(!j.contains("headline"));
    auto want = rep_a5_checks();
    REQUIRE(j["suites"][0]["checks"].size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(j["suites"][0]["checks"][i]["name"] == want[i].name);

    CHECK(run_cli("--modules no-such-suite") == 1);
}

TEST_CASE("coset limit overflow exits with 2") {
    CHECK(run_cli("--coset-limit 5 --modules fp-groups") == 2);
    CHECK(slurp(kWorkDir / "stderr.txt").find("overflow") != std::string::npos);
    CHECK(run_cli("--coset-limit 5 dump-cosets") == 2);
    CHECK(run_cli("--coset-limit 0") != 0);
}

TEST_CASE("unwritable report path") {
    CHECK(run_cli("--modules fp-groups --report /nonexistent-dir/r.json") == 1);
}

TEST_CASE("tables are opt-in") {
    fs::path report = kWorkDir / "tables.json";
    run_cli("--modules fp-groups --emit-tables --report " + report.string());
    auto j = ordered_json::parse(slurp(report));
    REQUIRE(j["suites"][0].contains("tables"));
    CHECK(j["suites"][0]["tables"]["coset_table"].size() == 20);
}

TEST_CASE("dumps") {
    fs::path out = kWorkDir / "sigma.txt";
    CHECK(run_cli("dump-complex sigma -o " + out.string()) == 0);
    const auto& c = surface_model(Model::sigma).complex;
    CHECK(lines(slurp(out)) == 3 + c.n0 + c.n1 + c.n2);
    fs::path pi = kWorkDir / "pi.txt";
    CHECK(run_cli("dump-complex pi", pi.string()) == 0);
    CHECK(slurp(pi).rfind("# model pi\n", 0) == 0);
    CHECK(run_cli("dump-complex tetrahedron") != 0);
    fs::path cos = kWorkDir / "cosets.txt";
    CHECK(run_cli("dump-cosets --out " + cos.string()) == 0);
    CHECK(lines(slurp(cos)) == 22);
}

TEST_CASE("failing checks are reported verbatim") {
    RunResult r;
    SuiteResult s;
    s.name = "rep-a5";
    s.checks.push_back(make_check("demo.ok", "1", "1"));
    s.checks.push_back(make_check("demo.bad", "{-Id, Id}", "{-Id, Id, 2+1*X}"));
    r.suites.push_back(s);
    auto j = ordered_json::parse(render_report(r));
    const auto& bad = j["suites"][0]["checks"][1];
    CHECK(bad["status"] == "fail");
    CHECK(bad["expected"] == "{-Id, Id}");
    CHECK(bad["actual"] == "{-Id, Id, 2+1*X}");
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(r.failed() == 1);
}
