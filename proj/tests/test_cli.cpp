#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kSpecText = R"({"family":"boundary_well","N":11,"shift":"0",
                            "couplings":["9/10","-9/10","9/10","-9/10"]})";

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("epsolve_cli_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(EPSOLVE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_spec(const TempDir& tmp, const std::string& text) {
    fs::path p = tmp.dir / "spec.json";
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST_CASE("cli build writes matrix dumps and a manifest") {
    TempDir tmp;
    auto spec = write_spec(tmp, kSpecText);
    const int rc = run_cli("build --spec " + spec.string() + " --out " + tmp.dir.string() +
                           " --no-timestamp");
    REQUIRE(rc == 0);
    json m = json::parse(slurp(tmp.dir / "matrix.json"));
    CHECK(m["N"] == 11);
    CHECK(fs::exists(tmp.dir / "matrix.csv"));
    json manifest = json::parse(slurp(tmp.dir / "manifest.json"));
    CHECK(manifest["command"] == "build");
    CHECK(!manifest.contains("timestamp_unix"));
}

TEST_CASE("cli secular reproduces the published polynomial and its collapse") {
    TempDir tmp;
    auto spec = write_spec(tmp, kSpecText);
    const int rc = run_cli("secular --spec " + spec.string() + " --path t,-t,t,-t --eval-t 1" +
                           " --out " + tmp.dir.string() + " --no-timestamp");
    REQUIRE(rc == 0);
    json sec = json::parse(slurp(tmp.dir / "secular.json"));
    CHECK(sec["coeffs"][9][0] == "-10");
    json at1 = json::parse(slurp(tmp.dir / "secular_at_t.json"));
    CHECK(at1["coeffs"][9] == "-2");
    json prof = json::parse(slurp(tmp.dir / "secular_at_t_profile.json"));
    CHECK(prof["degree"] == 11);
}

TEST_CASE("cli metric prints the exact-zero certificate") {
    TempDir tmp;
    auto spec = write_spec(tmp, kSpecText);
    REQUIRE(run_cli("metric --spec " + spec.string() + " --tridiag --v 1/100 --out " +
                    tmp.dir.string() + " --no-timestamp") == 0);
    json m = json::parse(slurp(tmp.dir / "metric.json"));
    CHECK(m["residual_exact_zero"] == true);
    CHECK(m["admissible_v"].size() == 2);
}

TEST_CASE("cli sweep and ep write their artifacts") {
    TempDir tmp;
    auto spec = write_spec(tmp, kSpecText);
    REQUIRE(run_cli("sweep --spec " + spec.string() + " --path t,-t,t,-t --grid 0.9:1.1:0.01" +
                    " --out " + tmp.dir.string() + " --no-timestamp") == 0);
    CHECK(slurp(tmp.dir / "sweep.csv").substr(0, 2) == "t,");
    json events = json::parse(slurp(tmp.dir / "events.json"));
    CHECK(events.size() == 1);

    REQUIRE(run_cli("ep --spec " + spec.string() + " --path t,-t,t,-t --out " + tmp.dir.string() +
                    " --no-timestamp") == 0);
    json report = json::parse(slurp(tmp.dir / "ep_report.json"));
    CHECK(report["points"].size() == 2);
}

TEST_CASE("cli verify-fixtures") {
    TempDir tmp;
    REQUIRE(run_cli("verify-fixtures --out " + tmp.dir.string() + " --no-timestamp") == 0);
    json report = json::parse(slurp(tmp.dir / "fixture_report.json"));
    CHECK(report["checksum_ok"] == true);
}

TEST_CASE("cli exit codes") {
    TempDir tmp;
    // malformed rational in the spec -> constraint violation
    auto bad = write_spec(tmp, R"({"family":"boundary_well","N":3,"couplings":["1/0"]})");
    CHECK(run_cli("build --spec " + bad.string() + " --out " + tmp.dir.string()) == 2);
    // couplings on the EP boundary -> outside the unitarity domain
    auto pole = write_spec(tmp, R"({"family":"boundary_well","N":5,"couplings":["1"]})");
    CHECK(run_cli("metric --spec " + pole.string() + " --out " + tmp.dir.string()) == 3);
    // unknown flags and missing requireds -> constraint violation
    CHECK(run_cli("secular --spec " + bad.string()) == 2);
    CHECK(run_cli("definitely-not-a-subcommand") == 2);
    CHECK(run_cli("build --spec /nonexistent/path.json") == 2);
}

TEST_CASE("cli determinism: identical runs produce identical bytes") {
    TempDir a, b;
    auto spec_a = write_spec(a, kSpecText);
    REQUIRE(run_cli("secular --spec " + spec_a.string() + " --path t,-t,t,-t --out " +
                    a.dir.string() + " --no-timestamp") == 0);
    auto spec_b = write_spec(b, kSpecText);
    REQUIRE(run_cli("secular --spec " + spec_b.string() + " --path t,-t,t,-t --out " +
                    b.dir.string() + " --no-timestamp") == 0);
    CHECK(slurp(a.dir / "secular.json") == slurp(b.dir / "secular.json"));
    // manifests differ only in the recorded spec path; scrub it
    json ma = json::parse(slurp(a.dir / "manifest.json"));
    json mb = json::parse(slurp(b.dir / "manifest.json"));
    ma.erase("spec_file");
    mb.erase("spec_file");
    CHECK(ma == mb);
}
