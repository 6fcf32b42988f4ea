// epsolve command-line front end.  Talks to the library exclusively through
// the C API in epsolve.h; every run drops a manifest next to its outputs.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "epsolve.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
    std::string spec_file;
    std::string path;
    std::string grid = "-1.5:1.5:0.01";
    std::string shift;
    std::string v;
    std::string eval_t;
    std::string out_dir = ".";
    double tol = 1e-8;
    double refine_tol = 1e-6;
    bool tridiag = false;
    bool no_timestamp = false;
};

[[noreturn]] void fail(eps_status st, const std::string& context) {
    std::cerr << "error: " << context << ": " << eps_last_error() << "\n";
    std::exit(st == EPS_OK ? EPS_ERR_INTERNAL : st);
}

void check(eps_status st, const std::string& context) {
    if (st != EPS_OK) fail(st, context);
}

std::string take(char* owned) {
    std::string s(owned ? owned : "");
    eps_string_free(owned);
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        std::cerr << "error: cannot read spec file '" << path << "'\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out.good()) {
        std::cerr << "error: cannot write '" << path.string() << "'\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    out << content;
}

struct GridValues {
    double lo, hi, step;
};

GridValues parse_grid(const std::string& text) {
    GridValues g{};
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':') {
        std::cerr << "error: bad --grid '" << text << "', expected lo:hi:step\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    return g;
}

eps_model* load_model(const Options& opt) {
    if (opt.spec_file.empty()) {
        std::cerr << "error: --spec <file> is required\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    eps_model* model = nullptr;
    check(eps_model_parse_json(read_file(opt.spec_file).c_str(), &model), "parsing model spec");
    if (!opt.shift.empty())
        check(eps_model_set_shift(model, opt.shift.c_str()), "applying --shift");
    return model;
}

void write_manifest(const Options& opt, const std::string& command, const json& extra) {
    json m;
    m["command"] = command;
    m["version"] = eps_version();
    if (!opt.spec_file.empty()) {
        m["spec_file"] = opt.spec_file;
        m["spec"] = json::parse(read_file(opt.spec_file));
    }
    if (!opt.path.empty()) m["path"] = opt.path;
    if (!opt.shift.empty()) m["shift"] = opt.shift;
    m["tolerances"] = {{"tol", opt.tol}, {"refine_tol", opt.refine_tol}};
    for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
    if (!opt.no_timestamp) {
        const auto now = std::chrono::system_clock::now();
        m["timestamp_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    write_file(fs::path(opt.out_dir) / "manifest.json", m.dump(2) + "\n");
}

void ensure_out_dir(const Options& opt) {
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << opt.out_dir << "'\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
}

int cmd_build(const Options& opt) {
    ensure_out_dir(opt);
    eps_model* model = load_model(opt);
    char* out = nullptr;
    check(eps_model_matrix_json(model, &out), "building matrix");
    write_file(fs::path(opt.out_dir) / "matrix.json", take(out) + "\n");
    check(eps_model_matrix_csv(model, &out), "building matrix");
    write_file(fs::path(opt.out_dir) / "matrix.csv", take(out));
    eps_model_free(model);
    write_manifest(opt, "build", {});
    std::cout << "wrote matrix.json and matrix.csv to " << opt.out_dir << "\n";
    return 0;
}

int cmd_metric(const Options& opt) {
    ensure_out_dir(opt);
    eps_model* model = load_model(opt);
    char* out = nullptr;
    check(eps_metric_json(model, opt.tridiag ? 1 : 0, opt.v.empty() ? nullptr : opt.v.c_str(),
                          opt.tol, &out),
          "constructing metric");
    const std::string text = take(out);
    write_file(fs::path(opt.out_dir) / "metric.json", text + "\n");
    check(eps_metric_csv(model, opt.tridiag ? 1 : 0, opt.v.empty() ? nullptr : opt.v.c_str(), &out),
          "constructing metric");
    write_file(fs::path(opt.out_dir) / "metric.csv", take(out));
    eps_model_free(model);

    json j = json::parse(text);
    if (j["residual_exact_zero"].get<bool>())
        std::cout << "residual: exact-zero\n";
    else
        std::cout << "residual: " << j["residual_nonzero_entries"] << " nonzero entries\n";
    if (opt.tridiag) {
        std::cout << "admissible v interval: (" << j["admissible_v"][0].get<double>() << ", "
                  << j["admissible_v"][1].get<double>() << ")\n";
        if (!j["v_inside_admissible"].get<bool>())
            std::cout << "warning: v lies outside the admissible interval; "
                         "the tridiagonal metric is not positive definite\n";
    }
    write_manifest(opt, "metric", {{"tridiag", opt.tridiag}, {"v", opt.v.empty() ? "0" : opt.v}});
    return 0;
}

int cmd_secular(const Options& opt) {
    ensure_out_dir(opt);
    eps_model* model = load_model(opt);
    if (opt.path.empty()) {
        std::cerr << "error: secular requires --path\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    eps_poly* poly = nullptr;
    check(eps_secular(model, opt.path.c_str(), &poly), "computing secular polynomial");
    char* out = nullptr;
    check(eps_poly_json(poly, &out), "serializing secular polynomial");
    write_file(fs::path(opt.out_dir) / "secular.json", take(out) + "\n");
    check(eps_poly_pretty(poly, &out), "printing secular polynomial");
    std::cout << take(out) << " = 0\n";

    json extra;
    if (!opt.eval_t.empty()) {
        eps_poly* slice = nullptr;
        check(eps_poly_eval_t(poly, opt.eval_t.c_str(), &slice), "evaluating at t");
        check(eps_poly_json(slice, &out), "serializing slice");
        write_file(fs::path(opt.out_dir) / "secular_at_t.json", take(out) + "\n");
        check(eps_poly_pretty(slice, &out), "printing slice");
        std::cout << "at t = " << opt.eval_t << ": " << take(out) << " = 0\n";
        check(eps_poly_profile_json(slice, &out), "profiling slice");
        write_file(fs::path(opt.out_dir) / "secular_at_t_profile.json", take(out) + "\n");
        eps_poly_free(slice);
        extra["eval_t"] = opt.eval_t;
    }
    eps_poly_free(poly);
    eps_model_free(model);
    write_manifest(opt, "secular", extra);
    return 0;
}

int cmd_sweep(const Options& opt) {
    ensure_out_dir(opt);
    eps_model* model = load_model(opt);
    if (opt.path.empty()) {
        std::cerr << "error: sweep requires --path\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    const GridValues g = parse_grid(opt.grid);
    eps_sweep* sweep = nullptr;
    check(eps_sweep_run(model, opt.path.c_str(), g.lo, g.hi, g.step, &sweep), "sweeping");
    char* out = nullptr;
    check(eps_sweep_csv(sweep, &out), "serializing sweep");
    write_file(fs::path(opt.out_dir) / "sweep.csv", take(out));
    check(eps_sweep_events_json(sweep, opt.refine_tol, &out), "detecting complexifications");
    const std::string events = take(out);
    write_file(fs::path(opt.out_dir) / "events.json", events + "\n");
    eps_sweep_free(sweep);
    eps_model_free(model);
    std::cout << "wrote sweep.csv; complexification events: " << json::parse(events).size()
              << "\n";
    write_manifest(opt, "sweep", {{"grid", opt.grid}});
    return 0;
}

int cmd_ep(const Options& opt) {
    ensure_out_dir(opt);
    eps_model* model = load_model(opt);
    if (opt.path.empty()) {
        std::cerr << "error: ep requires --path\n";
        std::exit(EPS_ERR_CONSTRAINT);
    }
    char* out = nullptr;
    check(eps_ep_report(model, opt.path.c_str(), &out), "locating exceptional points");
    const std::string report = take(out);
    write_file(fs::path(opt.out_dir) / "ep_report.json", report + "\n");
    eps_model_free(model);
    json j = json::parse(report);
    std::cout << "EP locations on path " << opt.path << ": " << j["points"].size() << " point(s)\n";
    for (const auto& p : j["points"]) {
        if (p.contains("t"))
            std::cout << "  t = " << p["t"].get<std::string>() << " (exact)\n";
        else
            std::cout << "  t in [" << p["interval"][0].get<std::string>() << ", "
                      << p["interval"][1].get<std::string>() << "]\n";
    }
    write_manifest(opt, "ep", {});
    return 0;
}

int cmd_verify_fixtures(const Options& opt) {
    ensure_out_dir(opt);
    char* out = nullptr;
    check(eps_fixture_verify(&out), "verifying fixtures");
    const std::string report = take(out);
    write_file(fs::path(opt.out_dir) / "fixture_report.json", report + "\n");
    std::cout << report << "\n";
    write_manifest(opt, "verify-fixtures", {});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crypto-Hermitian model toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_spec) {
        if (needs_spec) sub->add_option("--spec", opt.spec_file, "model spec JSON file");
        sub->add_option("--out", opt.out_dir, "output directory (default .)");
        sub->add_option("--shift", opt.shift, "diagonal shift override, rational");
        sub->add_flag("--no-timestamp", opt.no_timestamp, "omit the manifest timestamp");
    };

    auto* build = app.add_subcommand("build", "emit the exact matrix as JSON and float CSV");
    add_common(build, true);

    auto* metric = app.add_subcommand("metric", "construct the Hermitizing metric");
    add_common(metric, true);
    metric->add_flag("--tridiag", opt.tridiag, "tridiagonal metric Theta_diag + v*P");
    metric->add_option("--v", opt.v, "mixing weight v, rational (default 0)");
    metric->add_option("--tol", opt.tol, "bracket width for the admissible v interval");

    auto* secular = app.add_subcommand("secular", "exact secular polynomial on a path");
    add_common(secular, true);
    secular->add_option("--path", opt.path, "coupling path, e.g. t,-t,t,-9/10");
    secular->add_option("--eval-t", opt.eval_t, "also evaluate exactly at rational t");

    auto* sweep = app.add_subcommand("sweep", "eigenvalue sweep along a path, CSV output");
    add_common(sweep, true);
    sweep->add_option("--path", opt.path, "coupling path");
    sweep->add_option("--grid", opt.grid, "t grid lo:hi:step (default -1.5:1.5:0.01)");
    sweep->add_option("--tol", opt.refine_tol, "complexification refinement width");

    auto* ep = app.add_subcommand("ep", "exact EP localization on a path");
    add_common(ep, true);
    ep->add_option("--path", opt.path, "coupling path");

    auto* verify = app.add_subcommand("verify-fixtures", "check embedded fixture integrity");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : EPS_ERR_CONSTRAINT;
    }

    if (build->parsed()) return cmd_build(opt);
    if (metric->parsed()) return cmd_metric(opt);
    if (secular->parsed()) return cmd_secular(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (ep->parsed()) return cmd_ep(opt);
    if (verify->parsed()) return cmd_verify_fixtures(opt);
    return EPS_ERR_CONSTRAINT;
}
