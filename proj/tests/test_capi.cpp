#include <doctest.h>

#include <nlohmann/json.hpp>

#include <string>

#include "epsolve.h"

using nlohmann::json;

namespace {

const char* kFig1Spec = R"({"family":"boundary_well","N":11,"shift":"0",
                            "couplings":["9/10","-9/10","9/10","-9/10"]})";

std::string take(char* owned) {
    std::string s(owned ? owned : "");
    eps_string_free(owned);
    return s;
}

} // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::string(eps_version()).size() > 0);
    eps_model* model = nullptr;
    CHECK(eps_model_parse_json("not json", &model) == EPS_ERR_CONSTRAINT);
    CHECK(std::string(eps_last_error()).size() > 0);
    CHECK(eps_model_parse_json(nullptr, &model) == EPS_ERR_CONSTRAINT);
}

TEST_CASE("model round trip through the C surface") {
    eps_model* model = nullptr;
    REQUIRE(eps_model_parse_json(kFig1Spec, &model) == EPS_OK);
    char* out = nullptr;
    REQUIRE(eps_model_matrix_json(model, &out) == EPS_OK);
    json j = json::parse(take(out));
    CHECK(j["N"] == 11);
    CHECK(j["upper"][0] == "-19/10");
    CHECK(j["upper"][4] == "-1");
    REQUIRE(eps_model_matrix_csv(model, &out) == EPS_OK);
    CHECK(take(out).find("-1.9") != std::string::npos);
    eps_model_free(model);
}

TEST_CASE("shift override") {
    eps_model* model = nullptr;
    REQUIRE(eps_model_parse_json(kFig1Spec, &model) == EPS_OK);
    REQUIRE(eps_model_set_shift(model, "2") == EPS_OK);
    char* out = nullptr;
    REQUIRE(eps_model_matrix_json(model, &out) == EPS_OK);
    CHECK(json::parse(take(out))["diag"][0] == "2");
    CHECK(eps_model_set_shift(model, "1/0") == EPS_ERR_CONSTRAINT);
    eps_model_free(model);
}

TEST_CASE("metric through the C surface") {
    eps_model* model = nullptr;
    REQUIRE(eps_model_parse_json(kFig1Spec, &model) == EPS_OK);
    char* out = nullptr;
    REQUIRE(eps_metric_json(model, 0, nullptr, 1e-8, &out) == EPS_OK);
    json j = json::parse(take(out));
    CHECK(j["residual_exact_zero"] == true);
    CHECK(j["diag"][4] == "1");

    REQUIRE(eps_metric_json(model, 1, "1/100", 1e-8, &out) == EPS_OK);
    json jt = json::parse(take(out));
    CHECK(jt["residual_exact_zero"] == true);
    CHECK(jt["v"] == "1/100");
    CHECK(jt["admissible_v"][0].get<double>() < 0.0);
    CHECK(jt["admissible_v"][1].get<double>() > 0.0);
    CHECK(jt.contains("v_inside_admissible"));

    REQUIRE(eps_metric_csv(model, 1, "1/100", &out) == EPS_OK);
    CHECK(!take(out).empty());
    eps_model_free(model);
}

TEST_CASE("metric rejects out-of-domain couplings with EPS_ERR_DOMAIN") {
    eps_model* model = nullptr;
    const char* bad = R"({"family":"boundary_well","N":5,"shift":"0","couplings":["1"]})";
    REQUIRE(eps_model_parse_json(bad, &model) == EPS_OK);
    char* out = nullptr;
    CHECK(eps_metric_json(model, 0, nullptr, 1e-8, &out) == EPS_ERR_DOMAIN);
    eps_model_free(model);
}

TEST_CASE("secular polynomial and profiles through the C surface") {
    eps_model* model = nullptr;
    REQUIRE(eps_model_parse_json(kFig1Spec, &model) == EPS_OK);
    eps_poly* poly = nullptr;
    REQUIRE(eps_secular(model, "t,-t,t,-t", &poly) == EPS_OK);

    char* out = nullptr;
    REQUIRE(eps_poly_json(poly, &out) == EPS_OK);
    json j = json::parse(take(out));
    CHECK(j["coeffs"][9][0] == "-10");
    CHECK(j["coeffs"][9][2] == "8");

    REQUIRE(eps_poly_pretty(poly, &out) == EPS_OK);
    CHECK(take(out).substr(0, 4) == "s^11");

    eps_poly* slice = nullptr;
    REQUIRE(eps_poly_eval_t(poly, "1", &slice) == EPS_OK);
    REQUIRE(eps_poly_json(slice, &out) == EPS_OK);
    json js = json::parse(take(out));
    REQUIRE(js["coeffs"].size() == 12);
    CHECK(js["coeffs"][9] == "-2");
    CHECK(js["coeffs"][11] == "1");

    REQUIRE(eps_poly_profile_json(slice, &out) == EPS_OK);
    json prof = json::parse(take(out));
    bool found_nine = false;
    for (const auto& e : prof["entries"])
        if (e["kind"] == "rational_root" && e["root"] == "0" && e["multiplicity"] == 9)
            found_nine = true;
    CHECK(found_nine);

    // profile of a bivariate handle is a constraint error
    CHECK(eps_poly_profile_json(poly, &out) == EPS_ERR_CONSTRAINT);
    CHECK(eps_poly_eval_t(slice, "1", &slice) == EPS_ERR_CONSTRAINT);

    eps_poly_free(slice);
    eps_poly_free(poly);
    eps_model_free(model);
}

TEST_CASE("sweep and events through the C surface") {
    eps_model* model = nullptr;
    REQUIRE(eps_model_parse_json(kFig1Spec, &model) == EPS_OK);
    eps_sweep* sweep = nullptr;
    REQUIRE(eps_sweep_run(model, "t,-t,t,-t", 0.9, 1.1, 0.01, &sweep) == EPS_OK);
    char* out = nullptr;
    REQUIRE(eps_sweep_csv(sweep, &out) == EPS_OK);
    CHECK(take(out).substr(0, 2) == "t,");
    REQUIRE(eps_sweep_events_json(sweep, 1e-6, &out) == EPS_OK);
    json events = json::parse(take(out));
    REQUIRE(events.size() == 1);
    CHECK(events[0]["t_lo"].get<double>() <= 1.0);
    CHECK(events[0]["t_hi"].get<double>() >= 1.0);
    eps_sweep_free(sweep);

    CHECK(eps_sweep_run(model, "t,-t,t,-t", 0.0, 1.0, -0.1, &sweep) == EPS_ERR_CONSTRAINT);
    eps_model_free(model);
}

TEST_CASE("EP report through the C surface") {
    eps_model* model = nullptr;
    REQUIRE(eps_model_parse_json(kFig1Spec, &model) == EPS_OK);
    char* out = nullptr;
    REQUIRE(eps_ep_report(model, "t,-t,t,-t", &out) == EPS_OK);
    json j = json::parse(take(out));
    CHECK(j["status"] == "ok");
    REQUIRE(j["points"].size() == 2);
    CHECK(j["points"][0]["t"] == "-1");
    CHECK(j["points"][1]["t"] == "1");
    eps_model_free(model);
}

TEST_CASE("fixture verification through the C surface") {
    char* out = nullptr;
    REQUIRE(eps_fixture_verify(&out) == EPS_OK);
    json j = json::parse(take(out));
    CHECK(j["checksum_ok"] == true);
    CHECK(j["degree"] == 17);
    CHECK(j["value_at_0"] == "153712881941946532798614648361265167");
    CHECK(j["positive_real_roots"] == 4);
}
