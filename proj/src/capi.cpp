#include "epsolve.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "epsolve/eplocate.hpp"
#include "epsolve/fixture.hpp"
#include "epsolve/json_io.hpp"
#include "epsolve/metric.hpp"
#include "epsolve/model.hpp"
#include "epsolve/secular.hpp"
#include "epsolve/spectra.hpp"

using nlohmann::json;

struct eps_model {
    epsolve::ModelSpec spec;
};

struct eps_poly {
    std::optional<epsolve::BiPoly> bi;
    std::optional<epsolve::UniPoly> uni;
};

struct eps_sweep {
    epsolve::ModelSpec spec;
    epsolve::Path path;
    epsolve::SweepResult result;
};

namespace {

thread_local std::string g_last_error;

void set_last_error(const std::string& msg) { g_last_error = msg; }

eps_status map_code(epsolve::errc code) {
    switch (code) {
        case epsolve::errc::ok: return EPS_OK;
        case epsolve::errc::constraint: return EPS_ERR_CONSTRAINT;
        case epsolve::errc::domain: return EPS_ERR_DOMAIN;
        case epsolve::errc::fixture: return EPS_ERR_FIXTURE;
        case epsolve::errc::internal: return EPS_ERR_INTERNAL;
    }
    return EPS_ERR_INTERNAL;
}

template <class F>
eps_status guarded(F&& f) noexcept {
    try {
        f();
        return EPS_OK;
    } catch (const epsolve::error& e) {
        set_last_error(e.what());
        return map_code(e.code());
    } catch (const std::exception& e) {
        set_last_error(e.what());
        return EPS_ERR_INTERNAL;
    } catch (...) {
        set_last_error("unknown error");
        return EPS_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

eps_status require(bool ok, const char* what) {
    if (!ok) {
        set_last_error(what);
        return EPS_ERR_CONSTRAINT;
    }
    return EPS_OK;
}

json metric_report(const epsolve::ModelSpec& spec, bool tridiag, const char* v_text,
                   double interval_tol) {
    using namespace epsolve;
    if (spec.family != Family::BoundaryWell)
        throw constraint_error("metrics are constructed for the boundary_well family");
    auto h = spec.build();
    auto diag = diagonal_metric(spec.couplings, spec.n);
    json j = metric_to_json(diag);
    if (!tridiag) {
        auto residual = crypto_residual(h, dense_diagonal(diag));
        j["residual_nonzero_entries"] = nonzero_entry_count(residual);
        j["residual_exact_zero"] = is_zero_matrix(residual);
        return j;
    }
    TridiagMetric tm{diag, pseudometric(spec.couplings, spec.n),
                     v_text ? parse_rational(v_text) : Rational(0)};
    j = metric_to_json(tm);
    auto residual = crypto_residual(h, tm.dense());
    j["residual_nonzero_entries"] = nonzero_entry_count(residual);
    j["residual_exact_zero"] = is_zero_matrix(residual);
    auto [lo, hi] = admissible_v_interval(tm.base, tm.pseudo, interval_tol);
    j["admissible_v"] = {lo, hi};
    const double vd = to_double(tm.v);
    j["v_inside_admissible"] = (lo < vd && vd < hi);
    return j;
}

} // namespace

extern "C" {

const char* eps_version(void) { return EPSOLVE_VERSION; }

const char* eps_last_error(void) { return g_last_error.c_str(); }

void eps_string_free(char* s) { std::free(s); }

eps_status eps_model_parse_json(const char* json_text, eps_model** out) {
    if (eps_status st = require(json_text && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] { *out = new eps_model{epsolve::ModelSpec::from_json(json_text)}; });
}

void eps_model_free(eps_model* model) { delete model; }

eps_status eps_model_set_shift(eps_model* model, const char* shift) {
    if (eps_status st = require(model && shift, "null argument"); st != EPS_OK) return st;
    return guarded([&] { model->spec.shift = epsolve::parse_rational(shift); });
}

eps_status eps_model_matrix_json(const eps_model* model, char** out) {
    if (eps_status st = require(model && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        json j = epsolve::matrix_to_json(model->spec.build());
        j["model"] = json::parse(model->spec.to_json());
        *out = dup_string(j.dump(2));
    });
}

eps_status eps_model_matrix_csv(const eps_model* model, char** out) {
    if (eps_status st = require(model && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] { *out = dup_string(epsolve::matrix_to_csv(model->spec.build())); });
}

eps_status eps_metric_json(const eps_model* model, int tridiag, const char* v,
                           double interval_tol, char** out) {
    if (eps_status st = require(model && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        *out = dup_string(metric_report(model->spec, tridiag != 0, v, interval_tol).dump(2));
    });
}

eps_status eps_metric_csv(const eps_model* model, int tridiag, const char* v, char** out) {
    if (eps_status st = require(model && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        using namespace epsolve;
        if (model->spec.family != Family::BoundaryWell)
            throw constraint_error("metrics are constructed for the boundary_well family");
        auto diag = diagonal_metric(model->spec.couplings, model->spec.n);
        if (!tridiag) {
            *out = dup_string(metric_to_csv(dense_diagonal(diag)));
            return;
        }
        TridiagMetric tm{diag, pseudometric(model->spec.couplings, model->spec.n),
                         v ? parse_rational(v) : Rational(0)};
        *out = dup_string(metric_to_csv(tm.dense()));
    });
}

eps_status eps_secular(const eps_model* model, const char* path, eps_poly** out) {
    if (eps_status st = require(model && path && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        auto p = epsolve::secular_on_path(model->spec, epsolve::parse_path(path));
        *out = new eps_poly{std::move(p), std::nullopt};
    });
}

void eps_poly_free(eps_poly* poly) { delete poly; }

eps_status eps_poly_json(const eps_poly* poly, char** out) {
    if (eps_status st = require(poly && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        if (poly->bi)
            *out = dup_string(epsolve::bipoly_to_json(*poly->bi).dump(2));
        else
            *out = dup_string(epsolve::unipoly_to_json(*poly->uni, "s").dump(2));
    });
}

eps_status eps_poly_pretty(const eps_poly* poly, char** out) {
    if (eps_status st = require(poly && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        if (poly->bi)
            *out = dup_string(epsolve::bipoly_pretty(*poly->bi));
        else
            *out = dup_string(epsolve::unipoly_pretty(*poly->uni, "s"));
    });
}

eps_status eps_poly_eval_t(const eps_poly* poly, const char* t, eps_poly** out) {
    if (eps_status st = require(poly && t && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        if (!poly->bi)
            throw epsolve::constraint_error("eval_t needs a bivariate polynomial handle");
        auto uni = epsolve::eval_at_t(*poly->bi, epsolve::parse_rational(t));
        *out = new eps_poly{std::nullopt, std::move(uni)};
    });
}

eps_status eps_poly_profile_json(const eps_poly* poly, char** out) {
    if (eps_status st = require(poly && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        if (!poly->uni)
            throw epsolve::constraint_error(
                "profile needs a univariate polynomial handle (use eval_t first)");
        *out = dup_string(
            epsolve::profile_to_json(epsolve::multiplicity_profile(*poly->uni)).dump(2));
    });
}

eps_status eps_sweep_run(const eps_model* model, const char* path, double lo, double hi,
                         double step, eps_sweep** out) {
    if (eps_status st = require(model && path && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        auto parsed = epsolve::parse_path(path);
        auto result = epsolve::sweep(model->spec, parsed, epsolve::GridSpec{lo, hi, step});
        *out = new eps_sweep{model->spec, std::move(parsed), std::move(result)};
    });
}

void eps_sweep_free(eps_sweep* sweep) { delete sweep; }

eps_status eps_sweep_csv(const eps_sweep* sweep, char** out) {
    if (eps_status st = require(sweep && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] { *out = dup_string(epsolve::sweep_to_csv(sweep->result)); });
}

eps_status eps_sweep_events_json(const eps_sweep* sweep, double refine_tol, char** out) {
    if (eps_status st = require(sweep && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        auto events =
            epsolve::detect_complexification(sweep->spec, sweep->path, sweep->result, refine_tol);
        json arr = json::array();
        for (const auto& ev : events) {
            json item;
            item["t_lo"] = ev.t_lo;
            item["t_hi"] = ev.t_hi;
            item["real_before"] = ev.real_before;
            item["real_after"] = ev.real_after;
            item["t_star"] = ev.t_star;
            arr.push_back(item);
        }
        *out = dup_string(arr.dump(2));
    });
}

eps_status eps_ep_report(const eps_model* model, const char* path, char** out) {
    if (eps_status st = require(model && path && out, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        auto parsed = epsolve::parse_path(path);
        auto report = epsolve::ep_on_path(epsolve::secular_on_path(model->spec, parsed));
        *out = dup_string(epsolve::ep_report_to_json(report, parsed.text).dump(2));
    });
}

eps_status eps_fixture_verify(char** report_json) {
    if (eps_status st = require(report_json != nullptr, "null argument"); st != EPS_OK) return st;
    return guarded([&] {
        auto report = epsolve::verify_atm_fixture();
        json j;
        j["checksum_ok"] = report.checksum_ok;
        j["degree"] = report.degree;
        j["value_at_7"] = report.value_at_7.get_str();
        j["value_at_0"] = report.value_at_0.get_str();
        j["root_at_7"] = report.root_at_7;
        j["positive_real_roots"] = report.positive_real_roots;
        *report_json = dup_string(j.dump(2));
    });
}

} // extern "C"
