#ifndef EPSOLVE_JSON_IO_HPP
#define EPSOLVE_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <string>

#include "epsolve/eplocate.hpp"
#include "epsolve/metric.hpp"
#include "epsolve/model.hpp"
#include "epsolve/roots.hpp"
#include "epsolve/secular.hpp"
#include "epsolve/spectra.hpp"

namespace epsolve {

// {"var":"t","coeffs":["c0","c1",...]}, big-rational strings, lowest first
nlohmann::json unipoly_to_json(const UniPoly& p, const std::string& var);
UniPoly unipoly_from_json(const nlohmann::json& j);

// {"var":"s","coeffs":[["..",".."],...]}: per power of s, a t-polynomial
nlohmann::json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

std::string unipoly_pretty(const UniPoly& p, const std::string& var);
std::string bipoly_pretty(const BiPoly& p);

nlohmann::json matrix_to_json(const TriMatrixQ& m);
std::string matrix_to_csv(const TriMatrixQ& m);   // dense, floating point

nlohmann::json profile_to_json(const MultiplicityProfile& profile);
nlohmann::json ep_report_to_json(const EPReport& report, const std::string& path_text);

nlohmann::json metric_to_json(const DiagonalMetric& diag);
nlohmann::json metric_to_json(const TridiagMetric& metric);
std::string metric_to_csv(const std::vector<std::vector<Rational>>& dense);

} // namespace epsolve

#endif
