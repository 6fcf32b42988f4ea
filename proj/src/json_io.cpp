#include "epsolve/json_io.hpp"

#include <sstream>

namespace epsolve {

using nlohmann::json;

json unipoly_to_json(const UniPoly& p, const std::string& var) {
    json j;
    j["var"] = var;
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p.coeff(static_cast<size_t>(i))));
    j["coeffs"] = arr;
    return j;
}

UniPoly unipoly_from_json(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw constraint_error("polynomial JSON: missing \"coeffs\" array");
    std::vector<Rational> c;
    for (const auto& v : j["coeffs"]) {
        if (!v.is_string()) throw constraint_error("polynomial JSON: coefficients are strings");
        c.push_back(parse_rational(v.get<std::string>()));
    }
    return UniPoly(std::move(c));
}

json bipoly_to_json(const BiPoly& p) {
    json j;
    j["var"] = "s";
    j["coeff_var"] = "t";
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        const UniPoly& c = p.coeff(static_cast<size_t>(i));
        json inner = json::array();
        for (int k = 0; k <= c.degree(); ++k)
            inner.push_back(to_string(c.coeff(static_cast<size_t>(k))));
        arr.push_back(inner);
    }
    j["coeffs"] = arr;
    return j;
}

BiPoly bipoly_from_json(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw constraint_error("polynomial JSON: missing \"coeffs\" array");
    std::vector<UniPoly> c;
    for (const auto& inner : j["coeffs"]) {
        if (!inner.is_array()) throw constraint_error("bivariate JSON: coefficients are arrays");
        std::vector<Rational> t;
        for (const auto& v : inner) t.push_back(parse_rational(v.get<std::string>()));
        c.emplace_back(std::move(t));
    }
    return BiPoly(std::move(c));
}

namespace {

void append_term(std::ostringstream& os, bool& first, const std::string& coeff_text, bool negative,
                 const std::string& var, int power) {
    if (first) {
        os << (negative ? "-" : "");
        first = false;
    } else {
        os << (negative ? " - " : " + ");
    }
    const bool unit = coeff_text == "1";
    if (power == 0) {
        os << coeff_text;
        return;
    }
    if (!unit) os << coeff_text << "*";
    os << var;
    if (power > 1) os << "^" << power;
}

} // namespace

namespace {

std::string pretty_terms(const UniPoly& p, const std::string& var, bool ascending) {
    std::ostringstream os;
    bool first = true;
    for (int step = 0; step <= p.degree(); ++step) {
        const int i = ascending ? step : p.degree() - step;
        const Rational c = p.coeff(static_cast<size_t>(i));
        if (sgn(c) == 0) continue;
        append_term(os, first, to_string(abs(c)), sgn(c) < 0, var, i);
    }
    return os.str();
}

} // namespace

std::string unipoly_pretty(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    return pretty_terms(p, var, false);
}

std::string bipoly_pretty(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const UniPoly c = p.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        if (c.degree() == 0) {
            const Rational v = c.coeff(0);
            append_term(os, first, to_string(abs(v)), sgn(v) < 0, "s", i);
        } else {
            // t-polynomials read lowest power first; the sign of the lowest
            // term is factored out front
            int low = 0;
            while (sgn(c.coeff(static_cast<size_t>(low))) == 0) ++low;
            const bool neg = sgn(c.coeff(static_cast<size_t>(low))) < 0;
            const UniPoly shown = neg ? UniPoly() - c : c;
            std::string text = "(" + pretty_terms(shown, "t", true) + ")";
            append_term(os, first, text, neg, "s", i);
        }
    }
    return os.str();
}

json matrix_to_json(const TriMatrixQ& m) {
    json j;
    j["N"] = m.size();
    auto dump = [](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const auto& x : v) arr.push_back(to_string(x));
        return arr;
    };
    j["diag"] = dump(m.diag);
    j["upper"] = dump(m.upper);
    j["lower"] = dump(m.lower);
    return j;
}

std::string matrix_to_csv(const TriMatrixQ& m) {
    std::ostringstream os;
    const auto dense = m.dense();
    for (const auto& row : dense) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ",";
            os << format_double(to_double(row[j]));
        }
        os << "\n";
    }
    return os.str();
}

json profile_to_json(const MultiplicityProfile& profile) {
    json arr = json::array();
    for (const auto& e : profile.entries) {
        json item;
        item["multiplicity"] = e.multiplicity;
        switch (e.kind) {
            case ProfileEntry::Kind::rational_root:
                item["kind"] = "rational_root";
                item["root"] = to_string(e.root);
                break;
            case ProfileEntry::Kind::quad_surd:
                item["kind"] = "quad_surd";
                item["c"] = to_string(e.quad_c);   // roots +-sqrt(c)
                break;
            case ProfileEntry::Kind::factor:
                item["kind"] = "factor";
                item["factor"] = unipoly_to_json(e.factor, "s");
                break;
        }
        arr.push_back(item);
    }
    json j;
    j["degree"] = profile.degree;
    j["entries"] = arr;
    return j;
}

json ep_report_to_json(const EPReport& report, const std::string& path_text) {
    json j;
    j["path"] = path_text;
    j["status"] = report.discriminant_identically_zero ? "identically_zero_discriminant" : "ok";
    if (!report.discriminant_identically_zero)
        j["discriminant"] = unipoly_to_json(report.discriminant.primitive, "t");
    json pts = json::array();
    for (const auto& p : report.points) {
        json item;
        if (p.location.exact) {
            item["t"] = to_string(p.location.value);
        } else {
            item["interval"] = {to_string(p.location.lo), to_string(p.location.hi)};
        }
        if (p.profile) item["profile"] = profile_to_json(*p.profile);
        pts.push_back(item);
    }
    j["points"] = pts;
    return j;
}

json metric_to_json(const DiagonalMetric& diag) {
    json j;
    json z = json::array();
    for (const auto& v : diag.z) z.push_back(to_string(v));
    j["diag"] = z;
    return j;
}

json metric_to_json(const TridiagMetric& metric) {
    json j = metric_to_json(metric.base);
    json off = json::array();
    for (const auto& v : metric.pseudo.off) off.push_back(to_string(v));
    j["pseudo_off"] = off;
    j["v"] = to_string(metric.v);
    return j;
}

std::string metric_to_csv(const std::vector<std::vector<Rational>>& dense) {
    std::ostringstream os;
    for (const auto& row : dense) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ",";
            os << format_double(to_double(row[j]));
        }
        os << "\n";
    }
    return os.str();
}

} // namespace epsolve
