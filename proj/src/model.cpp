#include "epsolve/model.hpp"

#include <nlohmann/json.hpp>

namespace epsolve {

using nlohmann::json;

void CouplingVector::check_fits(int n) const {
    if (n < 2) throw constraint_error("matrix dimension must be at least 2");
    if (2 * k() > n - 1)
        throw constraint_error("coupling blocks overlap: need 2k <= N-1, got k=" +
                               std::to_string(k()) + ", N=" + std::to_string(n));
}

void CouplingVector::check_inside_domain() const {
    for (const auto& l : lambdas)
        if (abs(l) >= 1)
            throw domain_error("coupling |" + to_string(l) +
                               "| >= 1 lies outside the unitarity domain");
}

TriMatrixQ build_boundary_well(int n, const CouplingVector& couplings, const Rational& shift) {
    couplings.check_fits(n);
    std::vector<Rational> d(static_cast<size_t>(n), shift);
    std::vector<Rational> u(static_cast<size_t>(n - 1), Rational(-1));
    std::vector<Rational> l(static_cast<size_t>(n - 1), Rational(-1));
    for (int j = 1; j <= couplings.k(); ++j) {
        const Rational& lam = couplings.lambdas[static_cast<size_t>(j - 1)];
        u[static_cast<size_t>(j - 1)] = Rational(-1) - lam;
        l[static_cast<size_t>(j - 1)] = Rational(-1) + lam;
        u[static_cast<size_t>(n - j - 1)] = Rational(-1) + lam;
        l[static_cast<size_t>(n - j - 1)] = Rational(-1) - lam;
    }
    return TriMatrixQ(std::move(d), std::move(u), std::move(l));
}

TriMatrixQ build_atm(int n, const std::vector<Rational>& g) {
    if (n < 2) throw constraint_error("matrix dimension must be at least 2");
    const size_t expected = static_cast<size_t>(n / 2);
    if (g.size() != expected)
        throw constraint_error("ATM expects " + std::to_string(expected) + " couplings for N=" +
                               std::to_string(n) + ", got " + std::to_string(g.size()));
    std::vector<Rational> d(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) d[static_cast<size_t>(j - 1)] = Rational(2 * j - 1 - n);
    std::vector<Rational> u(static_cast<size_t>(n - 1));
    std::vector<Rational> l(static_cast<size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        const Rational& gj = g[static_cast<size_t>(std::min(j, n - j) - 1)];
        u[static_cast<size_t>(j - 1)] = gj;
        l[static_cast<size_t>(j - 1)] = -gj;
    }
    return TriMatrixQ(std::move(d), std::move(u), std::move(l));
}

TriMatrixQ build_gegenbauer(int n, const Rational& a) {
    if (n < 2) throw constraint_error("matrix dimension must be at least 2");
    if (sgn(a) <= 0) throw constraint_error("Gegenbauer parameter a must be positive");
    std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
    std::vector<Rational> u(static_cast<size_t>(n - 1));
    std::vector<Rational> l(static_cast<size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        Rational du = 2 * a + 2 * j - 2;
        Rational dl = 2 * a + 2 * j;
        if (sgn(du) == 0 || sgn(dl) == 0)
            throw domain_error("singular Gegenbauer parameter: zero denominator at j=" +
                               std::to_string(j));
        u[static_cast<size_t>(j - 1)] = 1 / du;
        l[static_cast<size_t>(j - 1)] = (2 * a + j - 1) / dl;
    }
    return TriMatrixQ(std::move(d), std::move(u), std::move(l));
}

TriMatrixQ ModelSpec::build() const {
    switch (family) {
        case Family::BoundaryWell: return build_boundary_well(n, couplings, shift);
        case Family::ATM: return build_atm(n, atm_g);
        case Family::Gegenbauer: return build_gegenbauer(n, gegenbauer_a);
    }
    throw constraint_error("unknown model family");
}

ModelSpec ModelSpec::from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw constraint_error(std::string("model spec is not valid JSON: ") + e.what());
    }
    ModelSpec spec;
    if (!j.contains("family") || !j["family"].is_string())
        throw constraint_error("model spec: missing \"family\"");
    const std::string fam = j["family"].get<std::string>();
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw constraint_error("model spec: missing integer \"N\"");
    spec.n = j["N"].get<int>();
    if (spec.n < 2) throw constraint_error("model spec: N must be at least 2");

    auto rat = [&](const json& v, const char* what) {
        if (!v.is_string()) throw constraint_error(std::string("model spec: ") + what +
                                                   " must be a rational string");
        return parse_rational(v.get<std::string>());
    };

    if (fam == "boundary_well") {
        spec.family = Family::BoundaryWell;
        if (j.contains("shift")) spec.shift = rat(j["shift"], "shift");
        if (j.contains("couplings")) {
            if (!j["couplings"].is_array())
                throw constraint_error("model spec: \"couplings\" must be an array");
            for (const auto& v : j["couplings"])
                spec.couplings.lambdas.push_back(rat(v, "coupling"));
        }
        spec.couplings.check_fits(spec.n);
    } else if (fam == "atm") {
        spec.family = Family::ATM;
        if (!j.contains("couplings") || !j["couplings"].is_array())
            throw constraint_error("model spec: ATM requires a \"couplings\" array");
        for (const auto& v : j["couplings"]) spec.atm_g.push_back(rat(v, "coupling"));
        if (spec.atm_g.size() != static_cast<size_t>(spec.n / 2))
            throw constraint_error("model spec: ATM with N=" + std::to_string(spec.n) +
                                   " requires " + std::to_string(spec.n / 2) + " couplings");
    } else if (fam == "gegenbauer") {
        spec.family = Family::Gegenbauer;
        if (!j.contains("a")) throw constraint_error("model spec: gegenbauer requires \"a\"");
        spec.gegenbauer_a = rat(j["a"], "a");
        if (sgn(spec.gegenbauer_a) <= 0)
            throw constraint_error("model spec: gegenbauer requires a > 0");
    } else {
        throw constraint_error("model spec: unknown family '" + fam + "'");
    }
    return spec;
}

std::string ModelSpec::to_json() const {
    json j;
    j["N"] = n;
    switch (family) {
        case Family::BoundaryWell: {
            j["family"] = "boundary_well";
            j["shift"] = to_string(shift);
            json arr = json::array();
            for (const auto& l : couplings.lambdas) arr.push_back(to_string(l));
            j["couplings"] = arr;
            break;
        }
        case Family::ATM: {
            j["family"] = "atm";
            json arr = json::array();
            for (const auto& g : atm_g) arr.push_back(to_string(g));
            j["couplings"] = arr;
            break;
        }
        case Family::Gegenbauer:
            j["family"] = "gegenbauer";
            j["a"] = to_string(gegenbauer_a);
            break;
    }
    return j.dump(2);
}

} // namespace epsolve
