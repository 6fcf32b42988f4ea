#include "epsolve/secular.hpp"

#include <sstream>

namespace epsolve {

Path parse_path(const std::string& text) {
    Path path;
    path.text = text;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw constraint_error("empty path slot in '" + text + "'");
        std::string tok = item.substr(b, e - b + 1);
        if (tok == "t")
            path.slots.push_back(UniPoly::variable());
        else if (tok == "-t")
            path.slots.push_back(UniPoly() - UniPoly::variable());
        else if (tok == "+t")
            path.slots.push_back(UniPoly::variable());
        else
            path.slots.push_back(UniPoly::constant(parse_rational(tok)));
    }
    if (path.slots.empty()) throw constraint_error("empty path '" + text + "'");
    return path;
}

TriMatrixP substitute_path(const ModelSpec& spec, const Path& path) {
    const int n = spec.n;
    const UniPoly one = UniPoly::one();
    const UniPoly minus_one = UniPoly(-1);
    switch (spec.family) {
        case Family::BoundaryWell: {
            const int k = static_cast<int>(path.slots.size());
            if (2 * k > n - 1)
                throw constraint_error("path has too many slots: need 2k <= N-1");
            std::vector<UniPoly> d(static_cast<size_t>(n), UniPoly::constant(spec.shift));
            std::vector<UniPoly> u(static_cast<size_t>(n - 1), minus_one);
            std::vector<UniPoly> l(static_cast<size_t>(n - 1), minus_one);
            for (int j = 1; j <= k; ++j) {
                const UniPoly& lam = path.slots[static_cast<size_t>(j - 1)];
                u[static_cast<size_t>(j - 1)] = minus_one - lam;
                l[static_cast<size_t>(j - 1)] = minus_one + lam;
                u[static_cast<size_t>(n - j - 1)] = minus_one + lam;
                l[static_cast<size_t>(n - j - 1)] = minus_one - lam;
            }
            return TriMatrixP(std::move(d), std::move(u), std::move(l));
        }
        case Family::ATM: {
            if (path.slots.size() != static_cast<size_t>(n / 2))
                throw constraint_error("ATM path needs " + std::to_string(n / 2) + " slots");
            std::vector<UniPoly> d(static_cast<size_t>(n));
            for (int j = 1; j <= n; ++j)
                d[static_cast<size_t>(j - 1)] = UniPoly::constant(Rational(2 * j - 1 - n));
            std::vector<UniPoly> u(static_cast<size_t>(n - 1));
            std::vector<UniPoly> l(static_cast<size_t>(n - 1));
            for (int j = 1; j <= n - 1; ++j) {
                const UniPoly& gj = path.slots[static_cast<size_t>(std::min(j, n - j) - 1)];
                u[static_cast<size_t>(j - 1)] = gj;
                l[static_cast<size_t>(j - 1)] = UniPoly() - gj;
            }
            return TriMatrixP(std::move(d), std::move(u), std::move(l));
        }
        case Family::Gegenbauer:
            throw constraint_error("the Gegenbauer family has no coupling slots for a path");
    }
    throw constraint_error("unknown model family");
}

namespace {

template <class T>
Poly<T> monic_secular(Poly<T> charpoly, int n) {
    // det(sI - M) = (-1)^N det(M - sI)
    if (n % 2 == 1) charpoly = Poly<T>() - charpoly;
    return charpoly;
}

} // namespace

BiPoly secular_on_path(const ModelSpec& spec, const Path& path) {
    TriMatrixP m = substitute_path(spec, path);
    return monic_secular(charpoly_tridiag(m), spec.n);
}

UniPoly secular_of(const TriMatrixQ& m) {
    return monic_secular(charpoly_tridiag(m), m.size());
}

UniPoly eval_at_t(const BiPoly& p, const Rational& t) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(static_cast<size_t>(i)).eval(t));
    return UniPoly(std::move(c));
}

UniPoly charpoly_bareiss(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    if (n == 0) throw constraint_error("charpoly of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw constraint_error("charpoly needs a square matrix");
    std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            a[i][j] = UniPoly::constant(m[i][j]);
            if (i == j) a[i][j] = a[i][j] - UniPoly::variable();
        }
    return bareiss_det(std::move(a));
}

Discriminant discriminant_in_s(const BiPoly& p) {
    if (p.is_zero()) throw constraint_error("discriminant of the zero polynomial");
    if (p.degree() < 2) throw constraint_error("discriminant needs degree >= 2 in s");
    UniPoly res = resultant(p, p.derivative());
    Discriminant out;
    if (res.is_zero()) {
        out.identically_zero = true;
        return out;
    }
    auto parts = primitive_parts(res);
    out.primitive = parts.primitive;
    out.sign = sgn(parts.content);
    if (sgn(out.primitive.lc()) < 0) {
        out.primitive = UniPoly() - out.primitive;
        out.sign = -out.sign;
    }
    return out;
}

} // namespace epsolve
