#include "epsolve/poly.hpp"

namespace epsolve {

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero() || a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& bl = b.lc();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Rational c = rem[static_cast<size_t>(i)] / bl;
        if (sgn(c) == 0) continue;
        q[static_cast<size_t>(i - b.degree())] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i - b.degree() + j)] -= c * b.coeff(static_cast<size_t>(j));
    }
    rem.resize(static_cast<size_t>(b.degree()));
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

PrimitiveParts primitive_parts(const UniPoly& p) {
    if (p.is_zero()) return {UniPoly(), Rational(0)};
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : p.coeffs()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    std::vector<Rational> c(p.coeffs());
    for (auto& v : c) v /= content;
    return {UniPoly(std::move(c)), content};
}

UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> c(p.coeffs());
    const Rational l = p.lc();
    for (auto& v : c) v /= l;
    return UniPoly(std::move(c));
}

UniPoly gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    a = primitive_parts(a).primitive;
    b = primitive_parts(b).primitive;
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? UniPoly() : primitive_parts(r).primitive;
    }
    return monic(a);
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm
    UniPoly f = monic(p);
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = divrem(f, a).first;
    UniPoly c = divrem(fp, a).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly ai = gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = divrem(b, ai).first;
        c = divrem(d, ai).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return monic(p);
    UniPoly g = gcd(p, p.derivative());
    return monic(divrem(p, g).first);
}

} // namespace epsolve
