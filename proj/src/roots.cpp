#include "epsolve/roots.hpp"

#include <algorithm>

namespace epsolve {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    UniPoly a = primitive_parts(squarefree_part(p)).primitive;
    chain.push_back(a);
    if (a.degree() == 0) return chain;
    UniPoly b = primitive_parts(a.derivative()).primitive;
    chain.push_back(b);
    while (!b.is_zero() && b.degree() > 0) {
        UniPoly r = divrem(a, b).second;
        if (r.is_zero()) break;   // square-free input: only at constant tail
        r = primitive_parts(r).primitive;
        a = std::move(b);
        b = UniPoly() - r;
        chain.push_back(b);
    }
    return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.is_zero() ? 0 : sgn(q.eval(x)));
    return count_variations(signs);
}

int sign_variations_at_pos_inf(const std::vector<UniPoly>& chain) {
    std::vector<int> signs;
    for (const auto& q : chain) signs.push_back(q.is_zero() ? 0 : sgn(q.lc()));
    return count_variations(signs);
}

int sign_variations_at_neg_inf(const std::vector<UniPoly>& chain) {
    std::vector<int> signs;
    for (const auto& q : chain) {
        if (q.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(q.lc());
        if (q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int count_distinct_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw constraint_error("root counting needs a nonzero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_sequence(p);
    return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

int count_distinct_real_roots_in(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw constraint_error("root counting needs a nonzero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_sequence(p);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots_with_multiplicity(const UniPoly& p) {
    if (p.is_zero()) throw constraint_error("root counting needs a nonzero polynomial");
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        total += mult * count_distinct_real_roots(factor);
    return total;
}

Rational cauchy_root_bound(const UniPoly& p) {
    assert(!p.is_zero() && p.degree() >= 1);
    Rational m(0);
    const Rational lead = abs(p.lc());
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(static_cast<size_t>(i))) / lead;
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

struct IsolationState {
    const std::vector<UniPoly>& chain;
    const UniPoly& q;   // square-free
    std::vector<RealRoot> roots;
};

// roots in (a, b]; va = variations at a, vb at b
void isolate_rec(IsolationState& st, const Rational& a, const Rational& b, int va, int vb) {
    const int count = va - vb;
    if (count == 0) return;
    if (count == 1) {
        if (sgn(st.q.eval(b)) == 0) {
            st.roots.push_back(RealRoot{true, b, b, b});
            return;
        }
        // single root strictly inside (a, b)
        st.roots.push_back(RealRoot{false, Rational(0), a, b});
        return;
    }
    const Rational mid = (a + b) / 2;
    const int vm = sign_variations_at(st.chain, mid);
    isolate_rec(st, a, mid, va, vm);
    isolate_rec(st, mid, b, vm, vb);
}

void refine_bisect(const std::vector<UniPoly>& chain, const UniPoly& q, RealRoot& r,
                   const Rational& width) {
    if (r.exact) return;
    // The left endpoint may itself be a (different) root of q when a bisection
    // midpoint landed on one; walk inward by Sturm counts until signs work.
    while (sgn(q.eval(r.lo)) == 0) {
        const Rational mid = (r.lo + r.hi) / 2;
        const int sm = sgn(q.eval(mid));
        if (sm == 0) {
            r.exact = true;
            r.value = mid;
            return;
        }
        if (sign_variations_at(chain, mid) - sign_variations_at(chain, r.hi) == 1)
            r.lo = mid;
        else
            r.hi = mid;
    }
    int slo = sgn(q.eval(r.lo));
    while (r.hi - r.lo > width) {
        const Rational mid = (r.lo + r.hi) / 2;
        const int sm = sgn(q.eval(mid));
        if (sm == 0) {
            r.exact = true;
            r.value = mid;
            return;
        }
        if (sm == slo)
            r.lo = mid;
        else
            r.hi = mid;
    }
    // certify small-denominator rational roots exactly
    const Rational cand = simplest_rational_in(r.lo, r.hi);
    if (sgn(q.eval(cand)) == 0) {
        r.exact = true;
        r.value = cand;
    }
}

} // namespace

std::vector<RealRoot> isolate_real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw constraint_error("root isolation needs a nonzero polynomial");
    if (p.degree() == 0) return {};
    auto chain = sturm_sequence(p);
    const UniPoly& q = chain.front();
    if (q.degree() == 0) return {};
    const Rational bound = cauchy_root_bound(q);
    IsolationState st{chain, q, {}};
    isolate_rec(st, -bound, bound, sign_variations_at(chain, -bound),
                sign_variations_at(chain, bound));
    for (auto& r : st.roots) refine_bisect(chain, q, r, width);
    std::sort(st.roots.begin(), st.roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.midpoint() < b.midpoint(); });
    return st.roots;
}

int MultiplicityProfile::multiplicity_of(const Rational& r) const {
    for (const auto& e : entries)
        if (e.kind == ProfileEntry::Kind::rational_root && e.root == r) return e.multiplicity;
    return 0;
}

int MultiplicityProfile::multiplicity_of_quad(const Rational& c) const {
    for (const auto& e : entries)
        if (e.kind == ProfileEntry::Kind::quad_surd && e.quad_c == c) return e.multiplicity;
    return 0;
}

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    root = Rational(n, d);
    return true;
}

void push_rational_root(std::vector<ProfileEntry>& entries, const Rational& root, int mult) {
    ProfileEntry e;
    e.kind = ProfileEntry::Kind::rational_root;
    e.root = root;
    e.multiplicity = mult;
    entries.push_back(std::move(e));
}

// s^2 - c: rational c, roots +-sqrt(c); splits further when c is a square
void push_pure_quad(std::vector<ProfileEntry>& entries, const Rational& c, int mult) {
    Rational r;
    if (rational_sqrt(c, r)) {
        push_rational_root(entries, r, mult);
        push_rational_root(entries, -r, mult);
        return;
    }
    ProfileEntry e;
    e.kind = ProfileEntry::Kind::quad_surd;
    e.quad_c = c;
    e.multiplicity = mult;
    entries.push_back(std::move(e));
}

// monic square-free factor -> exact rational roots, pure quadratics s^2 - c,
// or an unevaluated residual
void split_factor(std::vector<ProfileEntry>& entries, const UniPoly& factor, int mult) {
    const int deg = factor.degree();
    if (deg == 1) {
        push_rational_root(entries, -factor.coeff(0), mult);
        return;
    }
    if (deg == 2) {
        const Rational b = factor.coeff(1), c = factor.coeff(0);
        Rational r;
        if (rational_sqrt(b * b - 4 * c, r)) {
            push_rational_root(entries, (-b + r) / 2, mult);
            push_rational_root(entries, (-b - r) / 2, mult);
            return;
        }
        if (sgn(b) == 0) {
            push_pure_quad(entries, -c, mult);
            return;
        }
    }
    if (deg == 4 && sgn(factor.coeff(1)) == 0 && sgn(factor.coeff(3)) == 0) {
        // even quartic: treat as a quadratic in y = s^2
        const Rational p = factor.coeff(2), q = factor.coeff(0);
        Rational r;
        if (rational_sqrt(p * p - 4 * q, r)) {
            push_pure_quad(entries, (-p + r) / 2, mult);
            push_pure_quad(entries, (-p - r) / 2, mult);
            return;
        }
    }
    ProfileEntry e;
    e.kind = ProfileEntry::Kind::factor;
    e.factor = factor;
    e.multiplicity = mult;
    entries.push_back(std::move(e));
}

} // namespace

MultiplicityProfile multiplicity_profile(const UniPoly& p) {
    if (p.is_zero()) throw constraint_error("multiplicity profile needs a nonzero polynomial");
    MultiplicityProfile out;
    out.degree = p.degree();
    out.squarefree = squarefree_decomposition(p);
    for (const auto& [factor, mult] : out.squarefree) split_factor(out.entries, factor, mult);
    int total = 0;
    for (const auto& [factor, mult] : out.squarefree) total += mult * factor.degree();
    assert(total == out.degree);
    return out;
}

} // namespace epsolve
