#ifndef EPSOLVE_ROOTS_HPP
#define EPSOLVE_ROOTS_HPP

#include <vector>

#include "epsolve/poly.hpp"

namespace epsolve {

// Sturm chain of the square-free part; remainders normalized by positive
// content only, so sign variations are preserved.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x);
int sign_variations_at_pos_inf(const std::vector<UniPoly>& chain);
int sign_variations_at_neg_inf(const std::vector<UniPoly>& chain);

// Distinct real roots (of the square-free part).
int count_distinct_real_roots(const UniPoly& p);
// Distinct real roots in the half-open interval (a, b].
int count_distinct_real_roots_in(const UniPoly& p, const Rational& a, const Rational& b);
// Real roots counted with multiplicity, via the square-free decomposition.
int count_real_roots_with_multiplicity(const UniPoly& p);

Rational cauchy_root_bound(const UniPoly& p);

struct RealRoot {
    bool exact = false;
    Rational value;        // certified rational root when exact
    Rational lo, hi;       // isolating interval otherwise (lo < root < hi)

    Rational midpoint() const { return exact ? value : (lo + hi) / 2; }
};

// Isolate every real root of p; intervals refined to width <= width.  Roots
// that are rational with modest denominator are certified exactly (simplest
// rational in the refined interval, verified by exact evaluation).
std::vector<RealRoot> isolate_real_roots(const UniPoly& p, const Rational& width);

struct ProfileEntry {
    enum class Kind { rational_root, quad_surd, factor };
    Kind kind = Kind::factor;
    Rational root;      // rational_root
    Rational quad_c;    // quad_surd: monic factor s^2 - c, roots +-sqrt(c)
    UniPoly factor;     // unevaluated square-free factor otherwise
    int multiplicity = 0;

    int factor_degree() const {
        switch (kind) {
            case Kind::rational_root: return 1;
            case Kind::quad_surd: return 2;
            case Kind::factor: return factor.degree();
        }
        return 0;
    }
};

struct MultiplicityProfile {
    std::vector<ProfileEntry> entries;
    std::vector<std::pair<UniPoly, int>> squarefree;
    int degree = 0;

    // multiplicity of the root s = r, 0 if absent
    int multiplicity_of(const Rational& r) const;
    // multiplicity of the surd pair +-sqrt(c), 0 if absent
    int multiplicity_of_quad(const Rational& c) const;
};

// Square-free decomposition with exact reporting of rational roots (degree-1
// factors) and quadratic surd factors s^2 - c; other factors unevaluated.
MultiplicityProfile multiplicity_profile(const UniPoly& p);

} // namespace epsolve

#endif
