#ifndef EPSOLVE_SECULAR_HPP
#define EPSOLVE_SECULAR_HPP

#include <string>
#include <vector>

#include "epsolve/model.hpp"
#include "epsolve/poly.hpp"
#include "epsolve/trimatrix.hpp"

namespace epsolve {

// Coupling path: one polynomial-in-t per coupling slot.  The CLI string form
// "t,-t,t,-9/10" admits the symbol t, -t, and rational constants.
struct Path {
    std::vector<UniPoly> slots;
    std::string text;

    bool depends_on_t() const {
        for (const auto& s : slots)
            if (s.degree() >= 1) return true;
        return false;
    }
};

Path parse_path(const std::string& text);

// Substitute the path into the model's coupling slots, entries in Q[t].
TriMatrixP substitute_path(const ModelSpec& spec, const Path& path);

// Exact bivariate secular polynomial det(sI - H(t)), monic in s.
BiPoly secular_on_path(const ModelSpec& spec, const Path& path);

// Monic det(sI - M) of an exact tridiagonal matrix.
UniPoly secular_of(const TriMatrixQ& m);

UniPoly eval_at_t(const BiPoly& p, const Rational& t);

// Res_s(p, dp/ds) normalized to an integer primitive polynomial in t with
// positive leading coefficient; sign records the removed content's sign.
struct Discriminant {
    UniPoly primitive;
    int sign = 1;
    bool identically_zero = false;
};
Discriminant discriminant_in_s(const BiPoly& p);

} // namespace epsolve

#endif
