#ifndef EPSOLVE_MODEL_HPP
#define EPSOLVE_MODEL_HPP

#include <string>
#include <vector>

#include "epsolve/rational.hpp"
#include "epsolve/trimatrix.hpp"

namespace epsolve {

// Signed couplings (lambda_1, ..., lambda_k) of the boundary-well family,
// convention lambda_1 = +lambda, lambda_2 = -mu, lambda_3 = +nu, ...
struct CouplingVector {
    std::vector<Rational> lambdas;

    int k() const { return static_cast<int>(lambdas.size()); }

    // 2k <= N-1: the two coupling blocks must not overlap.
    void check_fits(int n) const;
    // each |lambda_j| < 1; required for metric construction only.
    void check_inside_domain() const;
};

enum class Family { BoundaryWell, ATM, Gegenbauer };

struct ModelSpec {
    Family family = Family::BoundaryWell;
    int n = 2;
    // BoundaryWell
    CouplingVector couplings;
    Rational shift = Rational(0);
    // ATM: g_1..g_{floor(N/2)}, palindromic extension implied
    std::vector<Rational> atm_g;
    // Gegenbauer
    Rational gegenbauer_a = Rational(1);

    static ModelSpec from_json(const std::string& json_text);
    std::string to_json() const;

    TriMatrixQ build() const;
};

// diag_j = shift; upper_j = -1-lambda_j, lower_j = -1+lambda_j for j <= k,
// mirrored with flipped signs at N-j; all remaining off-diagonals -1.
TriMatrixQ build_boundary_well(int n, const CouplingVector& couplings, const Rational& shift);

// diag = (1-N, 3-N, ..., N-1); upper_j = +g~_j, lower_j = -g~_j with g~ the
// palindromic extension of g (g~_{N-j} = g~_j).
TriMatrixQ build_atm(int n, const std::vector<Rational>& g);

// diag = 0; upper_j = 1/(2a+2j-2); lower_j = (2a+j-1)/(2a+2j).
TriMatrixQ build_gegenbauer(int n, const Rational& a);

} // namespace epsolve

#endif
