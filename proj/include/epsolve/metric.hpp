#ifndef EPSOLVE_METRIC_HPP
#define EPSOLVE_METRIC_HPP

#include <Eigen/Dense>

#include <vector>

#include "epsolve/model.hpp"

namespace epsolve {

// f(x) = (1-x)/(1+x); pole at x = -1 marks the EP boundary.
Rational metric_f(const Rational& x);

struct DiagonalMetric {
    std::vector<Rational> z;   // N entries, palindromic, all > 0 inside the domain
};

struct Pseudometric {
    std::vector<Rational> off;   // N-1 entries, shared upper/lower diagonal, zero main diagonal
};

struct TridiagMetric {
    DiagonalMetric base;
    Pseudometric pseudo;
    Rational v;

    std::vector<std::vector<Rational>> dense() const;
};

// z_j = prod_{i=j..k} f(lambda_i) for j <= k, 1 in the middle, mirrored.
DiagonalMetric diagonal_metric(const CouplingVector& couplings, int n);

// off_j = (1+lambda_j) * z_j for j <= k, 1 in the middle, mirrored.
Pseudometric pseudometric(const CouplingVector& couplings, int n);

// H^T Theta - Theta H, exact.  The zero matrix certifies hidden Hermiticity.
std::vector<std::vector<Rational>> crypto_residual(const TriMatrixQ& h,
                                                   const std::vector<std::vector<Rational>>& theta);

bool is_zero_matrix(const std::vector<std::vector<Rational>>& m);
int nonzero_entry_count(const std::vector<std::vector<Rational>>& m);

std::vector<std::vector<Rational>> dense_diagonal(const DiagonalMetric& d);
std::vector<std::vector<Rational>> dense_pseudometric(const Pseudometric& p);

// Maximal open interval around v = 0 on which Theta_diag + v*P stays positive
// definite; endpoints bracketed to width <= tol by bisection on the smallest
// eigenvalue (floating point).
std::pair<double, double> admissible_v_interval(const DiagonalMetric& base,
                                                const Pseudometric& pseudo, double tol);

struct SpectralMetric {
    std::vector<double> kappas;
    Eigen::MatrixXd xi;      // rows are unit-norm left eigenvectors, ordered by eigenvalue
    Eigen::MatrixXd theta;   // assembled metric
};

// Theta = sum_n kappa_n |Xi_n><Xi_n| from unit-norm left eigenvectors of H,
// paired with eigenvalues in ascending order.  Requires a real simple
// spectrum and kappa_n > 0.
SpectralMetric spectral_metric(const Eigen::MatrixXd& h, const std::vector<double>& kappas);

} // namespace epsolve

#endif
