#ifndef EPSOLVE_SPECTRA_HPP
#define EPSOLVE_SPECTRA_HPP

#include <complex>
#include <string>
#include <vector>

#include "epsolve/model.hpp"
#include "epsolve/secular.hpp"

namespace epsolve {

struct GridSpec {
    double lo = -1.5;
    double hi = 1.5;
    double step = 0.01;
};

TriMatrix<double> to_double_matrix(const TriMatrixQ& m);
TriMatrix<double> matrix_at_t(const ModelSpec& spec, const Path& path, double t);

// An eigenvalue is counted real iff |im| <= 1e-9 * max(1, ||M||_inf).
double reality_tolerance(const TriMatrix<double>& m);

// All N eigenvalues, sorted by (re, im).  Symmetrizable inputs (all
// upper_j * lower_j > 0) go through a symmetric tridiagonal solver and come
// back exactly real; otherwise a dense nonsymmetric solve is used.
std::vector<std::complex<double>> eigs(const TriMatrix<double>& m);

struct SweepSample {
    double t = 0.0;
    std::vector<std::complex<double>> eigenvalues;
    int real_count = 0;
};

struct SweepResult {
    int n = 0;
    std::vector<SweepSample> samples;
};

SweepResult sweep(const ModelSpec& spec, const Path& path, const GridSpec& grid);

// header t,re_1,im_1,...,re_N,im_N,real_count; eigenvalue columns follow the
// previous row by nearest-neighbor matching for plotting continuity.
std::string sweep_to_csv(const SweepResult& res);

struct ComplexificationEvent {
    double t_lo = 0.0;
    double t_hi = 0.0;
    int real_before = 0;
    int real_after = 0;
    double t_star = 0.0;   // bracketed to width <= refine_tol
};

std::vector<ComplexificationEvent> detect_complexification(const ModelSpec& spec, const Path& path,
                                                           const SweepResult& res,
                                                           double refine_tol);

} // namespace epsolve

#endif
