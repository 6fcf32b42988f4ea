#include "epsolve/metric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace epsolve {

Rational metric_f(const Rational& x) {
    if (x == Rational(-1))
        throw domain_error("f(x) = (1-x)/(1+x) has a pole at x = -1 (EP boundary)");
    return (1 - x) / (1 + x);
}

DiagonalMetric diagonal_metric(const CouplingVector& couplings, int n) {
    couplings.check_fits(n);
    couplings.check_inside_domain();
    const int k = couplings.k();
    std::vector<Rational> z(static_cast<size_t>(n), Rational(1));
    // suffix products prod_{i=j..k} f(lambda_i)
    Rational acc(1);
    for (int j = k; j >= 1; --j) {
        acc *= metric_f(couplings.lambdas[static_cast<size_t>(j - 1)]);
        z[static_cast<size_t>(j - 1)] = acc;
        z[static_cast<size_t>(n - j)] = acc;
    }
    return DiagonalMetric{std::move(z)};
}

Pseudometric pseudometric(const CouplingVector& couplings, int n) {
    couplings.check_fits(n);
    couplings.check_inside_domain();
    const int k = couplings.k();
    std::vector<Rational> off(static_cast<size_t>(n - 1), Rational(1));
    Rational acc(1);
    for (int j = k; j >= 1; --j) {
        const Rational& lam = couplings.lambdas[static_cast<size_t>(j - 1)];
        acc *= metric_f(lam);
        off[static_cast<size_t>(j - 1)] = (1 + lam) * acc;
        off[static_cast<size_t>(n - 1 - j)] = (1 + lam) * acc;
    }
    return Pseudometric{std::move(off)};
}

std::vector<std::vector<Rational>> dense_diagonal(const DiagonalMetric& d) {
    const size_t n = d.z.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = d.z[i];
    return m;
}

std::vector<std::vector<Rational>> dense_pseudometric(const Pseudometric& p) {
    const size_t n = p.off.size() + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = p.off[i];
        m[i + 1][i] = p.off[i];
    }
    return m;
}

std::vector<std::vector<Rational>> TridiagMetric::dense() const {
    auto m = dense_diagonal(base);
    for (size_t i = 0; i + 1 < base.z.size(); ++i) {
        m[i][i + 1] = v * pseudo.off[i];
        m[i + 1][i] = v * pseudo.off[i];
    }
    return m;
}

std::vector<std::vector<Rational>> crypto_residual(const TriMatrixQ& h,
                                                   const std::vector<std::vector<Rational>>& theta) {
    const int n = h.size();
    if (theta.size() != static_cast<size_t>(n))
        throw constraint_error("crypto_residual: dimension mismatch");
    auto col_entry = [&](int r, int c) -> Rational {
        // H_{r,c} for |r-c| <= 1, else 0
        if (r == c) return h.diag[static_cast<size_t>(r)];
        if (c == r + 1) return h.upper[static_cast<size_t>(r)];
        if (r == c + 1) return h.lower[static_cast<size_t>(c)];
        return Rational(0);
    };
    std::vector<std::vector<Rational>> res(static_cast<size_t>(n),
                                           std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    // (H^T Theta)_{ij} = sum_k H_{ki} Theta_{kj}; H tridiagonal limits k to i-1..i+1.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational acc(0);
            for (int k = std::max(0, i - 1); k <= std::min(n - 1, i + 1); ++k)
                acc += col_entry(k, i) * theta[static_cast<size_t>(k)][static_cast<size_t>(j)];
            for (int k = std::max(0, j - 1); k <= std::min(n - 1, j + 1); ++k)
                acc -= theta[static_cast<size_t>(i)][static_cast<size_t>(k)] * col_entry(k, j);
            res[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    return res;
}

bool is_zero_matrix(const std::vector<std::vector<Rational>>& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (sgn(v) != 0) return false;
    return true;
}

int nonzero_entry_count(const std::vector<std::vector<Rational>>& m) {
    int c = 0;
    for (const auto& row : m)
        for (const auto& v : row)
            if (sgn(v) != 0) ++c;
    return c;
}

namespace {

double smallest_eigenvalue(const DiagonalMetric& base, const Pseudometric& pseudo, double v) {
    const int n = static_cast<int>(base.z.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = to_double(base.z[static_cast<size_t>(i)]);
    for (int i = 0; i + 1 < n; ++i) {
        const double p = v * to_double(pseudo.off[static_cast<size_t>(i)]);
        m(i, i + 1) = p;
        m(i + 1, i) = p;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double positivity_boundary(const DiagonalMetric& base, const Pseudometric& pseudo, double dir,
                           double tol) {
    // expand until lambda_min <= 0, then bisect; lambda_min(v) is concave in v
    double inside = 0.0, outside = dir;
    int guard = 0;
    while (smallest_eigenvalue(base, pseudo, outside) > 0.0) {
        inside = outside;
        outside *= 2.0;
        if (++guard > 200)
            throw constraint_error("admissible_v_interval: positivity boundary not found");
    }
    while (std::abs(outside - inside) > tol) {
        const double mid = 0.5 * (inside + outside);
        if (smallest_eigenvalue(base, pseudo, mid) > 0.0)
            inside = mid;
        else
            outside = mid;
    }
    return 0.5 * (inside + outside);
}

} // namespace

std::pair<double, double> admissible_v_interval(const DiagonalMetric& base,
                                                const Pseudometric& pseudo, double tol) {
    if (tol <= 0.0) throw constraint_error("admissible_v_interval: tol must be positive");
    for (const auto& z : base.z)
        if (sgn(z) <= 0) throw constraint_error("admissible_v_interval: base metric not positive");
    if (smallest_eigenvalue(base, pseudo, 0.0) <= 0.0)
        throw constraint_error("admissible_v_interval: base metric numerically not positive");
    const double hi = positivity_boundary(base, pseudo, 1.0, tol);
    const double lo = positivity_boundary(base, pseudo, -1.0, tol);
    return {lo, hi};
}

SpectralMetric spectral_metric(const Eigen::MatrixXd& h, const std::vector<double>& kappas) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n) throw constraint_error("spectral_metric: square matrix required");
    if (kappas.size() != static_cast<size_t>(n))
        throw constraint_error("spectral_metric: need exactly N kappas");
    for (double k : kappas)
        if (!(k > 0.0)) throw constraint_error("spectral_metric: kappas must be positive");

    // left eigenvectors of H = right eigenvectors of H^T
    Eigen::EigenSolver<Eigen::MatrixXd> es(h.transpose());
    const double scale = std::max(1.0, h.cwiseAbs().rowwise().sum().maxCoeff());
    Eigen::VectorXcd ev = es.eigenvalues();
    for (int i = 0; i < n; ++i)
        if (std::abs(ev(i).imag()) > 1e-9 * scale)
            throw domain_error("spectral_metric: spectrum is not real (outside domain)");
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ev(a).real() < ev(b).real(); });
    for (int i = 0; i + 1 < n; ++i) {
        const double gap = ev(order[static_cast<size_t>(i + 1)]).real() -
                           ev(order[static_cast<size_t>(i)]).real();
        if (gap <= 1e-8 * scale)
            throw domain_error("spectral_metric: spectrum is not simple (outside domain)");
    }

    SpectralMetric out;
    out.kappas = kappas;
    out.xi = Eigen::MatrixXd(n, n);
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd xi = es.eigenvectors().col(order[static_cast<size_t>(i)]).real();
        xi.normalize();
        out.xi.row(i) = xi.transpose();
    }
    out.theta = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        out.theta += kappas[static_cast<size_t>(i)] * out.xi.row(i).transpose() * out.xi.row(i);

    const double hnorm = h.cwiseAbs().rowwise().sum().maxCoeff();
    const double tnorm = out.theta.cwiseAbs().rowwise().sum().maxCoeff();
    const double res = (h.transpose() * out.theta - out.theta * h).cwiseAbs().maxCoeff();
    if (res > 1e-10 * std::max(1.0, hnorm) * tnorm)
        throw error(errc::internal, "spectral_metric: intertwining residual above tolerance");
    return out;
}

} // namespace epsolve
