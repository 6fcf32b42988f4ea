#include "epsolve/spectra.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace epsolve {

TriMatrix<double> to_double_matrix(const TriMatrixQ& m) {
    TriMatrix<double> out;
    out.diag.reserve(m.diag.size());
    out.upper.reserve(m.upper.size());
    out.lower.reserve(m.lower.size());
    for (const auto& v : m.diag) out.diag.push_back(to_double(v));
    for (const auto& v : m.upper) out.upper.push_back(to_double(v));
    for (const auto& v : m.lower) out.lower.push_back(to_double(v));
    return out;
}

TriMatrix<double> matrix_at_t(const ModelSpec& spec, const Path& path, double t) {
    // doubles are exact rationals; the substitution stays exact per sample
    TriMatrixP m = substitute_path(spec, path);
    const Rational tq(t);
    TriMatrix<double> out;
    for (const auto& v : m.diag) out.diag.push_back(to_double(v.eval(tq)));
    for (const auto& v : m.upper) out.upper.push_back(to_double(v.eval(tq)));
    for (const auto& v : m.lower) out.lower.push_back(to_double(v.eval(tq)));
    return out;
}

double reality_tolerance(const TriMatrix<double>& m) {
    const int n = static_cast<int>(m.diag.size());
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = std::abs(m.diag[static_cast<size_t>(i)]);
        if (i > 0) row += std::abs(m.lower[static_cast<size_t>(i - 1)]);
        if (i + 1 < n) row += std::abs(m.upper[static_cast<size_t>(i)]);
        norm = std::max(norm, row);
    }
    return 1e-9 * std::max(1.0, norm);
}

std::vector<std::complex<double>> eigs(const TriMatrix<double>& m) {
    const int n = static_cast<int>(m.diag.size());
    for (const auto& v : m.diag)
        if (!std::isfinite(v)) throw constraint_error("eigs: non-finite matrix entry");
    for (size_t i = 0; i + 1 < m.diag.size(); ++i)
        if (!std::isfinite(m.upper[i]) || !std::isfinite(m.lower[i]))
            throw constraint_error("eigs: non-finite matrix entry");

    bool symmetrizable = true;
    for (size_t i = 0; i + 1 < m.diag.size(); ++i)
        if (!(m.upper[i] * m.lower[i] > 0.0)) {
            symmetrizable = false;
            break;
        }

    std::vector<std::complex<double>> ev(static_cast<size_t>(n));
    if (symmetrizable) {
        // diagonal similarity maps the off-diagonal pair (u, l) to
        // sign(u) * sqrt(u*l) on both sides
        Eigen::VectorXd diag(n), sub(std::max(0, n - 1));
        for (int i = 0; i < n; ++i) diag(i) = m.diag[static_cast<size_t>(i)];
        for (int i = 0; i + 1 < n; ++i) {
            const double u = m.upper[static_cast<size_t>(i)], l = m.lower[static_cast<size_t>(i)];
            sub(i) = std::copysign(std::sqrt(u * l), u);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = es.eigenvalues()(i);
    } else {
        Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) dense(i, i) = m.diag[static_cast<size_t>(i)];
        for (int i = 0; i + 1 < n; ++i) {
            dense(i, i + 1) = m.upper[static_cast<size_t>(i)];
            dense(i + 1, i) = m.lower[static_cast<size_t>(i)];
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(dense, false);
        for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = es.eigenvalues()(i);
    }
    std::sort(ev.begin(), ev.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
}

namespace {

int count_real(const std::vector<std::complex<double>>& ev, double tol) {
    int c = 0;
    for (const auto& e : ev)
        if (std::abs(e.imag()) <= tol) ++c;
    return c;
}

int real_count_at(const ModelSpec& spec, const Path& path, double t) {
    TriMatrix<double> m = matrix_at_t(spec, path, t);
    return count_real(eigs(m), reality_tolerance(m));
}

} // namespace

SweepResult sweep(const ModelSpec& spec, const Path& path, const GridSpec& grid) {
    if (!(grid.step > 0.0)) throw constraint_error("sweep: grid step must be positive");
    if (!(grid.lo <= grid.hi)) throw constraint_error("sweep: empty grid");
    if (!path.depends_on_t()) throw constraint_error("sweep: path does not depend on t");
    SweepResult out;
    out.n = spec.n;
    // tolerant of the usual binary representation error in hi - lo
    const long steps =
        static_cast<long>(std::floor((grid.hi - grid.lo) / grid.step * (1.0 + 1e-12) + 1e-12));
    for (long i = 0; i <= steps; ++i) {
        const double t = grid.lo + static_cast<double>(i) * grid.step;
        TriMatrix<double> m = matrix_at_t(spec, path, t);
        SweepSample sample;
        sample.t = t;
        sample.eigenvalues = eigs(m);
        sample.real_count = count_real(sample.eigenvalues, reality_tolerance(m));
        out.samples.push_back(std::move(sample));
    }
    return out;
}

std::string sweep_to_csv(const SweepResult& res) {
    std::ostringstream os;
    os << "t";
    for (int i = 1; i <= res.n; ++i) os << ",re_" << i << ",im_" << i;
    os << ",real_count\n";
    std::vector<std::complex<double>> prev;
    for (const auto& sample : res.samples) {
        std::vector<std::complex<double>> row = sample.eigenvalues;
        if (!prev.empty()) {
            // nearest-neighbor matching to the previous row for continuity
            std::vector<std::complex<double>> matched(row.size());
            std::vector<bool> used(row.size(), false);
            for (size_t i = 0; i < prev.size(); ++i) {
                size_t best = row.size();
                double best_d = 0.0;
                for (size_t j = 0; j < row.size(); ++j) {
                    if (used[j]) continue;
                    const double d = std::abs(row[j] - prev[i]);
                    if (best == row.size() || d < best_d ||
                        (d == best_d && row[j].real() < row[best].real())) {
                        best = j;
                        best_d = d;
                    }
                }
                matched[i] = row[best];
                used[best] = true;
            }
            row = std::move(matched);
        }
        os << format_double(sample.t);
        for (const auto& e : row)
            os << "," << format_double(e.real()) << "," << format_double(e.imag());
        os << "," << sample.real_count << "\n";
        prev = row;
    }
    return os.str();
}

std::vector<ComplexificationEvent> detect_complexification(const ModelSpec& spec, const Path& path,
                                                           const SweepResult& res,
                                                           double refine_tol) {
    if (res.samples.size() < 2)
        throw constraint_error("detect_complexification: need at least two grid points");
    if (!(refine_tol > 0.0)) throw constraint_error("detect_complexification: bad refine_tol");
    std::vector<ComplexificationEvent> events;
    for (size_t i = 0; i + 1 < res.samples.size(); ++i) {
        const auto& a = res.samples[i];
        const auto& b = res.samples[i + 1];
        if (a.real_count == b.real_count) continue;
        ComplexificationEvent ev;
        ev.t_lo = a.t;
        ev.t_hi = b.t;
        ev.real_before = a.real_count;
        ev.real_after = b.real_count;
        double lo = a.t, hi = b.t;
        while (hi - lo > refine_tol) {
            const double mid = 0.5 * (lo + hi);
            if (real_count_at(spec, path, mid) == a.real_count)
                lo = mid;
            else
                hi = mid;
        }
        ev.t_star = 0.5 * (lo + hi);
        ev.t_lo = lo;
        ev.t_hi = hi;
        events.push_back(ev);
    }
    return events;
}

} // namespace epsolve
