#ifndef EPSOLVE_TRIMATRIX_HPP
#define EPSOLVE_TRIMATRIX_HPP

#include <vector>

#include "epsolve/errors.hpp"
#include "epsolve/poly.hpp"

namespace epsolve {

// Tridiagonal matrix over a coefficient ring T (Rational, or UniPoly in t).
template <class T>
struct TriMatrix {
    std::vector<T> diag;    // N
    std::vector<T> upper;   // N-1, entry j is (j, j+1)
    std::vector<T> lower;   // N-1, entry j is (j+1, j)

    TriMatrix() = default;
    TriMatrix(std::vector<T> d, std::vector<T> u, std::vector<T> l)
        : diag(std::move(d)), upper(std::move(u)), lower(std::move(l)) {
        if (diag.empty() || upper.size() + 1 != diag.size() || lower.size() != upper.size())
            throw constraint_error("tridiagonal storage sizes inconsistent");
    }

    int size() const { return static_cast<int>(diag.size()); }

    std::vector<std::vector<T>> dense() const {
        const size_t n = diag.size();
        std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
        for (size_t i = 0; i < n; ++i) m[i][i] = diag[i];
        for (size_t i = 0; i + 1 < n; ++i) {
            m[i][i + 1] = upper[i];
            m[i + 1][i] = lower[i];
        }
        return m;
    }
};

using TriMatrixQ = TriMatrix<Rational>;
using TriMatrixP = TriMatrix<UniPoly>;

// det(M - sI) by the three-term recurrence
//   p_0 = 1, p_1 = d_1 - s, p_j = (d_j - s) p_{j-1} - u_{j-1} l_{j-1} p_{j-2}.
template <class T>
Poly<T> charpoly_tridiag(const TriMatrix<T>& m) {
    const int n = m.size();
    Poly<T> pm1 = Poly<T>::one();
    Poly<T> p = Poly<T>(std::vector<T>{m.diag[0], T(-1)});
    for (int j = 2; j <= n; ++j) {
        Poly<T> dj(std::vector<T>{m.diag[static_cast<size_t>(j - 1)], T(-1)});
        Poly<T> e = Poly<T>::constant(m.upper[static_cast<size_t>(j - 2)] *
                                      m.lower[static_cast<size_t>(j - 2)]);
        Poly<T> next = dj * p - e * pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

// Independent route: det(M - sI) by fraction-free Bareiss elimination on the
// dense embedding, entries in Q[s].
UniPoly charpoly_bareiss(const std::vector<std::vector<Rational>>& m);

} // namespace epsolve

#endif
