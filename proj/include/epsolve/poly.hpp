#ifndef EPSOLVE_POLY_HPP
#define EPSOLVE_POLY_HPP

#include <cassert>
#include <utility>
#include <vector>

#include "epsolve/rational.hpp"

namespace epsolve {

template <class T>
class Poly;

inline bool ring_is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }

// Dense univariate polynomial over a commutative ring T (coefficients low to
// high).  T is Rational or Poly<Rational>; the latter gives Q[t][s].
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    explicit Poly(long v) {
        T t(v);
        if (!ring_is_zero(t)) c_.push_back(std::move(t));
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(T(1)); }
    static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }
    static Poly constant(T v) {
        Poly p;
        if (!ring_is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<T>& coeffs() const { return c_; }
    T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    void set_coeff(size_t i, T v) {
        if (i >= c_.size()) c_.resize(i + 1, T(0));
        c_[i] = std::move(v);
        trim();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<T> c(a.c_);
        for (auto& v : c) v = T(0) - v;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const T& k) {
        std::vector<T> c(a.c_);
        for (auto& v : c) v = v * k;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // multiply by x^k
    Poly shifted(size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> c(c_.size() + k, T(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> c(c_.size() - 1, T(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(c));
    }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using UniPoly = Poly<Rational>;
using BiPoly = Poly<UniPoly>;   // dense in s, coefficients polynomials in t

template <class T>
bool ring_is_zero(const Poly<T>& p) { return p.is_zero(); }

inline Rational ring_one(const Rational&) { return Rational(1); }
template <class T>
Poly<T> ring_one(const Poly<T>&) { return Poly<T>::one(); }

template <class T>
T ring_pow(const T& base, unsigned e) {
    T acc = ring_one(base);
    for (unsigned i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// Field division with remainder in Q[x].
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// a / b with zero-remainder assertion; used by Bareiss elimination.
template <class T>
Poly<T> ring_exact_div(const Poly<T>& a, const Poly<T>& b);

// Pseudo-division over a ring: lc(b)^(deg a - deg b + 1) * a = q*b + r, with
// the multiplier applied in full even when leading terms cancel early
// (Cohen, Algorithm 3.1.2).
template <class T>
Poly<T> pseudo_rem(const Poly<T>& a, const Poly<T>& b);

// Resultant by the subresultant PRS (Cohen, Algorithm 3.3.7).  Exact.
template <class T>
T resultant(Poly<T> a, Poly<T> b);

// Rational content and integer primitive part: p == content * primitive,
// content > 0, primitive has coprime integer coefficients.
struct PrimitiveParts {
    UniPoly primitive;
    Rational content;   // 0 for the zero polynomial
};
PrimitiveParts primitive_parts(const UniPoly& p);

UniPoly monic(const UniPoly& p);

// Monic gcd over Q[x]; remainders are content-normalized to control growth.
UniPoly gcd(UniPoly a, UniPoly b);

// Yun's square-free decomposition: p = lc * prod f_i^i with f_i monic,
// square-free, pairwise coprime.  Returns (f_i, i) for nonconstant f_i.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

UniPoly squarefree_part(const UniPoly& p);

// Fraction-free determinant (Bareiss).  R is Poly<Rational> here; entries of
// the working matrix stay in the subring generated by the input.
template <class R>
R bareiss_det(std::vector<std::vector<R>> a);

// --- template implementations ---

template <class T>
Poly<T> ring_exact_div(const Poly<T>& a, const Poly<T>& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return Poly<T>();
    assert(a.degree() >= b.degree());
    std::vector<T> rem(a.coeffs());
    std::vector<T> q(static_cast<size_t>(a.degree() - b.degree()) + 1, T(0));
    const auto& bl = b.lc();
    for (int i = a.degree(); i >= b.degree(); --i) {
        T c = ring_exact_div(rem[static_cast<size_t>(i)], bl);
        q[static_cast<size_t>(i - b.degree())] = c;
        if (!ring_is_zero(c))
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(i - b.degree() + j)] =
                    rem[static_cast<size_t>(i - b.degree() + j)] - c * b.coeff(static_cast<size_t>(j));
    }
    for (const auto& r : rem) {
        (void)r;
        assert(ring_is_zero(r));
    }
    return Poly<T>(std::move(q));
}

template <class T>
Poly<T> pseudo_rem(const Poly<T>& a, const Poly<T>& b) {
    assert(!b.is_zero());
    int m = a.degree(), n = b.degree();
    if (m < n) return a;
    const T d = b.lc();
    Poly<T> r = a;
    int e = m - n + 1;
    while (!r.is_zero() && r.degree() >= n) {
        Poly<T> s = Poly<T>::constant(r.lc()).shifted(static_cast<size_t>(r.degree() - n));
        r = r * d - s * b;
        --e;
    }
    return r * ring_pow(d, static_cast<unsigned>(e));
}

template <class T>
T resultant(Poly<T> a, Poly<T> b) {
    const T one = T(1);
    if (a.is_zero() || b.is_zero()) return T(0);
    if (a.degree() == 0 && b.degree() == 0) return one;
    if (a.degree() == 0) return ring_pow(a.lc(), static_cast<unsigned>(b.degree()));
    if (b.degree() == 0) return ring_pow(b.lc(), static_cast<unsigned>(a.degree()));

    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) s = -s;
    }
    T g = one, h = one;
    while (b.degree() > 0) {
        int d = a.degree() - b.degree();
        if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) s = -s;
        Poly<T> r = pseudo_rem(a, b);
        a = b;
        T denom = g * ring_pow(h, static_cast<unsigned>(d));
        if (r.is_zero())
            b = Poly<T>();
        else {
            std::vector<T> c(r.coeffs());
            for (auto& v : c) v = ring_exact_div(v, denom);
            b = Poly<T>(std::move(c));
        }
        if (b.is_zero()) return T(0);
        g = a.lc();
        // h = g^d / h^(d-1)
        if (d == 0) {
            // h unchanged
        } else {
            h = ring_exact_div(ring_pow(g, static_cast<unsigned>(d)),
                               ring_pow(h, static_cast<unsigned>(d - 1)));
        }
    }
    // res = s * lc(b)^deg(a) / h^(deg(a)-1)
    T num = ring_pow(b.lc(), static_cast<unsigned>(a.degree()));
    T res = ring_exact_div(num, ring_pow(h, static_cast<unsigned>(a.degree() - 1)));
    if (s < 0) res = T(0) - res;
    return res;
}

template <class R>
R bareiss_det(std::vector<std::vector<R>> a) {
    const size_t n = a.size();
    if (n == 0) return R(1);
    int sign = 1;
    R prev = ring_one(a[0][0]);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(a[k][k])) {
            size_t piv = k + 1;
            while (piv < n && ring_is_zero(a[piv][k])) ++piv;
            if (piv == n) return R(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = ring_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    R det = a[n - 1][n - 1];
    if (sign < 0) det = R(0) - det;
    return det;
}

} // namespace epsolve

#endif
