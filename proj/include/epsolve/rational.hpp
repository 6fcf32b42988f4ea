#ifndef EPSOLVE_RATIONAL_HPP
#define EPSOLVE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "epsolve/errors.hpp"

namespace epsolve {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and decimal strings like "-0.9" (converted exactly).
// Rejects zero denominators and anything with trailing garbage.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// shortest round-trip decimal form
std::string format_double(double x);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign_of(const Rational& q) { return sgn(q); }

// Simplest rational (minimal denominator, then minimal |numerator|) in the
// closed interval [lo, hi]; Stern-Brocot / continued-fraction walk.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

} // namespace epsolve

#endif
