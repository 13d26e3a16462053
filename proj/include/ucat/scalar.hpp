#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ucat/errors.hpp"

namespace ucat {

// Exact rational scalar. All breakpoints and p=1 function values live here;
// comparisons are decidable, which the strict forced-max inequality needs.
using Scalar = mpq_class;

inline Scalar scalar_from_long(long n, long d = 1) {
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

// Parses "p/q", "p", or a plain decimal like "1.5" / "-0.25" into an exact rational.
Scalar parse_scalar(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_scalar(const Scalar& q);

inline int sign(const Scalar& q) { return sgn(q); }

inline Scalar scalar_abs(const Scalar& q) { return q < 0 ? Scalar(-q) : q; }

inline Scalar scalar_min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
inline Scalar scalar_max(const Scalar& a, const Scalar& b) { return a > b ? a : b; }

// q^n for integer n (n may be negative when q != 0).
Scalar pow_int(const Scalar& q, long n);

double to_double(const Scalar& q);

} // namespace ucat
