#pragma once

#include <map>
#include <string>
#include <utility>

#include "ucat/scalar.hpp"

namespace ucat {

// Normalized real radical radicand^(1/degree): radicand > 1 is an integer that
// is degree-power-free with exponent vector coprime to degree, degree >= 2.
// Distinct normalized radicals are linearly independent over Q, so a vanishing
// combination is detected symbolically rather than numerically.
struct Radical {
    mpz_class radicand;
    unsigned degree = 2;

    friend bool operator<(const Radical& a, const Radical& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return cmp(a.radicand, b.radicand) < 0;
    }
    friend bool operator==(const Radical& a, const Radical& b) {
        return a.degree == b.degree && cmp(a.radicand, b.radicand) == 0;
    }
};

// Exact element of the ring Q[{r^(1/k)}]: a rational plus a Q-linear
// combination of normalized radicals. Closed under +, -, and rational scaling,
// which covers every quantity the powered sweep and the inequality suites
// produce (sums and differences of p-th powers of rational values).
class AlgebraicSum {
public:
    AlgebraicSum() = default;
    /*implicit*/ AlgebraicSum(const Scalar& q) : rat_(q) {}
    /*implicit*/ AlgebraicSum(long n) : rat_(scalar_from_long(n)) {}

    // base^exponent for rational base >= 0 and rational exponent > 0.
    static AlgebraicSum pow(const Scalar& base, const Scalar& exponent);

    AlgebraicSum& operator+=(const AlgebraicSum& o);
    AlgebraicSum& operator-=(const AlgebraicSum& o);
    AlgebraicSum& scale(const Scalar& c);

    friend AlgebraicSum operator+(AlgebraicSum a, const AlgebraicSum& b) { return a += b; }
    friend AlgebraicSum operator-(AlgebraicSum a, const AlgebraicSum& b) { return a -= b; }
    friend AlgebraicSum operator*(const Scalar& c, AlgebraicSum a) { return a.scale(c); }

    bool is_rational() const { return terms_.empty(); }
    const Scalar& rational_part() const { return rat_; }
    // Throws UnsupportedExponent if the value is irrational.
    Scalar as_rational() const;

    // Sign of the value: -1, 0, +1. Symbolic when all radical coefficients
    // cancel; otherwise MPFR interval evaluation with escalating precision up
    // to the UCAT_PRECISION_BITS cap (default 256), past which
    // UndecidedComparison is thrown.
    int sign() const;

    double approx() const;
    std::string str() const;

    friend int compare(const AlgebraicSum& a, const AlgebraicSum& b) {
        AlgebraicSum d = a;
        d -= b;
        return d.sign();
    }

private:
    Scalar rat_;
    std::map<Radical, Scalar> terms_;
};

inline bool operator<(const AlgebraicSum& a, const AlgebraicSum& b) { return compare(a, b) < 0; }
inline bool operator>(const AlgebraicSum& a, const AlgebraicSum& b) { return compare(a, b) > 0; }
inline bool operator<=(const AlgebraicSum& a, const AlgebraicSum& b) { return compare(a, b) <= 0; }
inline bool operator>=(const AlgebraicSum& a, const AlgebraicSum& b) { return compare(a, b) >= 0; }
inline bool alg_equal(const AlgebraicSum& a, const AlgebraicSum& b) { return compare(a, b) == 0; }

// Precision cap in bits for undecided-comparison escalation.
unsigned precision_cap_bits();

} // namespace ucat
