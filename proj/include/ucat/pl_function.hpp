#pragma once

#include <optional>
#include <vector>

#include "ucat/algebraic.hpp"
#include "ucat/scalar.hpp"

namespace ucat {

// Interval of the real line; a missing bound means -inf / +inf. Open/closed
// flags are carried for API fidelity: variation of a continuous function does
// not distinguish them.
struct Interval {
    std::optional<Scalar> lo, hi;
    bool lo_open = true, hi_open = true;

    static Interval open(const Scalar& a, const Scalar& b) { return {a, b, true, true}; }
    static Interval closed(const Scalar& a, const Scalar& b) { return {a, b, false, false}; }
    static Interval left_ray(const Scalar& b) { return {std::nullopt, b, true, true}; } // (-inf, b)
    static Interval right_ray(const Scalar& a) { return {a, std::nullopt, true, true}; } // (a, +inf)
    static Interval whole() { return {std::nullopt, std::nullopt, true, true}; }

    bool empty() const {
        if (!lo || !hi) return false;
        int c = cmp(*lo, *hi);
        if (c > 0) return true;
        return c == 0 && (lo_open || hi_open);
    }
};

enum class DomainKind { WholeLine, ClosedInterval };

// Piecewise-linear function with exact rational breakpoints and base values.
// With value_exponent p != 1 the represented function interpolates the powered
// values v_i^p linearly between breakpoints; monotone segments of the base
// stay monotone, so every extremum- and variation-based quantity of the
// pointwise power f^p agrees with this carrier up to a segment-wise
// homeomorphism of the domain.
struct PLFunction {
    std::vector<Scalar> breakpoints;
    std::vector<Scalar> values; // base values, nonnegative
    DomainKind domain = DomainKind::WholeLine;
    Scalar exponent{1};

    const Scalar& x_min() const { return breakpoints.front(); }
    const Scalar& x_max() const { return breakpoints.back(); }
    size_t size() const { return breakpoints.size(); }
    bool is_zero() const;
    Scalar max_base_value() const;
};

enum class VariationKind { Total, Positive, Negative };

enum class ExtremumKind { Min, Max };

// One merged extremum; a plateau is reported by its closed position range.
struct Extremum {
    Scalar position_lo, position_hi;
    Scalar base_value;
    ExtremumKind kind;
    bool is_plateau() const { return position_lo != position_hi; }
};

PLFunction make_pl(std::vector<Scalar> breakpoints, std::vector<Scalar> values, DomainKind domain,
                   Scalar exponent = Scalar(1));

// Base-space evaluation (the p = 1 carrier). Zero outside support on the whole
// line; OutOfDomain outside a closed interval.
Scalar eval_base(const PLFunction& f, const Scalar& x);

// Value-space evaluation: exact rational for exponent 1, otherwise the exact
// algebraic value of the powered carrier.
AlgebraicSum eval(const PLFunction& f, const Scalar& x);

AlgebraicSum variation(const PLFunction& f, VariationKind kind, const Interval& J);

PLFunction power(const PLFunction& f, const Scalar& p);

// Extension of an interval function to the whole line: reparameterize the
// domain affinely onto [0,1], ramp linearly from 0 at -1 up to f(0), copy f,
// and ramp down to 0 at 2.
PLFunction extend_hat(const PLFunction& f);

std::vector<Extremum> local_extrema(const PLFunction& f);

// Exactly one merged local maximum and no other extremal plateau between the
// support tails; equivalently every positive superlevel set is one interval.
bool is_unimodal(const PLFunction& f);

} // namespace ucat
