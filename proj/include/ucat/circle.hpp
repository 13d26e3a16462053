#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ucat/pl_function.hpp"
#include "ucat/sweep.hpp"

namespace ucat {

// PL function on the circle, parameterized over [0,1) with linear
// interpolation between consecutive angles (wrapping the last to the first).
struct CirclePL {
    std::vector<Scalar> angles; // strictly increasing, in [0,1)
    std::vector<Scalar> values; // nonnegative base values
    Scalar exponent{1};
};

CirclePL make_circle(std::vector<Scalar> angles, std::vector<Scalar> values,
                     Scalar exponent = Scalar(1));

bool has_zero(const CirclePL& f);
Scalar circle_eval_base(const CirclePL& f, const Scalar& angle);
CirclePL power_circle(const CirclePL& f, const Scalar& p);
CirclePL rotate_circle(const CirclePL& f, const Scalar& theta);
CirclePL reflect_circle(const CirclePL& f);

// f composed with the slicing map phi_a^+, as a PL function on [0,1] with
// f_a(0) = f_a(1) = f(a). For exponent != 1 the slice angle must be a knot.
PLFunction slice(const CirclePL& f, const Scalar& a);

// M_a^+(f) = M(f_hat_a restricted to (-inf,1]): sweep of the hat extension,
// counting the x_i strictly below 1. Requires f without zeros.
int m_a_plus(const CirclePL& f, const Scalar& a);
int m_a_minus(const CirclePL& f, const Scalar& a);

// ucat on the circle: cut at a zero when one exists, otherwise
// max(2, min over knots of M_a^+) of the powered function.
int ucat_circle(const CirclePL& f, const Scalar& p = Scalar(1));

// Superlevel sets are single proper arcs at every positive level up to max.
bool is_unimodal_circle(const CirclePL& f);

// Explicit two-summand decomposition for zero-free exponent-1 circle functions
// with ucat 2 (the three-branch construction); nullopt when no knot slice
// admits a 2-summand sweep.
std::optional<std::pair<CirclePL, CirclePL>> two_summand_decomposition(const CirclePL& f);

} // namespace ucat
