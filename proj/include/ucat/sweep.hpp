#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ucat/pl_function.hpp"

namespace ucat {

struct ForcedMaxWitness {
    Interval interval;
    AlgebraicSum neg_variation; // V^-(f; interval)
    AlgebraicSum left_value;    // f at the left end
};

// Pairwise disjoint strict forced-max intervals realizing M(f), with exact
// rational endpoints drawn from the breakpoint grid.
struct ForcedMaxCertificate {
    std::vector<ForcedMaxWitness> intervals;
};

enum class CombinationRule { Sum, PPower, Max };

// Superlevel requirement for unimodality checks on graphs and the plane.
enum class UnimodalMode { Contractible, Pi0 };

struct UnimodalDecomposition {
    std::vector<PLFunction> summands;
    CombinationRule rule = CombinationRule::Sum;
    Scalar p{1}; // exponent for PPower
    // Closed position range of each summand's maximum (mode plateau).
    std::vector<std::pair<Scalar, Scalar>> mode_points;
};

struct ForcedMaxResult {
    bool forced = false;
    AlgebraicSum neg_variation;
    AlgebraicSum left_value;
};

enum class ForcedMaxMode { Strict, Almost };

ForcedMaxResult is_forced_max(const PLFunction& f, const Interval& J,
                              ForcedMaxMode mode = ForcedMaxMode::Strict);

// One step of the sweeping recursion: x_i together with the carrier value
// there (the threshold for the next step). The position is exact whenever the
// crossing can be solved rationally (always at exponent 1).
struct SweepStep {
    std::optional<Scalar> position;
    AlgebraicSum value;
};

std::vector<SweepStep> sweep_steps(const PLFunction& f);

// Exact positions x_1 < ... < x_n; requires exponent 1.
std::vector<Scalar> sweep_points(const PLFunction& f);

int sweep_count(const PLFunction& f);

// Number of sweep points strictly below `limit` (the circle stopping rule);
// exact for every exponent.
int sweep_count_before(const PLFunction& f, const Scalar& limit);

// Independent oracle for M(f): maximum number of pairwise disjoint strict
// forced-max intervals, computed by interval scheduling over the breakpoint
// grid (plus half-gap midpoints). Endpoints of an optimal family can always be
// slid to breakpoints because V^- + f is constant along a descent, so the grid
// is complete.
int oracle_M(const PLFunction& f);

// Same, restricted to intervals contained in (-inf, limit].
int oracle_M_restricted(const PLFunction& f, const Scalar& limit);

// Certificate realizing oracle_M via chain reconstruction.
ForcedMaxCertificate forced_max_certificate(const PLFunction& f);

// Minimal unimodal decomposition by the sweeping construction. Requires the
// effective values to be rational (exponent 1, or a power that lands back in
// the rationals).
UnimodalDecomposition decompose_line(const PLFunction& f);

// ucat on the line: sweep count of f^p. Pass infinity via ucat_line_inf
// marker... the l^infinity case is out of scope and rejected.
int ucat_line(const PLFunction& f, const Scalar& p = Scalar(1));

struct IntervalUcat {
    int n = 0;
    bool last_increasing = false;
    bool last_plateau = false;
};

// ucat of a closed-interval function via the hat extension, plus whether the
// last summand of the minimal decomposition is increasing (equivalently
// M(f_hat restricted to (-inf,1]) = M(f_hat) - 1).
IntervalUcat ucat_interval(const PLFunction& f);

// Restriction of a whole-line decomposition to the reparameterized unit
// interval [0,1] (used after sweeping a hat extension).
UnimodalDecomposition restrict_to_unit_interval(const UnimodalDecomposition& d);

// Adjusts the last two summands of a sweeping decomposition on [0,1] so that
// u_{n-1}(1) = 0 while the sum and unimodality are preserved; if u_n was
// increasing it stays increasing.
UnimodalDecomposition normalize_last_two(const UnimodalDecomposition& d);

// Pointwise sum of the summands at x (rule Sum / PPower base space).
Scalar decomposition_sum_at(const UnimodalDecomposition& d, const Scalar& x);

} // namespace ucat
