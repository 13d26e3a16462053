#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ucat/circle.hpp"
#include "ucat/graph.hpp"
#include "ucat/pl_function.hpp"
#include "ucat/theory.hpp"

namespace ucat {

struct ScanReport {
    std::string kind;
    int trials = 0;
    int violations = 0;
    std::vector<std::string> counterexamples; // violating instances, verbatim
};

// Random instance generators (deterministic per engine state).
PLFunction random_compact_pl(std::mt19937_64& rng, int max_breakpoints = 14);
CirclePL random_positive_circle(std::mt19937_64& rng, int max_knots = 10);
MorseSmaleTree random_nonresonant_tree(std::mt19937_64& rng, int max_maxima = 10);
// Up-down sequence with V^-(a) <= a_0; tight cases appear with positive rate.
UpDownSeq random_updown(std::mt19937_64& rng, int max_drops = 4);

// ucat_line(f, p) is nondecreasing along the sorted exponent list.
ScanReport monotonicity_scan_line(int trials, std::vector<Scalar> p_list, uint64_t seed);
// ucat_circle(f, p) is nondecreasing along the sorted exponent list.
ScanReport monotonicity_scan_circle(int trials, std::vector<Scalar> p_list, uint64_t seed);
// min_tree_cover(t^p) is nonincreasing as p decreases through the sorted list.
ScanReport tree_monotonicity_scan(int trials, std::vector<long> p_list, uint64_t seed);
// V^-(a) <= a_0 implies V^-(a^q) <= a_0^q for each q in (0,1).
ScanReport updown_scan(int trials, std::vector<Scalar> q_list, uint64_t seed);
// sweep count equals the interval-scheduling oracle.
ScanReport oracle_scan(int trials, uint64_t seed, int max_breakpoints = 14);

} // namespace ucat
