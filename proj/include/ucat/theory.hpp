#pragma once

#include <vector>

#include "ucat/algebraic.hpp"
#include "ucat/scalar.hpp"

namespace ucat {

// Alternating sequence a0 <= a1 >= a2 <= ... >= a_{2k} of nonnegative values.
struct UpDownSeq {
    std::vector<Scalar> entries; // odd length
};

UpDownSeq make_updown(std::vector<Scalar> entries);

// V^-(a) = sum of the k drops a_{2i-1} - a_{2i}.
Scalar neg_variation_seq(const UpDownSeq& a);

// Entrywise q-th power; alternation is preserved. The result lives in value
// space, so it is returned as the exact algebraic drops when needed; the
// sequence itself keeps base entries with the exponent applied externally.
AlgebraicSum neg_variation_seq_pow(const UpDownSeq& a, const Scalar& q);

UpDownSeq seq_power(const UpDownSeq& a, const Scalar& q); // exact only when entries stay rational

// Prefix-sum dominance with equal totals; inputs must be nonincreasing.
bool majorizes(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

// For majorizing pairs: sum a_i^q >= sum b_i^q when q >= 1, <= when 0 < q < 1.
bool karamata_check(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& q);

// Lemma: V^-(a) <= a0 implies V^-(a^q) <= a0^q for 0 < q < 1.
bool lemma_updown_check(const UpDownSeq& a, const Scalar& q);

} // namespace ucat
