#include "ucat/theory.hpp"

#include "ucat/errors.hpp"

namespace ucat {

UpDownSeq make_updown(std::vector<Scalar> entries) {
    if (entries.empty() || entries.size() % 2 == 0)
        throw LengthMismatch("an up-down sequence has odd length 2k+1");
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0) throw NegativeValue("up-down entries must be nonnegative");
        if (i + 1 < entries.size()) {
            bool up = i % 2 == 0;
            if (up && entries[i] > entries[i + 1])
                throw NotSorted("violated a_{2i} <= a_{2i+1}");
            if (!up && entries[i] < entries[i + 1])
                throw NotSorted("violated a_{2i-1} >= a_{2i}");
        }
    }
    return UpDownSeq{std::move(entries)};
}

Scalar neg_variation_seq(const UpDownSeq& a) {
    Scalar s(0);
    for (size_t i = 1; i + 1 < a.entries.size(); i += 2) s += a.entries[i] - a.entries[i + 1];
    return s;
}

AlgebraicSum neg_variation_seq_pow(const UpDownSeq& a, const Scalar& q) {
    AlgebraicSum s(Scalar(0));
    for (size_t i = 1; i + 1 < a.entries.size(); i += 2)
        s += AlgebraicSum::pow(a.entries[i], q) - AlgebraicSum::pow(a.entries[i + 1], q);
    return s;
}

UpDownSeq seq_power(const UpDownSeq& a, const Scalar& q) {
    if (q <= 0) throw NonpositiveExponent("seq_power: q must be positive");
    std::vector<Scalar> out;
    out.reserve(a.entries.size());
    for (const Scalar& e : a.entries) out.push_back(AlgebraicSum::pow(e, q).as_rational());
    return UpDownSeq{std::move(out)};
}

bool majorizes(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size() || a.empty()) throw LengthMismatch("majorizes needs equal lengths");
    for (size_t i = 1; i < a.size(); ++i) {
        if (a[i - 1] < a[i]) throw NotSorted("a must be nonincreasing");
        if (b[i - 1] < b[i]) throw NotSorted("b must be nonincreasing");
    }
    Scalar pa(0), pb(0);
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) return false;
    }
    pa += a.back();
    pb += b.back();
    return pa == pb;
}

bool karamata_check(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& q) {
    if (!majorizes(a, b)) throw PreconditionViolated("karamata_check requires a to majorize b");
    if (q <= 0) throw NonpositiveExponent("karamata_check: q must be positive");
    AlgebraicSum sa(Scalar(0)), sb(Scalar(0));
    for (const Scalar& x : a) sa += AlgebraicSum::pow(x, q);
    for (const Scalar& x : b) sb += AlgebraicSum::pow(x, q);
    int c = compare(sa, sb);
    return q >= 1 ? c >= 0 : c <= 0;
}

bool lemma_updown_check(const UpDownSeq& a, const Scalar& q) {
    if (q <= 0 || q >= 1) throw NonpositiveExponent("lemma_updown_check: q must lie in (0,1)");
    if (neg_variation_seq(a) > a.entries.front())
        throw PreconditionViolated("lemma_updown_check requires V^-(a) <= a_0");
    AlgebraicSum lhs = neg_variation_seq_pow(a, q);
    AlgebraicSum rhs = AlgebraicSum::pow(a.entries.front(), q);
    return compare(lhs, rhs) <= 0;
}

} // namespace ucat
