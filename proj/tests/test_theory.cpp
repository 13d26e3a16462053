#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ucat/errors.hpp"
#include "ucat/scans.hpp"
#include "ucat/theory.hpp"

using namespace ucat;

namespace {
Scalar Q(const std::string& s) { return parse_scalar(s); }
} // namespace

TEST_CASE("up-down sequences") {
    CHECK(neg_variation_seq(make_updown({Q("1")})) == 0);
    CHECK(neg_variation_seq(make_updown({Q("0"), Q("2"), Q("1")})) == 1);
    CHECK(neg_variation_seq(make_updown({Q("1"), Q("3"), Q("0"), Q("2"), Q("1")})) == 4);
    CHECK_THROWS_AS(make_updown({Q("2"), Q("1"), Q("0")}), NotSorted);
    CHECK_THROWS_AS(make_updown({Q("1"), Q("2")}), LengthMismatch);
}

TEST_CASE("seq_power") {
    auto a = make_updown({Q("1"), Q("3"), Q("0"), Q("2"), Q("1")});
    auto sq = seq_power(a, Q("2"));
    CHECK(sq.entries == std::vector<Scalar>{Q("1"), Q("9"), Q("0"), Q("4"), Q("1")});
    auto rt = seq_power(make_updown({Q("0"), Q("4"), Q("1")}), Q("1/2"));
    CHECK(rt.entries == std::vector<Scalar>{Q("0"), Q("2"), Q("1")});
    auto id = seq_power(a, Q("1"));
    CHECK(id.entries == a.entries);
}

TEST_CASE("majorizes") {
    CHECK(majorizes({Q("2"), Q("0")}, {Q("1"), Q("1")}));
    CHECK(!majorizes({Q("1"), Q("1")}, {Q("2"), Q("0")}));
    // x=3, y=4, z=2: (y, x-y+z) = (4,1) majorizes (max, min) = (3,2)
    CHECK(majorizes({Q("4"), Q("1")}, {Q("3"), Q("2")}));
    CHECK_THROWS_AS(majorizes({Q("1"), Q("2")}, {Q("1"), Q("2")}), NotSorted);
    CHECK_THROWS_AS(majorizes({Q("1")}, {Q("1"), Q("0")}), LengthMismatch);
}

TEST_CASE("karamata_check") {
    // concave power: 2 + 1 <= sqrt(3) + sqrt(2)
    CHECK(karamata_check({Q("4"), Q("1")}, {Q("3"), Q("2")}, Q("1/2")));
    // q = 1: equality of totals
    CHECK(karamata_check({Q("4"), Q("1")}, {Q("3"), Q("2")}, Q("1")));
    // convex power
    CHECK(karamata_check({Q("2"), Q("0")}, {Q("1"), Q("1")}, Q("2")));
    CHECK_THROWS_AS(karamata_check({Q("1"), Q("1")}, {Q("2"), Q("0")}, Q("2")),
                    PreconditionViolated);
}

TEST_CASE("lemma_updown_check") {
    CHECK(lemma_updown_check(make_updown({Q("1"), Q("1"), Q("1")}), Q("1/2")));
    // (4,6,3,5,4): V^- = 4 = a0, tight case
    auto tight = make_updown({Q("4"), Q("6"), Q("3"), Q("5"), Q("4")});
    CHECK(neg_variation_seq(tight) == 4);
    CHECK(lemma_updown_check(tight, Q("1/2")));
    CHECK(lemma_updown_check(tight, Q("1/3")));
    CHECK(lemma_updown_check(tight, Q("9/10")));
    // precondition violated: V^- = 10 > 4
    CHECK_THROWS_AS(
        lemma_updown_check(make_updown({Q("4"), Q("9"), Q("0"), Q("4"), Q("3")}), Q("1/2")),
        PreconditionViolated);
    CHECK_THROWS_AS(lemma_updown_check(make_updown({Q("1")}), Q("2")), NonpositiveExponent);
}

TEST_CASE("karamata fuzz") {
    std::mt19937_64 rng(515);
    std::uniform_int_distribution<int> len(2, 5), val(0, 9), den(1, 3);
    int tested = 0;
    for (int iter = 0; iter < 4000 && tested < 2000; ++iter) {
        int n = len(rng);
        std::vector<Scalar> a, b;
        for (int i = 0; i < n; ++i) {
            a.push_back(scalar_from_long(val(rng), den(rng)));
            b.push_back(scalar_from_long(val(rng), den(rng)));
        }
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        // rescale b to the same total (if possible) to make majorization likely
        Scalar sa(0), sb(0);
        for (auto& x : a) sa += x;
        for (auto& x : b) sb += x;
        if (sb == 0) continue;
        for (auto& x : b) x = x * sa / sb;
        try {
            if (!majorizes(a, b)) continue;
        } catch (const Error&) {
            continue;
        }
        ++tested;
        CHECK(karamata_check(a, b, Q("1/2")));
        CHECK(karamata_check(a, b, Q("2")));
        CHECK(karamata_check(a, b, Q("3")));
    }
    CHECK(tested > 200);
}

TEST_CASE("up-down fuzz") {
    auto rep = updown_scan(3000, {Q("1/3"), Q("1/2"), Q("9/10")}, 99);
    CHECK(rep.trials == 3000);
    CHECK(rep.violations == 0);
}
