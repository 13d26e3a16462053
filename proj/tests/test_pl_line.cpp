#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ucat/errors.hpp"
#include "ucat/pl_function.hpp"

using namespace ucat;

namespace {

Scalar Q(const std::string& s) { return parse_scalar(s); }

PLFunction tent() {
    return make_pl({Q("0"), Q("1"), Q("2")}, {Q("0"), Q("1"), Q("0")}, DomainKind::WholeLine);
}

// max{0, 1/2 - d(x, C_depth)} for the depth-d middle-thirds approximation:
// plateaus of height 1/2 over the 2^d intervals, dips of depth gap/2 between
// them, linear tails to zero at -1/2 and 3/2.
PLFunction cantor_truncation(int depth) {
    std::vector<std::pair<Scalar, Scalar>> iv{{Q("0"), Q("1")}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::pair<Scalar, Scalar>> next;
        for (auto& [a, b] : iv) {
            Scalar w = (b - a) / 3;
            next.emplace_back(a, a + w);
            next.emplace_back(b - w, b);
        }
        iv = std::move(next);
    }
    std::vector<Scalar> xs, vs;
    Scalar half = Q("1/2");
    xs.push_back(Q("-1/2"));
    vs.push_back(Q("0"));
    for (size_t i = 0; i < iv.size(); ++i) {
        xs.push_back(iv[i].first);
        vs.push_back(half);
        xs.push_back(iv[i].second);
        vs.push_back(half);
        if (i + 1 < iv.size()) {
            Scalar gap = iv[i + 1].first - iv[i].second;
            xs.push_back(iv[i].second + gap / 2);
            vs.push_back(half - gap / 2);
        }
    }
    xs.push_back(Q("3/2"));
    vs.push_back(Q("0"));
    return make_pl(std::move(xs), std::move(vs), DomainKind::WholeLine);
}

std::mt19937_64 rng(20240901);

PLFunction random_pl(int max_bp = 14) {
    std::uniform_int_distribution<int> nbp(3, max_bp);
    std::uniform_int_distribution<int> num(0, 8), den(1, 4), step(1, 5);
    int n = nbp(rng);
    std::vector<Scalar> xs, vs;
    Scalar x(0);
    for (int i = 0; i < n; ++i) {
        xs.push_back(x);
        x += Scalar(step(rng));
        if (i == 0 || i == n - 1)
            vs.push_back(Scalar(0));
        else
            vs.push_back(scalar_from_long(num(rng), den(rng)));
    }
    return make_pl(std::move(xs), std::move(vs), DomainKind::WholeLine);
}

} // namespace

TEST_CASE("make_pl validates inputs") {
    CHECK_NOTHROW(tent());
    CHECK_THROWS_AS(make_pl({Q("0"), Q("1")}, {Q("1"), Q("0")}, DomainKind::WholeLine),
                    SupportViolation);
    CHECK_THROWS_AS(make_pl({Q("0"), Q("0")}, {Q("0"), Q("0")}, DomainKind::WholeLine),
                    NonMonotoneBreakpoints);
    CHECK_THROWS_AS(make_pl({Q("0"), Q("1"), Q("2")}, {Q("0"), Q("-1"), Q("0")},
                            DomainKind::WholeLine),
                    NegativeValue);
    // the 8-slice circle profile lifted to [0,1]
    std::vector<Scalar> xs, vs;
    for (int j = 0; j <= 8; ++j) xs.push_back(scalar_from_long(j, 8));
    for (const char* v : {"4", "3", "7/2", "3", "4", "1", "3", "1", "4"}) vs.push_back(Q(v));
    CHECK_NOTHROW(make_pl(xs, vs, DomainKind::ClosedInterval));
    // collinear interior breakpoints are retained
    auto f = make_pl({Q("0"), Q("1"), Q("2"), Q("3")}, {Q("0"), Q("1"), Q("1"), Q("0")},
                     DomainKind::WholeLine);
    CHECK(f.size() == 4);
}

TEST_CASE("eval") {
    auto f = tent();
    CHECK(eval(f, Q("1/2")).as_rational() == Q("1/2"));
    CHECK(eval(f, Q("5")).as_rational() == 0);
    CHECK(eval(f, Q("-3")).as_rational() == 0);
    auto g = make_pl({Q("0"), Q("1")}, {Q("0"), Q("1")}, DomainKind::ClosedInterval);
    CHECK_THROWS_AS(eval(g, Q("2")), OutOfDomain);
    // sqrt-carrier: value at a breakpoint with base 5, exponent 1/2 is sqrt(5)
    auto h = make_pl({Q("0"), Q("1"), Q("2")}, {Q("0"), Q("5"), Q("0")}, DomainKind::WholeLine,
                     Q("1/2"));
    auto v = eval(h, Q("1"));
    CHECK(!v.is_rational());
    AlgebraicSum sqrt5 = AlgebraicSum::pow(Q("5"), Q("1/2"));
    CHECK(alg_equal(v, sqrt5));
}

TEST_CASE("variation basics") {
    auto f = tent();
    CHECK(variation(f, VariationKind::Negative, Interval::closed(Q("0"), Q("2"))).as_rational() ==
          1);
    CHECK(variation(f, VariationKind::Positive, Interval::closed(Q("0"), Q("2"))).as_rational() ==
          1);
    CHECK(variation(f, VariationKind::Total, Interval::whole()).as_rational() == 2);
    CHECK_THROWS_AS(variation(f, VariationKind::Total, Interval::open(Q("2"), Q("1"))),
                    EmptyInterval);
}

TEST_CASE("variation of the depth-2 Cantor truncation over (0,1) is 5/18") {
    auto f = cantor_truncation(2);
    auto v = variation(f, VariationKind::Negative, Interval::open(Q("0"), Q("1")));
    CHECK(v.as_rational() == Q("5/18"));
    // depth-d: partial sums (1/2)(1-(2/3)^d) of 1/6 + 2/18 + 4/54 + ...
    for (int d = 1; d <= 4; ++d) {
        auto fd = cantor_truncation(d);
        Scalar expect = (Q("1") - pow_int(Q("2/3"), d)) / 2;
        CHECK(variation(fd, VariationKind::Negative, Interval::open(Q("0"), Q("1"))).as_rational() ==
              expect);
    }
}

TEST_CASE("variation identities on random functions") {
    for (int iter = 0; iter < 300; ++iter) {
        auto f = random_pl();
        Scalar a = f.x_min() - 1, b = f.x_max() + 1;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(f.size()) - 1);
        Scalar m = f.breakpoints[static_cast<size_t>(pick(rng))];
        for (auto kind : {VariationKind::Total, VariationKind::Positive, VariationKind::Negative}) {
            auto whole = variation(f, kind, Interval::closed(a, b)).as_rational();
            auto left = variation(f, kind, Interval::closed(a, m)).as_rational();
            auto right = variation(f, kind, Interval::closed(m, b)).as_rational();
            CHECK(left + right == whole); // additivity
        }
        auto up = variation(f, VariationKind::Positive, Interval::closed(a, b)).as_rational();
        auto down = variation(f, VariationKind::Negative, Interval::closed(a, b)).as_rational();
        auto tot = variation(f, VariationKind::Total, Interval::closed(a, b)).as_rational();
        CHECK(up + down == tot);
        CHECK(up - down == eval_base(f, b) - eval_base(f, a)); // V+ - V- = f(b) - f(a)
    }
}

TEST_CASE("monotone case") {
    auto g = make_pl({Q("0"), Q("2"), Q("5")}, {Q("1"), Q("2"), Q("7")},
                     DomainKind::ClosedInterval);
    CHECK(variation(g, VariationKind::Negative, Interval::closed(Q("0"), Q("5"))).as_rational() ==
          0);
    CHECK(variation(g, VariationKind::Total, Interval::closed(Q("0"), Q("5"))).as_rational() == 6);
}

TEST_CASE("power") {
    auto f = tent();
    auto f1 = power(f, Q("1"));
    CHECK(f1.exponent == 1);
    CHECK_THROWS_AS(power(f, Q("0")), NonpositiveExponent);
    // tent of height 4 under p=1/2 peaks at 2
    auto t4 = make_pl({Q("0"), Q("1"), Q("2")}, {Q("0"), Q("4"), Q("0")}, DomainKind::WholeLine);
    auto h = power(t4, Q("1/2"));
    CHECK(eval(h, Q("1")).as_rational() == 2);
    // {5,2,1} under p=1/2 -> {sqrt5, sqrt2, 1}
    CHECK(alg_equal(AlgebraicSum::pow(Q("5"), Q("1/2")) + AlgebraicSum::pow(Q("2"), Q("1/2")),
                    AlgebraicSum::pow(Q("5"), Q("1/2")) + AlgebraicSum::pow(Q("2"), Q("1/2"))));
    // extrema positions survive composition of powers
    auto w = make_pl({Q("0"), Q("1"), Q("2"), Q("3"), Q("4")},
                     {Q("0"), Q("2"), Q("1"), Q("2"), Q("0")}, DomainKind::WholeLine);
    auto a = power(power(w, Q("2")), Q("3")), b = power(w, Q("6"));
    auto ea = local_extrema(a), eb = local_extrema(b);
    REQUIRE(ea.size() == eb.size());
    for (size_t i = 0; i < ea.size(); ++i) {
        CHECK(ea[i].position_lo == eb[i].position_lo);
        CHECK((ea[i].kind == eb[i].kind));
    }
}

TEST_CASE("extend_hat") {
    // constant 1 on [0,1] -> 0 at -1, plateau, 0 at 2
    auto c1 = make_pl({Q("0"), Q("1")}, {Q("1"), Q("1")}, DomainKind::ClosedInterval);
    auto hat = extend_hat(c1);
    CHECK(hat.domain == DomainKind::WholeLine);
    CHECK(eval_base(hat, Q("-1")) == 0);
    CHECK(eval_base(hat, Q("-1/2")) == Q("1/2"));
    CHECK(eval_base(hat, Q("1/2")) == 1);
    CHECK(eval_base(hat, Q("3/2")) == Q("1/2"));
    CHECK(eval_base(hat, Q("2")) == 0);
    // zero endpoints -> zero extension
    auto z = make_pl({Q("0"), Q("1/2"), Q("1")}, {Q("0"), Q("1"), Q("0")},
                     DomainKind::ClosedInterval);
    auto hz = extend_hat(z);
    CHECK(eval_base(hz, Q("-1/2")) == 0);
    CHECK(eval_base(hz, Q("3/2")) == 0);
    // f(x)=x on [0,1] -> breakpoints -1,0,1,2 with values 0,0,1,0
    auto r = extend_hat(make_pl({Q("0"), Q("1")}, {Q("0"), Q("1")}, DomainKind::ClosedInterval));
    CHECK(r.breakpoints == std::vector<Scalar>{Q("-1"), Q("0"), Q("1"), Q("2")});
    CHECK(r.values == std::vector<Scalar>{Q("0"), Q("0"), Q("1"), Q("0")});
    // domain reparameterization: f on [2,6]
    auto s = extend_hat(make_pl({Q("2"), Q("6")}, {Q("3"), Q("3")}, DomainKind::ClosedInterval));
    CHECK(eval_base(s, Q("1/2")) == 3);
}

TEST_CASE("local_extrema") {
    auto f = tent();
    auto e = local_extrema(f);
    REQUIRE(e.size() == 1);
    CHECK(e[0].kind == ExtremumKind::Max);
    CHECK(e[0].position_lo == 1);

    auto w = make_pl({Q("0"), Q("1"), Q("2"), Q("3"), Q("4")},
                     {Q("0"), Q("2"), Q("1"), Q("2"), Q("0")}, DomainKind::WholeLine);
    auto ew = local_extrema(w);
    REQUIRE(ew.size() == 3);
    CHECK(ew[0].kind == ExtremumKind::Max);
    CHECK(ew[0].position_lo == 1);
    CHECK(ew[1].kind == ExtremumKind::Min);
    CHECK(ew[1].position_lo == 2);
    CHECK(ew[2].kind == ExtremumKind::Max);
    CHECK(ew[2].position_lo == 3);

    // plateau merge: flat top counts once
    auto p = make_pl({Q("0"), Q("1"), Q("2"), Q("3")}, {Q("0"), Q("1"), Q("1"), Q("0")},
                     DomainKind::WholeLine);
    auto ep = local_extrema(p);
    REQUIRE(ep.size() == 1);
    CHECK(ep[0].is_plateau());
    CHECK(ep[0].position_lo == 1);
    CHECK(ep[0].position_hi == 2);

    // the circle example sliced at a0: maxima at t0, t2, t4, t6 pattern
    std::vector<Scalar> xs, vs;
    for (int j = 0; j <= 8; ++j) xs.push_back(scalar_from_long(j, 8));
    for (const char* v : {"4", "3", "7/2", "3", "4", "1", "3", "1", "4"}) vs.push_back(Q(v));
    auto slice0 = make_pl(xs, vs, DomainKind::ClosedInterval);
    auto es = local_extrema(slice0);
    std::vector<Scalar> maxima;
    for (auto& x : es)
        if (x.kind == ExtremumKind::Max) maxima.push_back(x.position_lo);
    CHECK(maxima == std::vector<Scalar>{Q("0"), Q("2/8"), Q("4/8"), Q("6/8"), Q("1")});
}

TEST_CASE("is_unimodal") {
    CHECK(is_unimodal(tent()));
    auto w = make_pl({Q("0"), Q("1"), Q("2"), Q("3"), Q("4")},
                     {Q("0"), Q("2"), Q("1"), Q("2"), Q("0")}, DomainKind::WholeLine);
    CHECK(!is_unimodal(w));
    auto z = make_pl({Q("0"), Q("1")}, {Q("0"), Q("0")}, DomainKind::WholeLine);
    CHECK(!is_unimodal(z));
}

TEST_CASE("scalar parse/format") {
    CHECK(format_scalar(Q("3/6")) == "1/2");
    CHECK(format_scalar(Q("1.5")) == "3/2");
    CHECK(format_scalar(Q("-0.25")) == "-1/4");
    CHECK(format_scalar(Q("7")) == "7");
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("algebraic radical normalization") {
    // sqrt(8) = 2 sqrt(2)
    auto a = AlgebraicSum::pow(Q("8"), Q("1/2"));
    auto b = AlgebraicSum::pow(Q("2"), Q("1/2"));
    b.scale(Q("2"));
    CHECK(alg_equal(a, b));
    // sqrt(1/2) = sqrt(2)/2
    auto c = AlgebraicSum::pow(Q("1/2"), Q("1/2"));
    auto d = AlgebraicSum::pow(Q("2"), Q("1/2"));
    d.scale(Q("1/2"));
    CHECK(alg_equal(c, d));
    // 4^(1/4) = sqrt(2)
    CHECK(alg_equal(AlgebraicSum::pow(Q("4"), Q("1/4")), AlgebraicSum::pow(Q("2"), Q("1/2"))));
    // perfect powers collapse to rationals
    CHECK(AlgebraicSum::pow(Q("4"), Q("1/2")).as_rational() == 2);
    CHECK(AlgebraicSum::pow(Q("27"), Q("2/3")).as_rational() == 9);
    // 2 + 1 <= sqrt(3) + sqrt(2) fails: 3 > 3.146... is false, check sign
    auto lhs = AlgebraicSum(Q("3"));
    auto rhs = AlgebraicSum::pow(Q("3"), Q("1/2")) + AlgebraicSum::pow(Q("2"), Q("1/2"));
    CHECK(compare(lhs, rhs) < 0);
    // sqrt(2)+sqrt(8) = 3 sqrt(2) exactly
    auto e = AlgebraicSum::pow(Q("2"), Q("1/2")) + AlgebraicSum::pow(Q("8"), Q("1/2"));
    auto f3 = AlgebraicSum::pow(Q("2"), Q("1/2"));
    f3.scale(Q("3"));
    CHECK(compare(e, f3) == 0);
}
