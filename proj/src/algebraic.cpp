#include "ucat/algebraic.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <vector>

namespace ucat {

unsigned precision_cap_bits() {
    static unsigned cap = [] {
        if (const char* env = std::getenv("UCAT_PRECISION_BITS")) {
            long v = std::atol(env);
            if (v >= 64) return static_cast<unsigned>(v);
        }
        return 256u;
    }();
    return cap;
}

namespace {

// Trial-division factorization. Values reaching here are function values and
// their small integer powers, so this is plenty; a composite remainder is kept
// as an atomic factor (comparisons stay sound, see AlgebraicSum::sign).
std::vector<std::pair<mpz_class, unsigned long>> factor(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned long>> out;
    if (n <= 1) return out;
    auto strip = [&](unsigned long p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out.emplace_back(mpz_class(p), e);
        }
    };
    strip(2);
    strip(3);
    unsigned long p = 5;
    while (p <= 1000000ul) {
        mpz_class p2 = mpz_class(p) * p;
        if (cmp(p2, n) > 0) break;
        strip(p);
        strip(p + 2);
        p += 6;
    }
    if (n > 1) {
        // Reduce a perfect-power remainder so e.g. p^2 still normalizes.
        unsigned long e = 1;
        if (mpz_perfect_power_p(n.get_mpz_t())) {
            for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
                mpz_class root;
                if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                    n = root;
                    e = k;
                }
            }
        }
        out.emplace_back(n, e);
    }
    return out;
}

struct MpfrInterval {
    mpfr_t lo, hi;
    explicit MpfrInterval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~MpfrInterval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    MpfrInterval(const MpfrInterval&) = delete;
    MpfrInterval& operator=(const MpfrInterval&) = delete;
};

} // namespace

AlgebraicSum AlgebraicSum::pow(const Scalar& base, const Scalar& exponent) {
    if (sgn(base) < 0) throw NegativeValue("pow: negative base");
    if (sgn(exponent) <= 0) throw NonpositiveExponent("pow: exponent must be positive");
    if (sgn(base) == 0) return AlgebraicSum(Scalar(0));
    if (base == 1) return AlgebraicSum(Scalar(1));

    mpz_class a_z = exponent.get_num(), b_z = exponent.get_den();
    if (!a_z.fits_ulong_p() || !b_z.fits_ulong_p())
        throw UnsupportedExponent("pow: exponent too large");
    unsigned long a = a_z.get_ui(), b = b_z.get_ui();

    // base^(a/b) = (m^a n^(a(b-1)))^(1/b) / n^a  for base = m/n in lowest terms.
    mpz_class m = base.get_num(), n = base.get_den();
    if (b == 1) return AlgebraicSum(pow_int(base, static_cast<long>(a)));

    mpz_class na;
    mpz_pow_ui(na.get_mpz_t(), n.get_mpz_t(), a);
    Scalar coeff(1, na);
    coeff.canonicalize();

    auto fm = factor(m), fn = factor(n);
    std::map<mpz_class, mpz_class> exps; // prime -> exponent of the radicand
    for (auto& [p, e] : fm) exps[p] += mpz_class(e) * a;
    for (auto& [p, e] : fn) exps[p] += mpz_class(e) * a * (b - 1);

    // Reduce the root degree by the gcd of all exponents and b.
    mpz_class g(b);
    for (auto& [p, e] : exps) g = gcd(g, e);
    unsigned long deg = b / g.get_ui();
    for (auto& [p, e] : exps) e /= g;

    // Pull out the integer part and keep the degree-power-free radicand.
    mpz_class integer_part(1), radicand(1);
    for (auto& [p, e] : exps) {
        mpz_class q = e / deg, r = e % deg;
        if (q > 0) {
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), q.get_ui());
            integer_part *= pk;
        }
        if (r > 0) {
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), r.get_ui());
            radicand *= pk;
        }
    }

    coeff *= integer_part;
    if (deg == 1 || radicand == 1) return AlgebraicSum(coeff);

    AlgebraicSum s;
    s.terms_[Radical{radicand, static_cast<unsigned>(deg)}] = coeff;
    return s;
}

AlgebraicSum& AlgebraicSum::operator+=(const AlgebraicSum& o) {
    rat_ += o.rat_;
    for (auto& [r, c] : o.terms_) {
        auto it = terms_.find(r);
        if (it == terms_.end()) {
            terms_.emplace(r, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraicSum& AlgebraicSum::operator-=(const AlgebraicSum& o) {
    rat_ -= o.rat_;
    for (auto& [r, c] : o.terms_) {
        auto it = terms_.find(r);
        if (it == terms_.end()) {
            terms_.emplace(r, Scalar(-c));
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraicSum& AlgebraicSum::scale(const Scalar& c) {
    if (c == 0) {
        rat_ = 0;
        terms_.clear();
        return *this;
    }
    rat_ *= c;
    for (auto& [r, coeff] : terms_) coeff *= c;
    return *this;
}

Scalar AlgebraicSum::as_rational() const {
    if (!terms_.empty()) throw UnsupportedExponent("value is irrational");
    return rat_;
}

int AlgebraicSum::sign() const {
    if (terms_.empty()) return sgn(rat_);

    for (unsigned prec = 64; prec <= precision_cap_bits(); prec *= 2) {
        MpfrInterval acc(prec);
        mpfr_set_q(acc.lo, rat_.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(acc.hi, rat_.get_mpq_t(), MPFR_RNDU);

        mpfr_t rlo, rhi, t1, t2;
        mpfr_inits2(prec, rlo, rhi, t1, t2, static_cast<mpfr_ptr>(nullptr));
        for (auto& [rad, coeff] : terms_) {
            mpfr_set_z(rlo, rad.radicand.get_mpz_t(), MPFR_RNDD);
            mpfr_set_z(rhi, rad.radicand.get_mpz_t(), MPFR_RNDU);
            mpfr_rootn_ui(rlo, rlo, rad.degree, MPFR_RNDD);
            mpfr_rootn_ui(rhi, rhi, rad.degree, MPFR_RNDU);
            // coeff * [rlo, rhi], radicand is positive
            if (sgn(coeff) >= 0) {
                mpfr_mul_q(t1, rlo, coeff.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t2, rhi, coeff.get_mpq_t(), MPFR_RNDU);
            } else {
                mpfr_mul_q(t1, rhi, coeff.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t2, rlo, coeff.get_mpq_t(), MPFR_RNDU);
            }
            mpfr_add(acc.lo, acc.lo, t1, MPFR_RNDD);
            mpfr_add(acc.hi, acc.hi, t2, MPFR_RNDU);
        }
        mpfr_clears(rlo, rhi, t1, t2, static_cast<mpfr_ptr>(nullptr));

        if (mpfr_sgn(acc.lo) > 0) return 1;
        if (mpfr_sgn(acc.hi) < 0) return -1;
    }
    throw UndecidedComparison("sign undecided at precision cap");
}

double AlgebraicSum::approx() const {
    double v = rat_.get_d();
    for (auto& [rad, coeff] : terms_) {
        mpfr_t x;
        mpfr_init2(x, 64);
        mpfr_set_z(x, rad.radicand.get_mpz_t(), MPFR_RNDN);
        mpfr_rootn_ui(x, x, rad.degree, MPFR_RNDN);
        v += coeff.get_d() * mpfr_get_d(x, MPFR_RNDN);
        mpfr_clear(x);
    }
    return v;
}

std::string AlgebraicSum::str() const {
    std::ostringstream os;
    os << format_scalar(rat_);
    for (auto& [rad, coeff] : terms_)
        os << " + " << format_scalar(coeff) << "*" << rad.radicand.get_str() << "^(1/" << rad.degree
           << ")";
    return os.str();
}

} // namespace ucat
