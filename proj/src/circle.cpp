#include "ucat/circle.hpp"

#include <algorithm>

#include "ucat/errors.hpp"

namespace ucat {

CirclePL make_circle(std::vector<Scalar> angles, std::vector<Scalar> values, Scalar exponent) {
    if (angles.empty() || angles.size() != values.size())
        throw NonMonotoneBreakpoints("angle/value lists must have equal nonzero length");
    for (size_t i = 0; i < angles.size(); ++i) {
        if (angles[i] < 0 || angles[i] >= 1) throw NonMonotoneBreakpoints("angles must lie in [0,1)");
        if (i > 0 && angles[i - 1] >= angles[i])
            throw NonMonotoneBreakpoints("angles must be strictly increasing");
        if (values[i] < 0) throw NegativeValue("circle values must be nonnegative");
    }
    if (exponent <= 0) throw NonpositiveExponent("value exponent must be positive");
    return CirclePL{std::move(angles), std::move(values), std::move(exponent)};
}

bool has_zero(const CirclePL& f) {
    return std::any_of(f.values.begin(), f.values.end(), [](const Scalar& v) { return v == 0; });
}

namespace {

Scalar wrap_unit(Scalar t) {
    // reduce t mod 1 into [0,1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return t - Scalar(fl);
}

} // namespace

Scalar circle_eval_base(const CirclePL& f, const Scalar& angle) {
    Scalar t = wrap_unit(angle);
    size_t n = f.angles.size();
    if (n == 1) return f.values[0];
    auto it = std::upper_bound(f.angles.begin(), f.angles.end(), t);
    size_t j = static_cast<size_t>(it - f.angles.begin()); // first knot > t
    size_t i = (j == 0) ? n - 1 : j - 1;
    if (f.angles[i] == t) return f.values[i];
    Scalar a0 = f.angles[i];
    Scalar a1 = (j == 0 || j == n) ? Scalar(f.angles[0] + 1) : f.angles[j];
    if (t < a0) t += 1; // wrapped segment
    Scalar tt = (t - a0) / (a1 - a0);
    const Scalar& v0 = f.values[i];
    const Scalar& v1 = f.values[j % n];
    return v0 + tt * (v1 - v0);
}

CirclePL power_circle(const CirclePL& f, const Scalar& p) {
    if (p <= 0) throw NonpositiveExponent("power: exponent must be positive");
    CirclePL g = f;
    g.exponent = f.exponent * p;
    return g;
}

CirclePL rotate_circle(const CirclePL& f, const Scalar& theta) {
    std::vector<std::pair<Scalar, Scalar>> knots;
    knots.reserve(f.angles.size());
    for (size_t i = 0; i < f.angles.size(); ++i)
        knots.emplace_back(wrap_unit(f.angles[i] + theta), f.values[i]);
    std::sort(knots.begin(), knots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    CirclePL g;
    g.exponent = f.exponent;
    for (auto& [a, v] : knots) {
        g.angles.push_back(a);
        g.values.push_back(v);
    }
    return g;
}

CirclePL reflect_circle(const CirclePL& f) {
    std::vector<std::pair<Scalar, Scalar>> knots;
    for (size_t i = 0; i < f.angles.size(); ++i)
        knots.emplace_back(wrap_unit(-f.angles[i]), f.values[i]);
    std::sort(knots.begin(), knots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    CirclePL g;
    g.exponent = f.exponent;
    for (auto& [a, v] : knots) {
        g.angles.push_back(a);
        g.values.push_back(v);
    }
    return g;
}

PLFunction slice(const CirclePL& f, const Scalar& a) {
    Scalar base = wrap_unit(a);
    bool at_knot =
        std::binary_search(f.angles.begin(), f.angles.end(), base);
    if (!at_knot && f.exponent != 1)
        throw UnsupportedExponent("slicing a powered circle off its knots is not exact");

    Scalar va = circle_eval_base(f, base);
    std::vector<std::pair<Scalar, Scalar>> knots;
    for (size_t i = 0; i < f.angles.size(); ++i) {
        Scalar t = wrap_unit(f.angles[i] - base);
        if (t == 0) continue;
        knots.emplace_back(t, f.values[i]);
    }
    std::sort(knots.begin(), knots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Scalar> xs, vs;
    xs.push_back(Scalar(0));
    vs.push_back(va);
    for (auto& [t, v] : knots) {
        xs.push_back(t);
        vs.push_back(v);
    }
    xs.push_back(Scalar(1));
    vs.push_back(va);
    return PLFunction{std::move(xs), std::move(vs), DomainKind::ClosedInterval, f.exponent};
}

int m_a_plus(const CirclePL& f, const Scalar& a) {
    if (has_zero(f)) throw HasZeros("M_a^+ is defined for functions without zeros");
    PLFunction hat = extend_hat(slice(f, a));
    return sweep_count_before(hat, Scalar(1));
}

int m_a_minus(const CirclePL& f, const Scalar& a) {
    return m_a_plus(reflect_circle(f), wrap_unit(-a));
}

int ucat_circle(const CirclePL& f, const Scalar& p) {
    if (p <= 0) throw NonpositiveExponent("ucat_circle: p must be positive");
    CirclePL g = power_circle(f, p);
    if (has_zero(g)) {
        // Cut at the first zero; the problem reduces to the line.
        size_t z = 0;
        while (g.values[z] != 0) ++z;
        PLFunction cut = slice(g, g.angles[z]);
        PLFunction line{cut.breakpoints, cut.values, DomainKind::WholeLine, cut.exponent};
        if (line.is_zero()) return 0;
        return sweep_count(line);
    }
    int best = -1;
    for (const Scalar& a : g.angles) {
        int m = m_a_plus(g, a);
        if (best < 0 || m < best) best = m;
    }
    return std::max(2, best);
}

bool is_unimodal_circle(const CirclePL& f) {
    Scalar maxv(0);
    for (const Scalar& v : f.values) maxv = scalar_max(maxv, v);
    if (maxv == 0) return false;

    std::vector<Scalar> levels;
    std::vector<Scalar> distinct = f.values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (size_t i = 0; i < distinct.size(); ++i) {
        if (distinct[i] > 0) levels.push_back(distinct[i]);
        if (i + 1 < distinct.size()) {
            Scalar mid = (distinct[i] + distinct[i + 1]) / 2;
            if (mid > 0) levels.push_back(mid);
        }
    }

    size_t n = f.values.size();
    for (const Scalar& c : levels) {
        // cyclic runs of knots with value >= c
        int runs = 0;
        bool all = true;
        for (size_t i = 0; i < n; ++i) {
            bool in = f.values[i] >= c;
            bool prev_in = f.values[(i + n - 1) % n] >= c;
            if (!in) all = false;
            if (in && !prev_in) ++runs;
        }
        if (all) return false; // whole circle is not contractible
        if (runs != 1) return false;
    }
    return true;
}

namespace {

CirclePL to_circle(const PLFunction& g, const Scalar& cut_angle) {
    // g on [0,1] with g(0) == g(1); knots rotate back by the cut angle.
    std::vector<std::pair<Scalar, Scalar>> knots;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g.breakpoints[i] == 1) continue;
        knots.emplace_back(wrap_unit(g.breakpoints[i] + cut_angle), g.values[i]);
    }
    std::sort(knots.begin(), knots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    CirclePL c;
    c.exponent = g.exponent;
    for (auto& [a, v] : knots) {
        c.angles.push_back(a);
        c.values.push_back(v);
    }
    return c;
}

PLFunction pl_sub(const PLFunction& a, const PLFunction& b) {
    // a - b on [0,1], both closed-interval
    std::vector<Scalar> xs = a.breakpoints;
    xs.insert(xs.end(), b.breakpoints.begin(), b.breakpoints.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Scalar> vs;
    for (const Scalar& x : xs) vs.push_back(eval_base(a, x) - eval_base(b, x));
    return PLFunction{std::move(xs), std::move(vs), DomainKind::ClosedInterval, Scalar(1)};
}

PLFunction pl_add(const PLFunction& a, const PLFunction& b) {
    std::vector<Scalar> xs = a.breakpoints;
    xs.insert(xs.end(), b.breakpoints.begin(), b.breakpoints.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Scalar> vs;
    for (const Scalar& x : xs) vs.push_back(eval_base(a, x) + eval_base(b, x));
    return PLFunction{std::move(xs), std::move(vs), DomainKind::ClosedInterval, Scalar(1)};
}

PLFunction tent_on_unit(const Scalar& x0, const Scalar& x1, const Scalar& peak_at,
                        const Scalar& height) {
    // piecewise linear on [0,1], equal to height at peak_at, 0 outside [x0,x1]
    std::vector<Scalar> xs, vs;
    auto push = [&](const Scalar& x, const Scalar& v) {
        if (!xs.empty() && xs.back() == x) return;
        xs.push_back(x);
        vs.push_back(v);
    };
    push(Scalar(0), peak_at == 0 ? height : Scalar(0));
    if (x0 > 0) push(x0, x0 == peak_at ? height : Scalar(0));
    if (peak_at > 0 && peak_at < 1) push(peak_at, height);
    if (x1 < 1) push(x1, x1 == peak_at ? height : Scalar(0));
    push(Scalar(1), peak_at == 1 ? height : Scalar(0));
    return PLFunction{std::move(xs), std::move(vs), DomainKind::ClosedInterval, Scalar(1)};
}

} // namespace

std::optional<std::pair<CirclePL, CirclePL>> two_summand_decomposition(const CirclePL& f) {
    if (f.exponent != 1)
        throw UnsupportedExponent("two_summand_decomposition requires exponent 1");
    if (has_zero(f)) throw HasZeros("two_summand_decomposition expects a zero-free function");

    for (const Scalar& a : f.angles) {
        PLFunction fa = slice(f, a);
        PLFunction hat = extend_hat(fa);
        int k = sweep_count(hat);
        int kb = sweep_count_before(hat, Scalar(1));
        if (k > 3 || (k == 3 && kb != 2)) continue;

        UnimodalDecomposition d = restrict_to_unit_interval(decompose_line(hat));
        if (k >= 2) d = normalize_last_two(d);

        PLFunction cu1, cu2;
        bool built = false;
        if (k == 3) {
            // last summand increasing: glue u1 and u3 across the cut point
            const PLFunction &g1 = d.summands[0], &g2 = d.summands[1], &g3 = d.summands[2];
            if (eval_base(g1, Scalar(1)) == 0 && eval_base(g3, Scalar(0)) == 0 &&
                eval_base(g1, Scalar(0)) == eval_base(g3, Scalar(1))) {
                cu1 = pl_add(g1, g3);
                cu2 = g2;
                built = true;
            }
        }
        PLFunction zero = make_pl({Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)},
                                  DomainKind::ClosedInterval);
        const PLFunction& u1 = d.summands[0];
        const PLFunction& u2 = k >= 2 ? d.summands[1] : zero;
        if (!built) {
        // branch 1: u1 non-decreasing near 0 -> peel a tent at the cut point
        if (u1.size() >= 2 && u1.values[1] >= u1.values[0] && eval_base(fa, Scalar(0)) > 0) {
            Scalar eps = u1.breakpoints[1];
            PLFunction v = tent_on_unit(Scalar(0), eps, Scalar(0), eval_base(fa, Scalar(0)));
            cu1 = pl_sub(u1, v);
            cu2 = pl_sub(fa, cu1);
            built = true;
        } else if (u2.size() >= 2 && u2.values[u2.size() - 2] >= u2.values.back() &&
                   eval_base(fa, Scalar(1)) > 0) {
            // branch 2, mirrored at the right end
            Scalar eps_lo = u2.breakpoints[u2.size() - 2];
            PLFunction v = tent_on_unit(eps_lo, Scalar(1), Scalar(1), eval_base(fa, Scalar(1)));
            cu2 = pl_sub(u2, v);
            cu1 = pl_sub(fa, cu2);
            built = true;
        } else {
            // branch 3: u1 decreasing, u2 increasing -> splice doubled halves
            PLFunction diff = pl_sub(u1, u2);
            std::optional<Scalar> x0;
            for (size_t i = 0; i + 1 < diff.size(); ++i) {
                const Scalar &v0 = diff.values[i], &v1 = diff.values[i + 1];
                if (v0 == 0) {
                    x0 = diff.breakpoints[i];
                    break;
                }
                if (v0 > 0 && v1 <= 0) {
                    x0 = diff.breakpoints[i] +
                         v0 / (v0 - v1) * (diff.breakpoints[i + 1] - diff.breakpoints[i]);
                    break;
                }
            }
            if (x0) {
                std::vector<Scalar> xs = u1.breakpoints;
                xs.insert(xs.end(), u2.breakpoints.begin(), u2.breakpoints.end());
                xs.push_back(*x0);
                std::sort(xs.begin(), xs.end());
                xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
                std::vector<Scalar> vs;
                for (const Scalar& x : xs)
                    vs.push_back(x <= *x0 ? Scalar(2 * eval_base(u2, x))
                                          : Scalar(2 * eval_base(u1, x)));
                cu1 = PLFunction{xs, vs, DomainKind::ClosedInterval, Scalar(1)};
                cu2 = pl_sub(fa, cu1);
                built = true;
            }
        }
        }
        if (!built) continue;

        // nonnegativity and wrap consistency before lifting to the circle
        bool ok = eval_base(cu1, Scalar(0)) == eval_base(cu1, Scalar(1)) &&
                  eval_base(cu2, Scalar(0)) == eval_base(cu2, Scalar(1));
        for (const Scalar& v : cu1.values) ok = ok && v >= 0;
        for (const Scalar& v : cu2.values) ok = ok && v >= 0;
        if (!ok) continue;

        CirclePL g1 = to_circle(cu1, a), g2 = to_circle(cu2, a);
        if (!is_unimodal_circle(g1) || !is_unimodal_circle(g2)) continue;
        return std::make_pair(std::move(g1), std::move(g2));
    }
    return std::nullopt;
}

} // namespace ucat
