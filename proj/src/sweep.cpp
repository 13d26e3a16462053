#include "ucat/sweep.hpp"

#include <algorithm>
#include <cassert>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

// Maximal monotone run over breakpoint indices [lo..hi]; interior flats are
// absorbed, so values at lo..hi are monotone non-strictly and change strictly
// from values[lo] to values[hi].
struct Run {
    size_t lo, hi;
    int dir; // +1 ascending, -1 descending
};

std::vector<Run> build_runs(const PLFunction& f) {
    std::vector<Run> runs;
    for (size_t i = 0; i + 1 < f.size(); ++i) {
        int d = cmp(f.values[i + 1], f.values[i]);
        if (d == 0) continue;
        if (!runs.empty() && runs.back().dir == d)
            runs.back().hi = i + 1;
        else
            runs.push_back({i, i + 1, d});
    }
    return runs;
}

std::vector<Run> descending_runs(const PLFunction& f) {
    std::vector<Run> out;
    for (auto& r : build_runs(f))
        if (r.dir < 0) out.push_back(r);
    return out;
}

// Last position in the (non-increasing) run where the base value equals
// target, i.e. the infimum of {x : value < target}.
Scalar position_in_run(const PLFunction& f, const Run& run, const Scalar& target) {
    size_t e = run.lo;
    while (e < run.hi && f.values[e + 1] >= target) ++e;
    if (f.values[e] == target) return f.breakpoints[e];
    // strictly inside segment [e, e+1]
    const Scalar &x0 = f.breakpoints[e], &x1 = f.breakpoints[e + 1];
    const Scalar &v0 = f.values[e], &v1 = f.values[e + 1];
    return x0 + (v0 - target) / (v0 - v1) * (x1 - x0);
}

struct EngineStep {
    size_t run_index; // into the descending run list
    AlgebraicSum value;
    std::optional<Scalar> position;
};

// The sweeping recursion x_i = inf { x : V^-(f;(x_{i-1},x)) > f(x_{i-1}) } over
// the powered carrier. Crossing values stay exact: every threshold is an
// integer combination of p-th powers of breakpoint values.
std::vector<EngineStep> run_engine(const PLFunction& f, const std::optional<Scalar>& stop_at) {
    if (f.domain != DomainKind::WholeLine)
        throw OutOfDomain("sweeping requires a compactly supported whole-line function");

    auto drops = descending_runs(f);
    std::vector<AlgebraicSum> pv(f.size());
    std::vector<bool> pv_set(f.size(), false);
    auto powered = [&](size_t i) -> const AlgebraicSum& {
        if (!pv_set[i]) {
            pv[i] = AlgebraicSum::pow(f.values[i], f.exponent);
            pv_set[i] = true;
        }
        return pv[i];
    };

    std::vector<EngineStep> steps;
    AlgebraicSum threshold(Scalar(0)); // f(-inf) = 0
    size_t start_run = 0;
    bool partial = false;
    AlgebraicSum partial_top;

    while (true) {
        AlgebraicSum acc(Scalar(0));
        bool crossed = false;
        for (size_t k = start_run; k < drops.size(); ++k) {
            AlgebraicSum top = (k == start_run && partial) ? partial_top : powered(drops[k].lo);
            AlgebraicSum drop = top - powered(drops[k].hi);
            if (compare(acc + drop, threshold) > 0) {
                AlgebraicSum value = acc + top - threshold; // carrier value at x_i
                EngineStep step{k, value, std::nullopt};
                if (f.exponent == 1) step.position = position_in_run(f, drops[k], value.as_rational());
                steps.push_back(std::move(step));

                if (stop_at) {
                    // Stop scanning once x_i >= stop position; positions are
                    // strictly increasing so later steps cannot matter.
                    const Run& run = drops[k];
                    bool below;
                    if (f.breakpoints[run.hi] <= *stop_at)
                        below = true;
                    else if (f.breakpoints[run.lo] >= *stop_at)
                        below = false;
                    else
                        below = compare(steps.back().value, eval(f, *stop_at)) > 0;
                    if (!below) return steps;
                }

                threshold = steps.back().value;
                start_run = k;
                partial = true;
                partial_top = threshold;
                crossed = true;
                break;
            }
            acc += drop;
        }
        if (!crossed) return steps;
    }
}

} // namespace

ForcedMaxResult is_forced_max(const PLFunction& f, const Interval& J, ForcedMaxMode mode) {
    if (J.empty()) throw EmptyInterval("is_forced_max over an empty interval");
    ForcedMaxResult res;
    res.neg_variation = variation(f, VariationKind::Negative, J);
    if (J.lo)
        res.left_value = eval(f, *J.lo);
    else
        res.left_value = AlgebraicSum(Scalar(0)); // whole-line: f(-inf) = 0
    int c = compare(res.neg_variation, res.left_value);
    res.forced = c > 0;
    if (!res.forced && mode == ForcedMaxMode::Almost && c == 0 && J.hi) {
        // (x, y+delta) is forced-max for every delta > 0 iff the carrier is
        // strictly decreasing on (y, y+eps): a flat or ascending stretch right
        // of y leaves small extensions at V^- = f(x).
        const Scalar& y = *J.hi;
        if (y >= f.x_min() && y < f.x_max()) {
            auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), y);
            size_t s = static_cast<size_t>(it - f.breakpoints.begin()) - 1;
            res.forced = f.values[s + 1] < f.values[s];
        }
    }
    return res;
}

std::vector<SweepStep> sweep_steps(const PLFunction& f) {
    std::vector<SweepStep> out;
    for (auto& s : run_engine(f, std::nullopt)) out.push_back({s.position, s.value});
    return out;
}

std::vector<Scalar> sweep_points(const PLFunction& f) {
    if (f.exponent != 1)
        throw UnsupportedExponent("sweep_points reports exact positions at exponent 1 only");
    std::vector<Scalar> xs;
    for (auto& s : run_engine(f, std::nullopt)) xs.push_back(*s.position);
    return xs;
}

int sweep_count(const PLFunction& f) {
    return static_cast<int>(run_engine(f, std::nullopt).size());
}

int sweep_count_before(const PLFunction& f, const Scalar& limit) {
    auto steps = run_engine(f, limit);
    auto drops = descending_runs(f);
    int n = 0;
    for (auto& s : steps) {
        const Run& run = drops[s.run_index];
        bool below;
        if (f.breakpoints[run.hi] <= limit)
            below = true;
        else if (f.breakpoints[run.lo] >= limit)
            below = false;
        else
            below = compare(s.value, eval(f, limit)) > 0;
        if (below) ++n;
    }
    return n;
}

namespace {

struct ChainDP {
    std::vector<Scalar> grid;
    std::vector<AlgebraicSum> H;  // cumulative V^- from -inf
    std::vector<AlgebraicSum> fv; // carrier value
    std::vector<int> best;
    std::vector<int> parent;
};

ChainDP chain_dp(const PLFunction& f, const std::optional<Scalar>& limit) {
    if (f.domain != DomainKind::WholeLine)
        throw OutOfDomain("oracle_M requires a compactly supported whole-line function");
    ChainDP dp;
    for (size_t i = 0; i < f.size(); ++i) {
        dp.grid.push_back(f.breakpoints[i]);
        if (i + 1 < f.size())
            dp.grid.push_back((f.breakpoints[i] + f.breakpoints[i + 1]) / 2);
    }
    if (limit) dp.grid.push_back(*limit);
    std::sort(dp.grid.begin(), dp.grid.end());
    dp.grid.erase(std::unique(dp.grid.begin(), dp.grid.end()), dp.grid.end());
    if (limit)
        dp.grid.erase(std::remove_if(dp.grid.begin(), dp.grid.end(),
                                     [&](const Scalar& g) { return g > *limit; }),
                      dp.grid.end());

    size_t n = dp.grid.size();
    dp.H.resize(n);
    dp.fv.resize(n);
    AlgebraicSum hcum(Scalar(0));
    AlgebraicSum prev = AlgebraicSum(Scalar(0));
    Scalar prev_x = f.x_min();
    for (size_t j = 0; j < n; ++j) {
        AlgebraicSum v = eval(f, dp.grid[j]);
        if (dp.grid[j] > prev_x) {
            // accumulate V^- between consecutive grid points (grid refines the
            // breakpoints, so the carrier is monotone between them)
            AlgebraicSum d = prev - v;
            if (d.sign() > 0) hcum += d;
        }
        dp.H[j] = hcum;
        dp.fv[j] = v;
        prev = std::move(v);
        prev_x = dp.grid[j];
    }

    dp.best.assign(n, 0);
    dp.parent.assign(n, -1);
    for (size_t j = 0; j < n; ++j) {
        // start interval (-inf, g_j): threshold f(-inf) = 0
        if (dp.H[j].sign() > 0) {
            dp.best[j] = 1;
            dp.parent[j] = -1;
        } else {
            dp.best[j] = 0;
        }
        for (size_t i = 0; i < j; ++i) {
            if (dp.best[i] == 0) continue;
            if (dp.best[i] + 1 <= dp.best[j]) continue;
            if (compare(dp.H[j] - dp.H[i], dp.fv[i]) > 0) {
                dp.best[j] = dp.best[i] + 1;
                dp.parent[j] = static_cast<int>(i);
            }
        }
    }
    return dp;
}

} // namespace

int oracle_M(const PLFunction& f) {
    auto dp = chain_dp(f, std::nullopt);
    int m = 0;
    for (int b : dp.best) m = std::max(m, b);
    return m;
}

int oracle_M_restricted(const PLFunction& f, const Scalar& limit) {
    auto dp = chain_dp(f, limit);
    int m = 0;
    for (int b : dp.best) m = std::max(m, b);
    return m;
}

ForcedMaxCertificate forced_max_certificate(const PLFunction& f) {
    auto dp = chain_dp(f, std::nullopt);
    int bestj = -1, m = 0;
    for (size_t j = 0; j < dp.best.size(); ++j)
        if (dp.best[j] > m) {
            m = dp.best[j];
            bestj = static_cast<int>(j);
        }
    ForcedMaxCertificate cert;
    std::vector<int> chain;
    for (int j = bestj; j != -1; j = dp.parent[j]) chain.push_back(j);
    std::reverse(chain.begin(), chain.end());
    int prev = -1;
    for (int j : chain) {
        Interval iv;
        iv.hi = dp.grid[static_cast<size_t>(j)];
        if (prev >= 0) iv.lo = dp.grid[static_cast<size_t>(prev)];
        AlgebraicSum left = prev >= 0 ? dp.fv[static_cast<size_t>(prev)] : AlgebraicSum(Scalar(0));
        AlgebraicSum hv = dp.H[static_cast<size_t>(j)] -
                          (prev >= 0 ? dp.H[static_cast<size_t>(prev)] : AlgebraicSum(Scalar(0)));
        cert.intervals.push_back({iv, hv, left});
        prev = j;
    }
    return cert;
}

namespace {

// Rational-valued view of the carrier: exponent 1 as-is, otherwise the powered
// values must land back in Q (e.g. squaring integer values).
PLFunction rational_carrier(const PLFunction& f) {
    if (f.exponent == 1) return f;
    std::vector<Scalar> vs;
    vs.reserve(f.size());
    for (const Scalar& v : f.values) vs.push_back(AlgebraicSum::pow(v, f.exponent).as_rational());
    return PLFunction{f.breakpoints, std::move(vs), f.domain, Scalar(1)};
}

} // namespace

UnimodalDecomposition decompose_line(const PLFunction& f_in) {
    PLFunction f = rational_carrier(f_in);
    UnimodalDecomposition d;
    d.rule = CombinationRule::Sum;
    auto xs = sweep_points(f);
    size_t n = xs.size();
    if (n == 0) return d;

    // cumulative positive/negative variation at breakpoints
    std::vector<Scalar> gc(f.size(), Scalar(0)), hc(f.size(), Scalar(0));
    for (size_t i = 1; i < f.size(); ++i) {
        Scalar diff = f.values[i] - f.values[i - 1];
        gc[i] = gc[i - 1] + (diff > 0 ? diff : Scalar(0));
        hc[i] = hc[i - 1] + (diff < 0 ? Scalar(-diff) : Scalar(0));
    }
    auto interp = [&](const std::vector<Scalar>& c, const Scalar& x) -> Scalar {
        if (x <= f.x_min()) return c.front();
        if (x >= f.x_max()) return c.back();
        auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), x);
        size_t i = static_cast<size_t>(it - f.breakpoints.begin()) - 1;
        Scalar t = (x - f.breakpoints[i]) / (f.breakpoints[i + 1] - f.breakpoints[i]);
        return c[i] + t * (c[i + 1] - c[i]);
    };

    for (size_t i = 0; i < n; ++i) {
        Scalar left = i == 0 ? f.x_min() : xs[i - 1];
        Scalar right = i + 1 == n ? f.x_max() : xs[i + 1];
        Scalar mid = xs[i];
        Scalar g_anchor = interp(gc, left);
        Scalar h_anchor = interp(hc, right);

        std::vector<Scalar> bx, bv;
        auto push = [&](const Scalar& x, const Scalar& v) {
            if (!bx.empty() && bx.back() == x) return;
            bx.push_back(x);
            bv.push_back(v);
        };
        push(left, i == 0 ? Scalar(0) : interp(gc, left) - g_anchor);
        for (size_t k = 0; k < f.size(); ++k)
            if (f.breakpoints[k] > left && f.breakpoints[k] < mid)
                push(f.breakpoints[k], gc[k] - g_anchor);
        push(mid, interp(gc, mid) - g_anchor);
        for (size_t k = 0; k < f.size(); ++k)
            if (f.breakpoints[k] > mid && f.breakpoints[k] < right)
                push(f.breakpoints[k], h_anchor - hc[k]);
        push(right, Scalar(0));

        // trim flat zero tails, keeping one zero breakpoint at each end
        size_t first = 0, last = bx.size() - 1;
        while (first + 1 < bx.size() && bv[first] == 0 && bv[first + 1] == 0) ++first;
        while (last > first + 1 && bv[last] == 0 && bv[last - 1] == 0) --last;
        std::vector<Scalar> tx(bx.begin() + static_cast<long>(first),
                               bx.begin() + static_cast<long>(last) + 1);
        std::vector<Scalar> tv(bv.begin() + static_cast<long>(first),
                               bv.begin() + static_cast<long>(last) + 1);

        PLFunction u = make_pl(std::move(tx), std::move(tv), DomainKind::WholeLine);
        auto ext = local_extrema(u);
        Scalar mlo = mid, mhi = mid;
        for (auto& e : ext)
            if (e.kind == ExtremumKind::Max) {
                mlo = e.position_lo;
                mhi = e.position_hi;
            }
        d.summands.push_back(std::move(u));
        d.mode_points.emplace_back(mlo, mhi);
    }
    return d;
}

int ucat_line(const PLFunction& f, const Scalar& p) {
    if (p <= 0) throw NonpositiveExponent("ucat_line: p must be positive");
    if (f.is_zero()) return 0;
    return sweep_count(power(f, p));
}

IntervalUcat ucat_interval(const PLFunction& f) {
    if (f.domain != DomainKind::ClosedInterval)
        throw OutOfDomain("ucat_interval expects a closed-interval function");
    IntervalUcat out;
    if (f.is_zero()) return out;
    PLFunction hat = extend_hat(f);
    out.n = sweep_count(hat);
    int mr = oracle_M_restricted(hat, Scalar(1));
    bool increasing_raw = (mr == out.n - 1);

    // Flat top at the right end: the carrier's last ascent ends strictly
    // before its final descent begins.
    auto runs = build_runs(hat);
    Scalar ascent_end(-1), descent_start(2);
    for (auto& r : runs) {
        if (r.dir > 0) ascent_end = hat.breakpoints[r.hi];
        if (r.dir < 0) descent_start = hat.breakpoints[r.lo];
    }
    bool flat_top = increasing_raw && ascent_end < descent_start;
    out.last_increasing = increasing_raw && !flat_top;
    out.last_plateau = flat_top;
    return out;
}

UnimodalDecomposition restrict_to_unit_interval(const UnimodalDecomposition& d) {
    UnimodalDecomposition out;
    out.rule = d.rule;
    out.p = d.p;
    const Scalar zero(0), one(1);
    for (size_t i = 0; i < d.summands.size(); ++i) {
        const PLFunction& u = d.summands[i];
        std::vector<Scalar> bx, bv;
        bx.push_back(zero);
        bv.push_back(eval_base(u, zero));
        for (size_t k = 0; k < u.size(); ++k)
            if (u.breakpoints[k] > zero && u.breakpoints[k] < one) {
                bx.push_back(u.breakpoints[k]);
                bv.push_back(u.values[k]);
            }
        bx.push_back(one);
        bv.push_back(eval_base(u, one));
        PLFunction r{std::move(bx), std::move(bv), DomainKind::ClosedInterval, u.exponent};
        Scalar mlo = d.mode_points[i].first, mhi = d.mode_points[i].second;
        mlo = scalar_min(scalar_max(mlo, zero), one);
        mhi = scalar_min(scalar_max(mhi, zero), one);
        out.summands.push_back(std::move(r));
        out.mode_points.emplace_back(mlo, mhi);
    }
    return out;
}

UnimodalDecomposition normalize_last_two(const UnimodalDecomposition& d) {
    size_t n = d.summands.size();
    if (d.mode_points.size() != n) throw NotASweepOutput("mode point bookkeeping is missing");
    if (n < 2) throw PreconditionViolated("normalize_last_two needs at least two summands");
    const PLFunction& up = d.summands[n - 2];
    const PLFunction& ul = d.summands[n - 1];
    if (up.domain != DomainKind::ClosedInterval || up.x_min() != 0 || up.x_max() != 1)
        throw NotASweepOutput("expected summands on [0,1]");

    Scalar c = eval_base(up, Scalar(1));
    if (c == 0) return d;
    Scalar a = d.mode_points[n - 2].first;
    Scalar m = eval_base(up, a);
    if (m <= c) throw NotASweepOutput("u_{n-1} must descend from its maximum to the right end");

    UnimodalDecomposition out = d;
    // u'_{n-1}(x) = m (u_{n-1}(x) - c) / (m - c) on [a, 1]
    PLFunction np = up;
    for (size_t k = 0; k < np.size(); ++k)
        if (np.breakpoints[k] >= a) np.values[k] = m * (up.values[k] - c) / (m - c);
    // u'_n(x) = u_n(x) + c (m - u_{n-1}(x)) / (m - c) on [a, 1]
    std::vector<Scalar> bx;
    for (const Scalar& x : ul.breakpoints) bx.push_back(x);
    for (const Scalar& x : up.breakpoints)
        if (x >= a) bx.push_back(x);
    std::sort(bx.begin(), bx.end());
    bx.erase(std::unique(bx.begin(), bx.end()), bx.end());
    std::vector<Scalar> bv;
    for (const Scalar& x : bx) {
        Scalar v = eval_base(ul, x);
        if (x >= a) v += c * (m - eval_base(up, x)) / (m - c);
        bv.push_back(v);
    }
    PLFunction nl{std::move(bx), std::move(bv), DomainKind::ClosedInterval, ul.exponent};

    auto mode_of = [](const PLFunction& u) -> std::pair<Scalar, Scalar> {
        Scalar best(0);
        for (const Scalar& v : u.values) best = scalar_max(best, v);
        Scalar lo = u.x_max(), hi = u.x_min();
        for (size_t k = 0; k < u.size(); ++k)
            if (u.values[k] == best) {
                lo = scalar_min(lo, u.breakpoints[k]);
                hi = scalar_max(hi, u.breakpoints[k]);
            }
        return {lo, hi};
    };
    out.summands[n - 2] = std::move(np);
    out.summands[n - 1] = std::move(nl);
    out.mode_points[n - 2] = mode_of(out.summands[n - 2]);
    out.mode_points[n - 1] = mode_of(out.summands[n - 1]);
    return out;
}

Scalar decomposition_sum_at(const UnimodalDecomposition& d, const Scalar& x) {
    Scalar s(0);
    for (auto& u : d.summands) s += eval_base(u, x);
    return s;
}

} // namespace ucat
