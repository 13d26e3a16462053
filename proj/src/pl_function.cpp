#include "ucat/pl_function.hpp"

#include <algorithm>

#include "ucat/errors.hpp"

namespace ucat {

bool PLFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Scalar& v) { return v == 0; });
}

Scalar PLFunction::max_base_value() const {
    Scalar m = values.front();
    for (const Scalar& v : values) m = scalar_max(m, v);
    return m;
}

PLFunction make_pl(std::vector<Scalar> breakpoints, std::vector<Scalar> values, DomainKind domain,
                   Scalar exponent) {
    if (breakpoints.empty() || breakpoints.size() != values.size())
        throw NonMonotoneBreakpoints("breakpoint/value lists must have equal nonzero length");
    for (size_t i = 1; i < breakpoints.size(); ++i)
        if (breakpoints[i - 1] >= breakpoints[i])
            throw NonMonotoneBreakpoints("breakpoints must be strictly increasing");
    for (const Scalar& v : values)
        if (v < 0) throw NegativeValue("function values must be nonnegative");
    if (domain == DomainKind::WholeLine) {
        if (breakpoints.size() < 2 || values.front() != 0 || values.back() != 0)
            throw SupportViolation("whole-line functions must vanish at both end breakpoints");
    }
    if (exponent <= 0) throw NonpositiveExponent("value exponent must be positive");
    return PLFunction{std::move(breakpoints), std::move(values), domain, std::move(exponent)};
}

namespace {

// Index of the segment containing x: largest i with breakpoints[i] <= x.
size_t segment_index(const PLFunction& f, const Scalar& x) {
    auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), x);
    return static_cast<size_t>(it - f.breakpoints.begin()) - 1;
}

} // namespace

Scalar eval_base(const PLFunction& f, const Scalar& x) {
    if (x < f.x_min() || x > f.x_max()) {
        if (f.domain == DomainKind::WholeLine) return Scalar(0);
        throw OutOfDomain("evaluation outside the closed interval domain");
    }
    if (x == f.x_max()) return f.values.back();
    size_t i = segment_index(f, x);
    const Scalar &x0 = f.breakpoints[i], &x1 = f.breakpoints[i + 1];
    const Scalar &v0 = f.values[i], &v1 = f.values[i + 1];
    Scalar t = (x - x0) / (x1 - x0);
    return v0 + t * (v1 - v0);
}

AlgebraicSum eval(const PLFunction& f, const Scalar& x) {
    if (f.exponent == 1) return AlgebraicSum(eval_base(f, x));
    if (x < f.x_min() || x > f.x_max()) {
        if (f.domain == DomainKind::WholeLine) return AlgebraicSum(Scalar(0));
        throw OutOfDomain("evaluation outside the closed interval domain");
    }
    if (x == f.x_max()) return AlgebraicSum::pow(f.values.back(), f.exponent);
    size_t i = segment_index(f, x);
    const Scalar &x0 = f.breakpoints[i], &x1 = f.breakpoints[i + 1];
    Scalar t = (x - x0) / (x1 - x0);
    AlgebraicSum a = AlgebraicSum::pow(f.values[i], f.exponent);
    AlgebraicSum b = AlgebraicSum::pow(f.values[i + 1], f.exponent);
    a.scale(1 - t);
    b.scale(t);
    return a + b;
}

AlgebraicSum variation(const PLFunction& f, VariationKind kind, const Interval& J) {
    if (J.empty()) throw EmptyInterval("variation over an empty interval");

    // Clip to the support/domain; outside it the function is constant.
    Scalar a = J.lo ? scalar_max(*J.lo, f.x_min()) : f.x_min();
    Scalar b = J.hi ? scalar_min(*J.hi, f.x_max()) : f.x_max();
    if (f.domain == DomainKind::ClosedInterval) {
        if ((J.lo && *J.lo > f.x_max()) || (J.hi && *J.hi < f.x_min()))
            throw OutOfDomain("interval does not intersect the domain");
    }
    if (a >= b) return AlgebraicSum(Scalar(0));

    auto powered = [&](const Scalar& base) { return AlgebraicSum::pow(base, f.exponent); };

    AlgebraicSum up(Scalar(0)), down(Scalar(0));
    Scalar prev_base = eval_base(f, a);
    auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), a);
    for (; it != f.breakpoints.end() && *it < b; ++it) {
        const Scalar& v = f.values[static_cast<size_t>(it - f.breakpoints.begin())];
        if (v > prev_base)
            up += powered(v) - powered(prev_base);
        else if (v < prev_base)
            down += powered(prev_base) - powered(v);
        prev_base = v;
    }
    Scalar last = eval_base(f, b);
    if (last > prev_base)
        up += powered(last) - powered(prev_base);
    else if (last < prev_base)
        down += powered(prev_base) - powered(last);

    switch (kind) {
        case VariationKind::Positive: return up;
        case VariationKind::Negative: return down;
        case VariationKind::Total: return up + down;
    }
    return AlgebraicSum(Scalar(0));
}

PLFunction power(const PLFunction& f, const Scalar& p) {
    if (p <= 0) throw NonpositiveExponent("power: exponent must be positive");
    PLFunction g = f;
    g.exponent = f.exponent * p;
    return g;
}

PLFunction extend_hat(const PLFunction& f) {
    if (f.domain != DomainKind::ClosedInterval)
        throw OutOfDomain("extend_hat expects a closed-interval function");

    const Scalar lo = f.x_min(), span = f.x_max() - f.x_min();
    std::vector<Scalar> xs, vs;
    xs.reserve(f.size() + 2);
    vs.reserve(f.size() + 2);
    xs.push_back(Scalar(-1));
    vs.push_back(Scalar(0));
    if (span == 0) {
        // One-point domain: treat it as the constant function on [0,1].
        xs.push_back(Scalar(0));
        vs.push_back(f.values.front());
        xs.push_back(Scalar(1));
        vs.push_back(f.values.front());
    } else {
        for (size_t i = 0; i < f.size(); ++i) {
            xs.push_back((f.breakpoints[i] - lo) / span);
            vs.push_back(f.values[i]);
        }
    }
    xs.push_back(Scalar(2));
    vs.push_back(Scalar(0));
    return PLFunction{std::move(xs), std::move(vs), DomainKind::WholeLine, f.exponent};
}

std::vector<Extremum> local_extrema(const PLFunction& f) {
    // Merge plateaus: runs of equal consecutive base values.
    struct Run {
        Scalar lo, hi, value;
    };
    std::vector<Run> runs;
    for (size_t i = 0; i < f.size(); ++i) {
        if (!runs.empty() && runs.back().value == f.values[i])
            runs.back().hi = f.breakpoints[i];
        else
            runs.push_back({f.breakpoints[i], f.breakpoints[i], f.values[i]});
    }

    const bool line = f.domain == DomainKind::WholeLine;
    std::vector<Extremum> out;
    for (size_t i = 0; i < runs.size(); ++i) {
        bool has_left = i > 0, has_right = i + 1 < runs.size();
        // On the whole line the zero tails flank the support.
        Scalar left = has_left ? runs[i - 1].value : Scalar(0);
        Scalar right = has_right ? runs[i + 1].value : Scalar(0);
        bool lower_left = has_left ? left < runs[i].value : (line ? Scalar(0) < runs[i].value : true);
        bool lower_right =
            has_right ? right < runs[i].value : (line ? Scalar(0) < runs[i].value : true);
        bool higher_left = has_left ? left > runs[i].value : (line ? false : true);
        bool higher_right = has_right ? right > runs[i].value : (line ? false : true);
        if (lower_left && lower_right)
            out.push_back({runs[i].lo, runs[i].hi, runs[i].value, ExtremumKind::Max});
        else if (higher_left && higher_right)
            out.push_back({runs[i].lo, runs[i].hi, runs[i].value, ExtremumKind::Min});
        else if (line && !has_left && !has_right && runs[i].value > 0)
            out.push_back({runs[i].lo, runs[i].hi, runs[i].value, ExtremumKind::Max});
    }
    return out;
}

bool is_unimodal(const PLFunction& f) {
    if (f.is_zero()) return false;
    auto ext = local_extrema(f);
    size_t maxima = 0, interior_minima = 0;
    for (auto& e : ext) {
        if (e.kind == ExtremumKind::Max) ++maxima;
        if (e.kind == ExtremumKind::Min && e.position_lo != f.x_min() && e.position_hi != f.x_max())
            ++interior_minima;
    }
    return maxima == 1 && interior_minima == 0;
}

} // namespace ucat
