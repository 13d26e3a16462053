#include "ucat/scans.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ucat/errors.hpp"
#include "ucat/json_io.hpp"

namespace ucat {

PLFunction random_compact_pl(std::mt19937_64& rng, int max_breakpoints) {
    std::uniform_int_distribution<int> nbp(3, max_breakpoints);
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

CirclePL random_positive_circle(std::mt19937_64& rng, int max_knots) {
    std::uniform_int_distribution<int> nk(3, max_knots);
    std::uniform_int_distribution<int> num(1, 9), den(1, 3);
    int n = nk(rng);
    std::vector<Scalar> angles, values;
    for (int i = 0; i < n; ++i) {
        angles.push_back(scalar_from_long(i, n));
        values.push_back(scalar_from_long(num(rng), den(rng)));
    }
    return make_circle(std::move(angles), std::move(values));
}

MorseSmaleTree random_nonresonant_tree(std::mt19937_64& rng, int max_maxima) {
    std::uniform_int_distribution<int> nm(2, max_maxima);
    int m = nm(rng);
    // maxima weights: distinct values above the saddle pool
    std::vector<long> pool;
    for (long k = 0; k < 3 * m; ++k) pool.push_back(2 * m + 2 + k);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Scalar> weights;
    std::vector<VertexId> ids;
    for (int i = 0; i < m; ++i) {
        weights.push_back(Scalar(pool[static_cast<size_t>(i)]));
        ids.push_back("m" + std::to_string(i));
    }
    // random attachment tree, saddles strictly below both endpoints
    std::set<Scalar> used(weights.begin(), weights.end());
    std::vector<std::tuple<size_t, size_t, Scalar>> edges;
    std::uniform_int_distribution<int> denal(2, 9);
    for (int i = 1; i < m; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        size_t j = static_cast<size_t>(parent(rng));
        Scalar cap = scalar_min(weights[static_cast<size_t>(i)], weights[j]);
        Scalar s;
        do {
            std::uniform_int_distribution<int> numer(1, denal(rng) * 2);
            int d = denal(rng);
            s = cap * scalar_from_long(numer(rng), 3 * d);
        } while (s <= 0 || s >= cap || used.count(s));
        used.insert(s);
        edges.emplace_back(static_cast<size_t>(i), j, s);
    }
    return make_tree(std::move(ids), std::move(weights), std::move(edges));
}

UpDownSeq random_updown(std::mt19937_64& rng, int max_drops) {
    std::uniform_int_distribution<int> kk(1, max_drops);
    std::uniform_int_distribution<int> num(1, 8), den(1, 4), margin_pick(0, 3);
    int k = kk(rng);
    Scalar a0 = scalar_from_long(num(rng), den(rng));
    // draw drops first, then scale so their sum is margin * a0 with
    // near-tight cases (margin = 1) appearing often
    std::vector<Scalar> drops;
    Scalar total(0);
    for (int i = 0; i < k; ++i) {
        drops.push_back(scalar_from_long(num(rng), den(rng)));
        total += drops.back();
    }
    Scalar margin = margin_pick(rng) == 0 ? Scalar(1) : scalar_from_long(num(rng), 9);
    Scalar scale = a0 * margin / total;
    for (auto& d : drops) d *= scale;

    std::vector<Scalar> seq;
    seq.push_back(a0);
    Scalar cur = a0;
    for (int i = 0; i < k; ++i) {
        Scalar rise = scalar_from_long(num(rng) - 1, den(rng));
        cur += rise;
        seq.push_back(cur);
        cur -= drops[static_cast<size_t>(i)];
        seq.push_back(cur);
    }
    return make_updown(std::move(seq));
}

namespace {

template <typename F>
ScanReport run_scan(const std::string& kind, int trials, F&& one_trial) {
    if (trials < 1) throw PreconditionViolated("scan needs at least one trial");
    ScanReport rep;
    rep.kind = kind;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::string bad = one_trial();
        if (!bad.empty()) {
            ++rep.violations;
            if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(bad);
        }
    }
    return rep;
}

} // namespace

ScanReport monotonicity_scan_line(int trials, std::vector<Scalar> p_list, uint64_t seed) {
    std::sort(p_list.begin(), p_list.end());
    std::mt19937_64 rng(seed);
    return run_scan("line", trials, [&]() -> std::string {
        PLFunction f = random_compact_pl(rng);
        int prev = -1;
        for (auto& p : p_list) {
            int u = ucat_line(f, p);
            if (prev >= 0 && u < prev) return dump_canonical(to_json(f));
            prev = u;
        }
        return {};
    });
}

ScanReport monotonicity_scan_circle(int trials, std::vector<Scalar> p_list, uint64_t seed) {
    std::sort(p_list.begin(), p_list.end());
    std::mt19937_64 rng(seed);
    return run_scan("circle", trials, [&]() -> std::string {
        CirclePL f = random_positive_circle(rng, 8);
        int prev = -1;
        for (auto& p : p_list) {
            int u = ucat_circle(f, p);
            if (prev >= 0 && u < prev) return dump_canonical(to_json(f));
            prev = u;
        }
        return {};
    });
}

ScanReport tree_monotonicity_scan(int trials, std::vector<long> p_list, uint64_t seed) {
    std::sort(p_list.begin(), p_list.end());
    std::mt19937_64 rng(seed);
    return run_scan("tree", trials, [&]() -> std::string {
        MorseSmaleTree t = random_nonresonant_tree(rng);
        int prev = -1;
        for (long p : p_list) {
            int c = min_tree_cover(tree_power(t, p)).n;
            if (prev >= 0 && c < prev) {
                std::ostringstream os;
                os << "tree with " << t.maxima.size() << " maxima, cover(" << p << ")=" << c
                   << " < previous " << prev;
                return os.str();
            }
            prev = c;
        }
        return {};
    });
}

ScanReport updown_scan(int trials, std::vector<Scalar> q_list, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return run_scan("updown", trials, [&]() -> std::string {
        UpDownSeq a = random_updown(rng);
        for (auto& q : q_list) {
            if (!lemma_updown_check(a, q)) {
                std::ostringstream os;
                os << "sequence";
                for (auto& e : a.entries) os << " " << format_scalar(e);
                os << " violates at q=" << format_scalar(q);
                return os.str();
            }
        }
        return {};
    });
}

ScanReport oracle_scan(int trials, uint64_t seed, int max_breakpoints) {
    std::mt19937_64 rng(seed);
    return run_scan("oracle", trials, [&]() -> std::string {
        PLFunction f = random_compact_pl(rng, max_breakpoints);
        if (sweep_count(f) != oracle_M(f)) return dump_canonical(to_json(f));
        return {};
    });
}

} // namespace ucat
