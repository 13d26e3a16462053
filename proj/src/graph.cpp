#include "ucat/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns false if already joined
    bool join(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

size_t GeometricGraph::at(const VertexId& id) const {
    auto it = index.find(id);
    if (it == index.end()) throw GraphMismatch("unknown vertex id: " + id);
    return it->second;
}

GeometricGraph make_graph(std::vector<VertexId> vertices,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::map<VertexId, std::pair<Scalar, Scalar>> coords) {
    GeometricGraph g;
    g.vertices = std::move(vertices);
    g.coords = std::move(coords);
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (!g.index.emplace(g.vertices[i], i).second)
            throw GraphMismatch("duplicate vertex id: " + g.vertices[i]);
    }
    std::set<std::pair<size_t, size_t>> seen;
    for (auto& [a, b] : edges) {
        size_t u = g.at(a), v = g.at(b);
        if (u == v) throw GraphMismatch("self-loop at " + a);
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw GraphMismatch("duplicate edge " + a + "-" + b);
        g.edges.emplace_back(key.first, key.second);
    }
    return g;
}

GraphPL make_graph_pl(GeometricGraph g, const std::map<VertexId, Scalar>& values,
                      Scalar exponent) {
    GraphPL gf;
    gf.values.assign(g.vertices.size(), Scalar(0));
    for (auto& [id, v] : values) {
        if (v < 0) throw NegativeValue("graph values must be nonnegative");
        gf.values[g.at(id)] = v;
    }
    if (exponent <= 0) throw NonpositiveExponent("value exponent must be positive");
    gf.graph = std::move(g);
    gf.exponent = std::move(exponent);
    return gf;
}

SubLevelGraph superlevel(const GraphPL& gf, const Scalar& c) {
    if (c <= 0) throw EmptyInterval("superlevel requires a positive level");
    SubLevelGraph out;
    const auto& G = gf.graph;
    std::vector<char> in(G.vertices.size(), 0);
    for (size_t i = 0; i < G.vertices.size(); ++i)
        if (gf.values[i] >= c) {
            in[i] = 1;
            out.vertices.push_back(i);
        }
    for (size_t e = 0; e < G.edges.size(); ++e) {
        auto [u, v] = G.edges[e];
        const Scalar &fu = gf.values[u], &fv = gf.values[v];
        if (in[u] && in[v]) {
            out.arcs.push_back({e, Scalar(0), Scalar(1)});
        } else if (in[u] && fu > fv) {
            Scalar t = (fu - c) / (fu - fv);
            out.arcs.push_back({e, Scalar(0), t});
        } else if (in[v] && fv > fu) {
            Scalar t = (fv - c) / (fv - fu);
            out.arcs.push_back({e, 1 - t, Scalar(1)});
        }
    }

    // Components and cycles of the retained subspace: partial arcs dangle off
    // retained vertices, so the induced subgraph on retained vertices decides
    // both. (For linear edges an arc always touches a retained endpoint.)
    UnionFind uf(G.vertices.size());
    size_t extra_edges = 0;
    for (auto& arc : out.arcs) {
        if (arc.t0 == 0 && arc.t1 == 1) {
            auto [u, v] = G.edges[arc.edge];
            if (!uf.join(u, v)) ++extra_edges; // edge closing a cycle
        }
    }
    std::set<size_t> roots;
    for (size_t i : out.vertices) roots.insert(uf.find(i));
    out.components = static_cast<int>(roots.size());
    out.acyclic = extra_edges == 0;
    out.nonempty = !out.vertices.empty();
    return out;
}

bool is_unimodal_graph(const GraphPL& gf, UnimodalMode mode) {
    Scalar maxv(0);
    for (const Scalar& v : gf.values) maxv = scalar_max(maxv, v);
    if (maxv == 0) return false;

    std::vector<Scalar> distinct = gf.values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Scalar> levels;
    for (size_t i = 0; i < distinct.size(); ++i) {
        if (distinct[i] > 0) levels.push_back(distinct[i]);
        if (i + 1 < distinct.size()) {
            Scalar mid = (distinct[i] + distinct[i + 1]) / 2;
            if (mid > 0) levels.push_back(mid);
        }
    }
    for (const Scalar& c : levels) {
        auto s = superlevel(gf, c);
        if (!s.nonempty || s.components != 1) return false;
        if (mode == UnimodalMode::Contractible && !s.acyclic) return false;
    }
    return true;
}

namespace {

bool same_graph(const GeometricGraph& a, const GeometricGraph& b) {
    if (a.vertices != b.vertices) return false;
    std::set<std::pair<size_t, size_t>> ea(a.edges.begin(), a.edges.end()),
        eb(b.edges.begin(), b.edges.end());
    return ea == eb;
}

AlgebraicSum vertex_value(const GraphPL& g, size_t i, const Scalar& extra_power) {
    return AlgebraicSum::pow(g.values[i], g.exponent * extra_power);
}

} // namespace

bool verify_combination(const std::vector<GraphPL>& summands, CombinationRule rule,
                        const GraphPL& target, const Scalar& p) {
    for (auto& s : summands)
        if (!same_graph(s.graph, target.graph))
            throw GraphMismatch("summands must live on the target's graph");

    size_t n = target.graph.vertices.size();
    switch (rule) {
        case CombinationRule::Sum: {
            // vertex equality in value space suffices: sums of linear are linear
            for (size_t i = 0; i < n; ++i) {
                AlgebraicSum sum(Scalar(0));
                for (auto& s : summands) sum += vertex_value(s, i, Scalar(1));
                if (compare(sum, vertex_value(target, i, Scalar(1))) != 0) return false;
            }
            return true;
        }
        case CombinationRule::PPower: {
            // f = (sum u_i^p)^(1/p): compare p-th powers at vertices
            for (size_t i = 0; i < n; ++i) {
                AlgebraicSum sum(Scalar(0));
                for (auto& s : summands) sum += vertex_value(s, i, p);
                if (compare(sum, vertex_value(target, i, p)) != 0) return false;
            }
            return true;
        }
        case CombinationRule::Max: {
            // per edge: every summand <= target at both ends, some summand
            // equal at both ends
            for (auto& s : summands)
                for (size_t i = 0; i < n; ++i)
                    if (compare(vertex_value(s, i, Scalar(1)), vertex_value(target, i, Scalar(1))) >
                        0)
                        return false;
            for (auto [u, v] : target.graph.edges) {
                bool attained = false;
                for (auto& s : summands) {
                    if (compare(vertex_value(s, u, Scalar(1)), vertex_value(target, u, Scalar(1))) ==
                            0 &&
                        compare(vertex_value(s, v, Scalar(1)), vertex_value(target, v, Scalar(1))) ==
                            0) {
                        attained = true;
                        break;
                    }
                }
                if (!attained) return false;
            }
            // isolated vertices still need attainment
            std::vector<char> touched(n, 0);
            for (auto [u, v] : target.graph.edges) touched[u] = touched[v] = 1;
            for (size_t i = 0; i < n; ++i) {
                if (touched[i]) continue;
                bool attained = false;
                for (auto& s : summands)
                    if (compare(vertex_value(s, i, Scalar(1)), vertex_value(target, i, Scalar(1))) ==
                        0)
                        attained = true;
                if (!attained) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

// max-bottleneck connectivity: process edges by decreasing weight until s and
// t meet; the weight that merges them is the path value.
Scalar widest_path(const std::vector<std::tuple<Scalar, size_t, size_t>>& weighted_edges, size_t s,
                   size_t t, size_t node_count) {
    if (s == t) throw NoPath("widest_path expects distinct nodes");
    std::vector<std::tuple<Scalar, size_t, size_t>> es = weighted_edges;
    std::sort(es.begin(), es.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
    UnionFind uf(node_count);
    for (auto& [w, u, v] : es) {
        uf.join(u, v);
        if (uf.find(s) == uf.find(t)) return w;
    }
    throw NoPath("no path between the given points");
}

} // namespace

Scalar path_value(const GraphPL& gf, const GraphPoint& s, const GraphPoint& t) {
    const auto& G = gf.graph;
    size_t n = G.vertices.size();
    std::vector<std::tuple<Scalar, size_t, size_t>> es;
    for (auto [u, v] : G.edges)
        es.emplace_back(scalar_min(gf.values[u], gf.values[v]), u, v);

    auto attach = [&](const GraphPoint& p, size_t node) -> Scalar {
        if (p.vertex) return gf.values[G.at(*p.vertex)];
        if (p.edge >= G.edges.size()) throw GraphMismatch("edge index out of range");
        if (p.t <= 0 || p.t >= 1) throw GraphMismatch("interior point parameter must be in (0,1)");
        auto [u, v] = G.edges[p.edge];
        Scalar w = gf.values[u] + p.t * (gf.values[v] - gf.values[u]);
        es.emplace_back(scalar_min(w, gf.values[u]), node, u);
        es.emplace_back(scalar_min(w, gf.values[v]), node, v);
        return w;
    };

    size_t sn = s.vertex ? G.at(*s.vertex) : n;
    size_t tn = t.vertex ? G.at(*t.vertex) : (s.vertex ? n : n + 1);
    size_t total = n + (s.vertex ? 0 : 1) + (t.vertex ? 0 : 1);
    Scalar vs = attach(s, sn), vt = attach(t, tn);
    if (!s.vertex && !t.vertex && s.edge == t.edge) {
        // both interior on one edge: the direct sub-segment
        es.emplace_back(scalar_min(vs, vt), sn, tn);
    }
    if (sn == tn) return vs; // same vertex: the constant path
    return widest_path(es, sn, tn, total);
}

namespace {

// pv from a fixed source to every vertex (max-bottleneck tree sweep).
std::vector<Scalar> pv_from(const GraphPL& gf, size_t src) {
    const auto& G = gf.graph;
    size_t n = G.vertices.size();
    std::vector<std::tuple<Scalar, size_t, size_t>> es;
    for (auto [u, v] : G.edges)
        es.emplace_back(scalar_min(gf.values[u], gf.values[v]), u, v);
    std::sort(es.begin(), es.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });

    std::vector<Scalar> pv(n, Scalar(-1)); // -1 = unreachable
    pv[src] = gf.values[src];
    UnionFind uf(n);
    // Kruskal-style: when components merge at weight w, every newly reachable
    // vertex gets pv = min(current bottleneck chain) = w if src side involved.
    // Simpler exact approach: binary-search-free repeated joins with weights in
    // decreasing order, recording the first weight at which each vertex joins
    // the source component.
    std::vector<std::vector<size_t>> members(n);
    for (size_t i = 0; i < n; ++i) members[i] = {i};
    for (auto& [w, u, v] : es) {
        size_t ru = uf.find(u), rv = uf.find(v);
        if (ru == rv) continue;
        size_t rs = uf.find(src);
        uf.join(ru, rv);
        size_t rn = uf.find(ru);
        if (ru == rs || rv == rs) {
            size_t other = (ru == rs) ? rv : ru;
            for (size_t m : members[other]) pv[m] = w;
        }
        auto& a = members[ru];
        auto& b = members[rv];
        std::vector<size_t> merged;
        merged.reserve(a.size() + b.size());
        merged.insert(merged.end(), a.begin(), a.end());
        merged.insert(merged.end(), b.begin(), b.end());
        members[rn] = std::move(merged);
    }
    return pv;
}

} // namespace

LowerBoundReport lower_bound_check(const GraphPL& gf, const std::vector<VertexId>& points) {
    if (points.empty()) throw PreconditionViolated("lower_bound_check needs at least one point");
    const auto& G = gf.graph;
    size_t n = G.vertices.size();
    std::vector<std::vector<Scalar>> pv;
    for (auto& id : points) pv.push_back(pv_from(gf, G.at(id)));

    LowerBoundReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (rep.violation.empty()) rep.violation = what;
    };

    for (size_t i = 0; i < n; ++i) {
        Scalar sum(0);
        for (auto& p : pv) sum += scalar_max(p[i], Scalar(0));
        if (sum < gf.values[i]) fail("vertex " + G.vertices[i]);
    }
    // Along an edge each pv profile is min(f(x), max(pv_u, pv_v)): check at
    // the crossing parameters of every profile.
    for (size_t e = 0; e < G.edges.size(); ++e) {
        auto [u, v] = G.edges[e];
        const Scalar &fu = gf.values[u], &fv = gf.values[v];
        std::vector<Scalar> ts;
        for (auto& p : pv) {
            Scalar cap = scalar_max(scalar_max(p[u], p[v]), Scalar(0));
            // f(t) = fu + t (fv - fu) crosses cap when fu != fv
            if (fu != fv) {
                Scalar t = (cap - fu) / (fv - fu);
                if (t > 0 && t < 1) ts.push_back(t);
            }
        }
        for (const Scalar& t : ts) {
            Scalar fx = fu + t * (fv - fu);
            Scalar sum(0);
            for (auto& p : pv) {
                Scalar cap = scalar_max(scalar_max(p[u], p[v]), Scalar(0));
                sum += scalar_min(fx, cap);
            }
            if (sum < fx) {
                std::ostringstream os;
                os << "edge " << G.vertices[u] << "-" << G.vertices[v] << " at t="
                   << format_scalar(t);
                fail(os.str());
            }
        }
    }
    return rep;
}

MorseSmaleTree make_tree(std::vector<VertexId> maxima, std::vector<Scalar> weights,
                         std::vector<std::tuple<size_t, size_t, Scalar>> edges) {
    if (maxima.size() != weights.size() || maxima.empty())
        throw NotATree("maxima and weights must align");
    if (edges.size() + 1 != maxima.size()) throw NotATree("a tree has |V|-1 edges");
    UnionFind uf(maxima.size());
    for (auto& [i, j, w] : edges) {
        if (i >= maxima.size() || j >= maxima.size() || i == j) throw NotATree("bad edge");
        if (w >= weights[i] || w >= weights[j])
            throw NotATree("saddle weight must be below both endpoint maxima");
        if (!uf.join(i, j)) throw NotATree("cycle detected");
    }
    return MorseSmaleTree{std::move(maxima), std::move(weights), std::move(edges)};
}

Scalar tree_path_value(const MorseSmaleTree& t, size_t i, size_t j) {
    if (i == j) return t.weights[i];
    // BFS over the unique path, tracking the min saddle
    size_t n = t.maxima.size();
    std::vector<std::vector<std::pair<size_t, Scalar>>> adj(n);
    for (auto& [a, b, w] : t.edges) {
        adj[a].emplace_back(b, w);
        adj[b].emplace_back(a, w);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::pair<size_t, Scalar>> stack{{i, Scalar(-1)}};
    std::vector<Scalar> best(n, Scalar(-1));
    seen[i] = 1;
    while (!stack.empty()) {
        auto [cur, bottleneck] = stack.back();
        stack.pop_back();
        for (auto& [nxt, w] : adj[cur]) {
            if (seen[nxt]) continue;
            seen[nxt] = 1;
            Scalar nb = (bottleneck < 0) ? w : scalar_min(bottleneck, w);
            best[nxt] = nb;
            stack.emplace_back(nxt, nb);
        }
    }
    if (best[j] < 0) throw NoPath("tree is disconnected");
    return best[j];
}

namespace {

std::vector<std::vector<Scalar>> tree_pv_matrix(const MorseSmaleTree& t) {
    size_t n = t.maxima.size();
    std::vector<std::vector<Scalar>> pv(n);
    for (size_t i = 0; i < n; ++i) {
        pv[i].resize(n);
        for (size_t j = 0; j < n; ++j) pv[i][j] = tree_path_value(t, i, j);
    }
    return pv;
}

bool criterion_with(const MorseSmaleTree& t, const std::vector<std::vector<Scalar>>& pv,
                    const std::vector<size_t>& points) {
    std::set<size_t> chosen(points.begin(), points.end());
    for (size_t m = 0; m < t.maxima.size(); ++m) {
        if (chosen.count(m)) continue;
        Scalar sum(0);
        for (size_t x : points) sum += pv[x][m];
        if (sum <= t.weights[m]) return false;
    }
    return true;
}

bool search_points(const MorseSmaleTree& t, const std::vector<std::vector<Scalar>>& pv, size_t n,
                   size_t start, bool allow_repeats, std::vector<size_t>& cur,
                   std::vector<size_t>& witness) {
    if (cur.size() == n) {
        if (criterion_with(t, pv, cur)) {
            witness = cur;
            return true;
        }
        return false;
    }
    for (size_t i = start; i < t.maxima.size(); ++i) {
        cur.push_back(i);
        if (search_points(t, pv, n, allow_repeats ? i : i + 1, allow_repeats, cur, witness))
            return true;
        cur.pop_back();
    }
    return false;
}

} // namespace

bool tree_criterion(const MorseSmaleTree& t, const std::vector<size_t>& points) {
    for (size_t x : points)
        if (x >= t.maxima.size()) throw NotATree("point index out of range");
    return criterion_with(t, tree_pv_matrix(t), points);
}

TreeCover min_tree_cover(const MorseSmaleTree& t) {
    size_t m = t.maxima.size();
    if (m > 20) throw TooLarge("min_tree_cover is exhaustive; at most 20 maxima supported");
    auto pv = tree_pv_matrix(t);
    for (size_t n = 1; n <= m; ++n) {
        std::vector<size_t> cur, witness;
        if (search_points(t, pv, n, 0, false, cur, witness))
            return {static_cast<int>(n), std::move(witness)};
        cur.clear();
        // repeats allowed ("not necessarily distinct"); covers multisets too
        if (search_points(t, pv, n, 0, true, cur, witness))
            return {static_cast<int>(n), std::move(witness)};
    }
    // the full maxima set is vacuously true, so we never get here
    std::vector<size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    return {static_cast<int>(m), std::move(all)};
}

MorseSmaleTree tree_power(const MorseSmaleTree& t, long p) {
    if (p <= 0) throw NonpositiveExponent("tree_power: p must be positive");
    MorseSmaleTree out = t;
    for (auto& w : out.weights) w = pow_int(w, p);
    for (auto& [i, j, w] : out.edges) w = pow_int(w, p);
    return out;
}

} // namespace ucat
