#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucat/algebraic.hpp"
#include "ucat/scalar.hpp"
#include "ucat/sweep.hpp"

namespace ucat {

using VertexId = std::string;

struct GeometricGraph {
    std::vector<VertexId> vertices;
    std::vector<std::pair<size_t, size_t>> edges; // indices into vertices, u < v
    std::map<VertexId, std::pair<Scalar, Scalar>> coords; // optional 2-D embedding
    std::map<VertexId, size_t> index;

    size_t at(const VertexId& id) const;
};

GeometricGraph make_graph(std::vector<VertexId> vertices,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::map<VertexId, std::pair<Scalar, Scalar>> coords = {});

// PL function on a geometric graph: values at vertices, linear along edges
// (unit parameterization). exponent works as for PLFunction: the carrier
// interpolates powered values, so base-space comparisons decide topology.
struct GraphPL {
    GeometricGraph graph;
    std::vector<Scalar> values; // base values per vertex
    Scalar exponent{1};

    const Scalar& value_of(const VertexId& id) const { return values[graph.at(id)]; }
};

GraphPL make_graph_pl(GeometricGraph g, const std::map<VertexId, Scalar>& values,
                      Scalar exponent = Scalar(1));

// Retained sub-segment of an edge: {t : f_edge(t) >= c} (at most one arc per
// edge for linear interpolation; the representation allows a list).
struct EdgeArc {
    size_t edge;
    Scalar t0, t1;
};

struct SubLevelGraph {
    std::vector<size_t> vertices;      // retained vertex indices
    std::vector<EdgeArc> arcs;         // retained (partial or full) edges
    int components = 0;
    bool acyclic = true;
    bool nonempty = false;
};

// Superlevel set {f >= c} at a base-space level c > 0.
SubLevelGraph superlevel(const GraphPL& gf, const Scalar& c);

bool is_unimodal_graph(const GraphPL& gf, UnimodalMode mode = UnimodalMode::Contractible);

// Combination identity on a shared graph: Sum/PPower check vertex sums in the
// appropriate space; Max checks per-edge dominance plus attainment at both
// endpoints (exact for linear edges).
bool verify_combination(const std::vector<GraphPL>& summands, CombinationRule rule,
                        const GraphPL& target, const Scalar& p = Scalar(1));

// A point of the geometric realization: a vertex or an interior edge point.
struct GraphPoint {
    std::optional<VertexId> vertex;
    size_t edge = 0;
    Scalar t{0}; // parameter in (0,1) when interior

    static GraphPoint at_vertex(VertexId v) { return {std::move(v), 0, Scalar(0)}; }
    static GraphPoint on_edge(size_t e, Scalar t) { return {std::nullopt, e, std::move(t)}; }
};

// Widest-path (maximin) value between two points, in base space.
Scalar path_value(const GraphPL& gf, const GraphPoint& s, const GraphPoint& t);

struct LowerBoundReport {
    bool ok = true;
    std::string violation; // description of the first violating point
};

// Checks sum_i pv(x_i, x) >= f(x) everywhere (decided at vertices and at the
// interior breakpoint of each pv profile along each edge).
LowerBoundReport lower_bound_check(const GraphPL& gf, const std::vector<VertexId>& points);

struct MorseSmaleTree {
    std::vector<VertexId> maxima;
    std::vector<Scalar> weights;                          // f at each maximum
    std::vector<std::tuple<size_t, size_t, Scalar>> edges; // (i, j, saddle weight)
};

MorseSmaleTree make_tree(std::vector<VertexId> maxima, std::vector<Scalar> weights,
                         std::vector<std::tuple<size_t, size_t, Scalar>> edges);

// Bottleneck path value on the tree: min saddle weight along the unique path,
// or the maximum's own weight when i == j.
Scalar tree_path_value(const MorseSmaleTree& t, size_t i, size_t j);

// Strict criterion of the decomposition theorem: for every maximum x not among
// the chosen points, sum_i pv(x_i, x) > f(x).
bool tree_criterion(const MorseSmaleTree& t, const std::vector<size_t>& points);

struct TreeCover {
    int n = 0;
    std::vector<size_t> points;
};

// Smallest multiset of maxima satisfying tree_criterion; subsets are searched
// first, then bounded multisets with repeats.
TreeCover min_tree_cover(const MorseSmaleTree& t);

// All weights raised to the integer power p (exact).
MorseSmaleTree tree_power(const MorseSmaleTree& t, long p);

} // namespace ucat
