#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ucat/algebraic.hpp"
#include "ucat/scalar.hpp"
#include "ucat/sweep.hpp"

namespace ucat {

struct Point2 {
    Scalar x, y;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return a.y < b.y;
    }
};

// sign of the cross product (b-a) x (c-a)
int orientation(const Point2& a, const Point2& b, const Point2& c);

// Polygonal complex with an internal triangulation. Faces are simple polygons
// with matching edges; non-convex faces are ear-clipped.
struct PlaneComplex {
    std::vector<Point2> vertices;
    std::vector<std::vector<size_t>> faces;
    std::vector<std::array<size_t, 3>> triangles; // CCW
    std::vector<size_t> triangle_face;

    size_t edge_count() const; // distinct undirected face-boundary edges
};

// Incremental builder used to assemble the committed datasets: diagonal
// splits, rectangle-with-center-fan refinements, and T-junction repair.
struct PlaneBuilder {
    std::vector<Point2> verts;
    std::vector<std::vector<size_t>> faces;

    size_t vertex(const Point2& p);
    void add_face(const std::vector<Point2>& poly);
    // splits the unique face having both a and b as non-adjacent corners
    void split_face_diagonal(const Point2& a, const Point2& b);
    // refines every face meeting the rectangle: the parts outside the
    // rectangle plus the four center-fan triangles clipped to the face
    void refine_rect_fan(const Point2& lo, const Point2& hi);
    // inserts vertices lying on other faces' edges (T-junction repair)
    void insert_collinear_vertices();
};

struct PlanePL {
    std::shared_ptr<const PlaneComplex> complex;
    std::vector<Scalar> values; // base values per vertex
    Scalar exponent{1};
};

PlanePL make_plane_pl(std::vector<Point2> vertices, std::vector<std::vector<size_t>> faces,
                      std::vector<Scalar> values, Scalar exponent = Scalar(1));

PlanePL plane_from_complex(std::shared_ptr<const PlaneComplex> complex, std::vector<Scalar> values,
                           Scalar exponent = Scalar(1));

struct RegionStats {
    Scalar level{0};
    int components = 0;
    long euler = 0;
    bool nonempty = false;
    Scalar area{0}; // area of the 2-dimensional part
    long cells_v = 0, cells_e = 0, cells_f = 0;
    long holes() const { return nonempty ? components - euler : 0; }
};

// Exact clipped complex of {f >= c} at a base-space level c > 0: component
// count via union-find, Euler characteristic V - E + F including degenerate
// vertex/edge cells.
RegionStats superlevel_stats(const PlanePL& f, const Scalar& c);

bool is_unimodal_plane(const PlanePL& f, UnimodalMode mode = UnimodalMode::Contractible);

// Exact evaluation. Base-space value, or nullopt outside the support closure.
std::optional<Scalar> plane_eval_base(const PlanePL& f, const Point2& p);
// Value-space evaluation of the powered carrier (0 outside the support).
AlgebraicSum plane_eval(const PlanePL& f, const Point2& p);

struct ProbeValue {
    Scalar base;
    Scalar exponent;
};

// Exact probe; OutOfSupport outside the support closure.
ProbeValue point_probe(const PlanePL& f, const Point2& p);

// Sum/PPower: equality at every overlay vertex (complex vertices plus
// pairwise edge intersections), exact. Max: the complexes must coincide;
// per-triangle dominance plus attainment at all three corners.
bool verify_combination_plane(const std::vector<PlanePL>& summands, CombinationRule rule,
                              const PlanePL& target, const Scalar& p = Scalar(1));

} // namespace ucat
