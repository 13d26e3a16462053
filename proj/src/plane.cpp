#include "ucat/plane.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ucat/errors.hpp"

namespace ucat {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

namespace {

Scalar polygon_area2(const std::vector<Point2>& poly) {
    Scalar s(0);
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

bool point_in_closed_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
    int o1 = orientation(a, b, p), o2 = orientation(b, c, p), o3 = orientation(c, a, p);
    return o1 >= 0 && o2 >= 0 && o3 >= 0; // triangle CCW
}

// Ear clipping for simple polygons; collinear vertices are kept as triangle
// corners so T-junction points survive into the triangulation.
std::vector<std::array<size_t, 3>> ear_clip(const std::vector<Point2>& pts,
                                            std::vector<size_t> poly) {
    std::vector<std::array<size_t, 3>> tris;
    if (poly.size() < 3) throw BadTiling("face with fewer than three vertices");

    // ensure CCW
    std::vector<Point2> ring;
    for (size_t i : poly) ring.push_back(pts[i]);
    if (sgn(polygon_area2(ring)) < 0) std::reverse(poly.begin(), poly.end());

    while (poly.size() > 3) {
        bool clipped = false;
        for (size_t i = 0; i < poly.size(); ++i) {
            size_t ip = (i + poly.size() - 1) % poly.size();
            size_t in = (i + 1) % poly.size();
            const Point2 &A = pts[poly[ip]], &B = pts[poly[i]], &C = pts[poly[in]];
            if (orientation(A, B, C) <= 0) continue; // reflex or straight corner
            bool blocked = false;
            for (size_t k = 0; k < poly.size() && !blocked; ++k) {
                if (k == i || k == ip || k == in) continue;
                blocked = point_in_closed_triangle(pts[poly[k]], A, B, C);
            }
            if (blocked) continue;
            tris.push_back({poly[ip], poly[i], poly[in]});
            poly.erase(poly.begin() + static_cast<long>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw BadTiling("ear clipping failed: face is not a simple polygon");
    }
    const Point2 &A = pts[poly[0]], &B = pts[poly[1]], &C = pts[poly[2]];
    if (orientation(A, B, C) < 0)
        tris.push_back({poly[0], poly[2], poly[1]});
    else
        tris.push_back({poly[0], poly[1], poly[2]});
    return tris;
}

// clip a convex polygon against the halfplane a x + b y <= c
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Scalar& a,
                                   const Scalar& b, const Scalar& c) {
    std::vector<Point2> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2 &P = poly[i], &Q = poly[(i + 1) % n];
        Scalar fp = a * P.x + b * P.y - c, fq = a * Q.x + b * Q.y - c;
        if (fp <= 0) out.push_back(P);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            Scalar t = fp / (fp - fq);
            out.push_back({P.x + t * (Q.x - P.x), P.y + t * (Q.y - P.y)});
        }
    }
    // dedupe consecutive points
    std::vector<Point2> ded;
    for (auto& p : out)
        if (ded.empty() || !(ded.back() == p)) ded.push_back(p);
    while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
    return ded;
}

std::vector<Point2> clip_convex(const std::vector<Point2>& subject,
                                const std::vector<Point2>& clipper) {
    // clipper must be CCW convex
    std::vector<Point2> cur = subject;
    size_t n = clipper.size();
    for (size_t i = 0; i < n && !cur.empty(); ++i) {
        const Point2 &A = clipper[i], &B = clipper[(i + 1) % n];
        // halfplane left of AB: (B-A) x (P-A) >= 0  ->  -(By-Ay) x + (Bx-Ax) y <= ...
        Scalar a = B.y - A.y, b = A.x - B.x;
        Scalar c = a * A.x + b * A.y;
        // keep a x + b y <= c is the RIGHT side; we want left: flip
        cur = clip_halfplane(cur, -a, -b, -c);
    }
    return cur;
}

bool nonzero_area(const std::vector<Point2>& poly) {
    return poly.size() >= 3 && sgn(polygon_area2(poly)) != 0;
}

} // namespace

size_t PlaneComplex::edge_count() const {
    std::set<std::pair<size_t, size_t>> edges;
    for (auto& f : faces)
        for (size_t i = 0; i < f.size(); ++i) {
            size_t a = f[i], b = f[(i + 1) % f.size()];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    return edges.size();
}

size_t PlaneBuilder::vertex(const Point2& p) {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == p) return i;
    verts.push_back(p);
    return verts.size() - 1;
}

void PlaneBuilder::add_face(const std::vector<Point2>& poly) {
    std::vector<size_t> f;
    for (auto& p : poly) f.push_back(vertex(p));
    faces.push_back(std::move(f));
}

void PlaneBuilder::split_face_diagonal(const Point2& a, const Point2& b) {
    size_t ia = vertex(a), ib = vertex(b);
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        auto& f = faces[fi];
        auto pa = std::find(f.begin(), f.end(), ia);
        auto pb = std::find(f.begin(), f.end(), ib);
        if (pa == f.end() || pb == f.end()) continue;
        size_t qa = static_cast<size_t>(pa - f.begin()), qb = static_cast<size_t>(pb - f.begin());
        size_t n = f.size();
        if ((qa + 1) % n == qb || (qb + 1) % n == qa) continue; // adjacent: no split
        // walk qa..qb and qb..qa
        std::vector<size_t> f1, f2;
        for (size_t k = qa;; k = (k + 1) % n) {
            f1.push_back(f[k]);
            if (k == qb) break;
        }
        for (size_t k = qb;; k = (k + 1) % n) {
            f2.push_back(f[k]);
            if (k == qa) break;
        }
        faces[fi] = f1;
        faces.push_back(f2);
        return;
    }
    throw BadTiling("no face admits the requested diagonal");
}

void PlaneBuilder::refine_rect_fan(const Point2& lo, const Point2& hi) {
    Point2 center{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
    std::vector<Point2> rect{{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};

    std::vector<std::vector<size_t>> out;
    for (auto& f : faces) {
        std::vector<Point2> poly;
        for (size_t i : f) poly.push_back(verts[i]);
        auto inter = clip_convex(poly, rect);
        if (!nonzero_area(inter)) {
            out.push_back(f);
            continue;
        }
        // parts of the face outside the rectangle: four halfplane bands
        std::vector<std::vector<Point2>> pieces;
        pieces.push_back(clip_halfplane(poly, Scalar(1), Scalar(0), lo.x));  // x <= lo.x
        pieces.push_back(clip_halfplane(poly, Scalar(-1), Scalar(0), -hi.x)); // x >= hi.x
        auto mid = clip_halfplane(clip_halfplane(poly, Scalar(-1), Scalar(0), -lo.x), Scalar(1),
                                  Scalar(0), hi.x);
        pieces.push_back(clip_halfplane(mid, Scalar(0), Scalar(1), lo.y));  // y <= lo.y
        pieces.push_back(clip_halfplane(mid, Scalar(0), Scalar(-1), -hi.y)); // y >= hi.y
        // the four fan triangles clipped to the face
        for (int k = 0; k < 4; ++k) {
            std::vector<Point2> tri{center, rect[static_cast<size_t>(k)],
                                    rect[static_cast<size_t>((k + 1) % 4)]};
            if (sgn(polygon_area2(tri)) < 0) std::reverse(tri.begin(), tri.end());
            pieces.push_back(clip_convex(tri, poly));
        }
        for (auto& piece : pieces) {
            if (!nonzero_area(piece)) continue;
            std::vector<size_t> nf;
            for (auto& p : piece) nf.push_back(vertex(p));
            out.push_back(std::move(nf));
        }
    }
    faces = std::move(out);
}

namespace {

bool strictly_between(const Point2& a, const Point2& b, const Point2& p) {
    if (orientation(a, b, p) != 0) return false;
    if (a.x != b.x) return (p.x > scalar_min(a.x, b.x)) && (p.x < scalar_max(a.x, b.x));
    return (p.y > scalar_min(a.y, b.y)) && (p.y < scalar_max(a.y, b.y));
}

} // namespace

void PlaneBuilder::insert_collinear_vertices() {
    for (auto& f : faces) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < f.size() && !changed; ++i) {
                size_t a = f[i], b = f[(i + 1) % f.size()];
                for (size_t k = 0; k < verts.size(); ++k) {
                    if (k == a || k == b) continue;
                    if (std::find(f.begin(), f.end(), k) != f.end()) continue;
                    if (strictly_between(verts[a], verts[b], verts[k])) {
                        f.insert(f.begin() + static_cast<long>(i) + 1, k);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
}

PlanePL make_plane_pl(std::vector<Point2> vertices, std::vector<std::vector<size_t>> faces,
                      std::vector<Scalar> values, Scalar exponent) {
    if (vertices.size() != values.size())
        throw BadTiling("vertex/value lists must have equal length");
    for (const Scalar& v : values)
        if (v < 0) throw NegativeValue("plane values must be nonnegative");
    if (exponent <= 0) throw NonpositiveExponent("value exponent must be positive");

    auto cx = std::make_shared<PlaneComplex>();
    cx->vertices = std::move(vertices);
    cx->faces = std::move(faces);

    // Faces with four or more corners must carry affine values: fit the plane
    // through three non-collinear corners and verify the rest.
    for (auto& f : cx->faces) {
        if (f.size() < 3) throw BadTiling("degenerate face");
        for (size_t i : f)
            if (i >= cx->vertices.size()) throw BadTiling("face index out of range");
        if (f.size() == 3) continue;
        size_t a = f[0], b = 1, c = 2;
        while (c < f.size() &&
               orientation(cx->vertices[a], cx->vertices[f[b]], cx->vertices[f[c]]) == 0)
            ++c;
        if (c >= f.size()) throw BadTiling("face is collinear");
        const Point2 &A = cx->vertices[a], &B = cx->vertices[f[b]], &C = cx->vertices[f[c]];
        const Scalar &va = values[a], &vb = values[f[b]], &vc = values[f[c]];
        // affine g with g(A)=va etc.: solve the 2x2 system for the gradient
        Scalar det = (B.x - A.x) * (C.y - A.y) - (C.x - A.x) * (B.y - A.y);
        Scalar gx = ((vb - va) * (C.y - A.y) - (vc - va) * (B.y - A.y)) / det;
        Scalar gy = ((vc - va) * (B.x - A.x) - (vb - va) * (C.x - A.x)) / det;
        for (size_t i : f) {
            Scalar expect = va + gx * (cx->vertices[i].x - A.x) + gy * (cx->vertices[i].y - A.y);
            if (expect != values[i])
                throw NonplanarFaceValues(
                    "face values do not extend to a linear function at (" +
                    format_scalar(cx->vertices[i].x) + "," + format_scalar(cx->vertices[i].y) +
                    "): expected " + format_scalar(expect) + ", have " + format_scalar(values[i]));
        }
    }

    // Tiling sanity: every undirected edge belongs to at most two faces, and
    // boundary edges (exactly one face) carry the value 0 at both ends.
    std::map<std::pair<size_t, size_t>, int> edge_use;
    for (auto& f : cx->faces)
        for (size_t i = 0; i < f.size(); ++i) {
            size_t u = f[i], v = f[(i + 1) % f.size()];
            ++edge_use[{std::min(u, v), std::max(u, v)}];
        }
    for (auto& [e, count] : edge_use) {
        if (count > 2) throw BadTiling("edge shared by more than two faces");
        if (count == 1 && (values[e.first] != 0 || values[e.second] != 0))
            throw SupportViolation("support boundary must carry the value 0");
    }

    for (size_t fi = 0; fi < cx->faces.size(); ++fi)
        for (auto& t : ear_clip(cx->vertices, cx->faces[fi])) {
            cx->triangles.push_back(t);
            cx->triangle_face.push_back(fi);
        }

    PlanePL f;
    f.complex = std::move(cx);
    f.values = std::move(values);
    f.exponent = std::move(exponent);
    return f;
}

PlanePL plane_from_complex(std::shared_ptr<const PlaneComplex> complex, std::vector<Scalar> values,
                           Scalar exponent) {
    if (complex->vertices.size() != values.size())
        throw BadTiling("vertex/value lists must have equal length");
    PlanePL f;
    f.complex = std::move(complex);
    f.values = std::move(values);
    f.exponent = std::move(exponent);
    return f;
}

RegionStats superlevel_stats(const PlanePL& f, const Scalar& c) {
    if (c <= 0) throw EmptyInterval("superlevel_stats requires a positive level");
    const PlaneComplex& cx = *f.complex;

    std::map<Point2, size_t> ids;
    auto id_of = [&](const Point2& p) {
        auto it = ids.find(p);
        if (it != ids.end()) return it->second;
        size_t id = ids.size();
        ids.emplace(p, id);
        return id;
    };
    std::set<std::pair<size_t, size_t>> edges;
    std::vector<std::vector<size_t>> polys;
    long faces = 0;
    Scalar area2(0);
    std::vector<size_t> isolated;

    for (auto& tri : cx.triangles) {
        const Point2 &A = cx.vertices[tri[0]], &B = cx.vertices[tri[1]], &C = cx.vertices[tri[2]];
        const Scalar &fa = f.values[tri[0]], &fb = f.values[tri[1]], &fc = f.values[tri[2]];
        // walk the triangle boundary, keeping {f >= c}
        std::vector<Point2> pts;
        const Point2* P[3] = {&A, &B, &C};
        const Scalar* V[3] = {&fa, &fb, &fc};
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3;
            if (*V[i] >= c) pts.push_back(*P[i]);
            bool cross = (*V[i] > c && *V[j] < c) || (*V[i] < c && *V[j] > c);
            if (cross) {
                Scalar t = (*V[i] - c) / (*V[i] - *V[j]);
                pts.push_back({P[i]->x + t * (P[j]->x - P[i]->x),
                               P[i]->y + t * (P[j]->y - P[i]->y)});
            }
        }
        // dedupe
        std::vector<Point2> ded;
        for (auto& p : pts)
            if (ded.empty() || !(ded.back() == p)) ded.push_back(p);
        while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
        if (ded.empty()) continue;

        if (ded.size() == 1) {
            isolated.push_back(id_of(ded[0]));
            continue;
        }
        Scalar a2 = polygon_area2(ded);
        if (ded.size() == 2 || sgn(a2) == 0) {
            // degenerate cell: a segment (take the extreme points)
            std::vector<Point2> seg = ded;
            std::sort(seg.begin(), seg.end());
            size_t u = id_of(seg.front()), v = id_of(seg.back());
            if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
            continue;
        }
        std::vector<size_t> poly;
        for (auto& p : ded) poly.push_back(id_of(p));
        for (size_t i = 0; i < poly.size(); ++i) {
            size_t u = poly[i], v = poly[(i + 1) % poly.size()];
            edges.insert({std::min(u, v), std::max(u, v)});
        }
        polys.push_back(std::move(poly));
        ++faces;
        area2 += scalar_abs(a2);
    }

    RegionStats stats;
    stats.level = c;
    long Vn = static_cast<long>(ids.size());
    long En = static_cast<long>(edges.size());
    stats.cells_v = Vn;
    stats.cells_e = En;
    stats.cells_f = faces;
    stats.euler = Vn - En + faces;
    stats.nonempty = Vn > 0;
    stats.area = area2 / 2;

    std::vector<size_t> parent(ids.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : edges) parent[find(u)] = find(v);
    std::set<size_t> roots;
    for (size_t i = 0; i < ids.size(); ++i) roots.insert(find(i));
    stats.components = static_cast<int>(roots.size());
    return stats;
}

bool is_unimodal_plane(const PlanePL& f, UnimodalMode mode) {
    Scalar maxv(0);
    for (const Scalar& v : f.values) maxv = scalar_max(maxv, v);
    if (maxv == 0) return false;

    std::vector<Scalar> distinct = f.values;
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
        auto s = superlevel_stats(f, c);
        if (!s.nonempty || s.components != 1) return false;
        if (mode == UnimodalMode::Contractible && s.euler != 1) return false;
    }
    return true;
}

namespace {

// barycentric weights of p in triangle (a,b,c), or nullopt outside
std::optional<std::array<Scalar, 3>> barycentric(const Point2& p, const Point2& a, const Point2& b,
                                                 const Point2& c) {
    Scalar w0 = (b.x - p.x) * (c.y - p.y) - (c.x - p.x) * (b.y - p.y);
    Scalar w1 = (c.x - p.x) * (a.y - p.y) - (a.x - p.x) * (c.y - p.y);
    Scalar w2 = (a.x - p.x) * (b.y - p.y) - (b.x - p.x) * (a.y - p.y);
    Scalar tot = w0 + w1 + w2;
    if (tot == 0) return std::nullopt;
    if (tot < 0) {
        w0 = -w0;
        w1 = -w1;
        w2 = -w2;
        tot = -tot;
    }
    if (w0 < 0 || w1 < 0 || w2 < 0) return std::nullopt;
    return std::array<Scalar, 3>{w0 / tot, w1 / tot, w2 / tot};
}

} // namespace

std::optional<Scalar> plane_eval_base(const PlanePL& f, const Point2& p) {
    const PlaneComplex& cx = *f.complex;
    for (auto& tri : cx.triangles) {
        auto bc = barycentric(p, cx.vertices[tri[0]], cx.vertices[tri[1]], cx.vertices[tri[2]]);
        if (!bc) continue;
        return (*bc)[0] * f.values[tri[0]] + (*bc)[1] * f.values[tri[1]] +
               (*bc)[2] * f.values[tri[2]];
    }
    return std::nullopt;
}

AlgebraicSum plane_eval(const PlanePL& f, const Point2& p) {
    const PlaneComplex& cx = *f.complex;
    for (auto& tri : cx.triangles) {
        auto bc = barycentric(p, cx.vertices[tri[0]], cx.vertices[tri[1]], cx.vertices[tri[2]]);
        if (!bc) continue;
        AlgebraicSum s(Scalar(0));
        for (int k = 0; k < 3; ++k) {
            AlgebraicSum term = AlgebraicSum::pow(f.values[tri[static_cast<size_t>(k)]], f.exponent);
            term.scale((*bc)[static_cast<size_t>(k)]);
            s += term;
        }
        return s;
    }
    return AlgebraicSum(Scalar(0)); // outside the support
}

ProbeValue point_probe(const PlanePL& f, const Point2& p) {
    auto v = plane_eval_base(f, p);
    if (!v) throw OutOfSupport("probe point lies outside the support closure");
    return ProbeValue{*v, f.exponent};
}

namespace {

bool same_complex(const PlaneComplex& a, const PlaneComplex& b) {
    return a.vertices == b.vertices && a.triangles == b.triangles;
}

std::optional<Point2> segment_intersection(const Point2& a, const Point2& b, const Point2& c,
                                           const Point2& d) {
    // proper or touching intersection point of segments ab and cd, if unique
    Scalar d1x = b.x - a.x, d1y = b.y - a.y, d2x = d.x - c.x, d2y = d.y - c.y;
    Scalar den = d1x * d2y - d1y * d2x;
    if (den == 0) return std::nullopt; // parallel or collinear: endpoints cover it
    Scalar t = ((c.x - a.x) * d2y - (c.y - a.y) * d2x) / den;
    Scalar u = ((c.x - a.x) * d1y - (c.y - a.y) * d1x) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return Point2{a.x + t * d1x, a.y + t * d1y};
}

std::vector<std::pair<Point2, Point2>> complex_edges(const PlaneComplex& cx) {
    std::set<std::pair<size_t, size_t>> keys;
    for (auto& t : cx.triangles)
        for (int i = 0; i < 3; ++i) {
            size_t u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>((i + 1) % 3)];
            keys.insert({std::min(u, v), std::max(u, v)});
        }
    std::vector<std::pair<Point2, Point2>> out;
    for (auto& [u, v] : keys) out.emplace_back(cx.vertices[u], cx.vertices[v]);
    return out;
}

} // namespace

bool verify_combination_plane(const std::vector<PlanePL>& summands, CombinationRule rule,
                              const PlanePL& target, const Scalar& p) {
    if (rule == CombinationRule::Max) {
        for (auto& s : summands)
            if (!same_complex(*s.complex, *target.complex))
                throw RefinementMismatch("max verification requires a shared complex");
        size_t n = target.complex->vertices.size();
        for (auto& s : summands)
            for (size_t i = 0; i < n; ++i)
                if (compare(AlgebraicSum::pow(s.values[i], s.exponent),
                            AlgebraicSum::pow(target.values[i], target.exponent)) > 0)
                    return false;
        for (auto& tri : target.complex->triangles) {
            bool attained = false;
            for (auto& s : summands) {
                bool all = true;
                for (size_t k = 0; k < 3 && all; ++k)
                    all = compare(AlgebraicSum::pow(s.values[tri[k]], s.exponent),
                                  AlgebraicSum::pow(target.values[tri[k]], target.exponent)) == 0;
                if (all) {
                    attained = true;
                    break;
                }
            }
            if (!attained) return false;
        }
        return true;
    }

    // Sum / PPower: the difference is PL on the overlay arrangement, so
    // equality at all overlay vertices (complex vertices plus pairwise edge
    // intersections) is exact.
    Scalar power_arg = rule == CombinationRule::PPower ? p : Scalar(1);
    std::set<Point2> points;
    bool shared = true;
    for (auto& s : summands) shared = shared && same_complex(*s.complex, *target.complex);
    for (auto& v : target.complex->vertices) points.insert(v);
    if (!shared) {
        std::vector<std::vector<std::pair<Point2, Point2>>> all_edges;
        all_edges.push_back(complex_edges(*target.complex));
        for (auto& s : summands) {
            for (auto& v : s.complex->vertices) points.insert(v);
            all_edges.push_back(complex_edges(*s.complex));
        }
        for (size_t i = 0; i < all_edges.size(); ++i)
            for (size_t j = i + 1; j < all_edges.size(); ++j)
                for (auto& e1 : all_edges[i])
                    for (auto& e2 : all_edges[j]) {
                        auto x = segment_intersection(e1.first, e1.second, e2.first, e2.second);
                        if (x) points.insert(*x);
                    }
    }
    std::vector<PlanePL> powered;
    for (auto& s : summands) {
        powered.push_back(s);
        powered.back().exponent = s.exponent * power_arg;
    }
    PlanePL tp = target;
    tp.exponent = target.exponent * power_arg;
    for (auto& pt : points) {
        AlgebraicSum sum(Scalar(0));
        for (auto& s : powered) sum += plane_eval(s, pt);
        if (compare(sum, plane_eval(tp, pt)) != 0) return false;
    }
    return true;
}

} // namespace ucat
