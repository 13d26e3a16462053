#include "ucat/datasets.hpp"

#include <algorithm>
#include <sstream>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

Scalar Q(const std::string& s) { return parse_scalar(s); }
Point2 P(const std::string& x, const std::string& y) { return {Q(x), Q(y)}; }

AnyFunction wrap(PLFunction f) {
    AnyFunction a;
    a.line = std::move(f);
    return a;
}
AnyFunction wrap(CirclePL f) {
    AnyFunction a;
    a.circle = std::move(f);
    return a;
}
AnyFunction wrap(GraphPL f) {
    AnyFunction a;
    a.graph = std::move(f);
    return a;
}
AnyFunction wrap(PlanePL f) {
    AnyFunction a;
    a.plane = std::move(f);
    return a;
}

// ---------------------------------------------------------------- cantor ---

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

Dataset build_cantor(int depth) {
    Dataset ds;
    ds.name = "cantor_truncated_" + std::to_string(depth);
    ds.target = wrap(cantor_truncation(depth));

    Claim ucat;
    ucat.check = "ucat";
    ucat.label = "ucat = 2";
    ucat.provenance = "paper";
    ucat.relation = "=";
    ucat.value = 2;
    ds.claims.push_back(ucat);

    Claim var;
    var.check = "variation";
    var.label = "V^-(f;(0,1)) equals the depth-" + std::to_string(depth) + " partial sum";
    var.provenance = "derived";
    var.scalars = {Q("0"), Q("1")};
    var.bound = (Q("1") - pow_int(Q("2/3"), depth)) / 2;
    var.note = "partial sums 1/6 + 2/18 + 4/54 + ... converging to 1/2";
    ds.claims.push_back(var);

    Claim sw;
    sw.check = "sweep_points";
    sw.label = "sweep points of the truncation";
    sw.provenance = "derived";
    sw.scalars = {pow_int(Q("1/3"), depth), Q("1") + pow_int(Q("2/3"), depth) / 2};
    sw.note = "the un-truncated function has sweep points 0 and 1; every finite "
              "plateau truncation shifts them to 3^-d and 1+(2/3)^d/2";
    ds.claims.push_back(sw);
    return ds;
}

// ------------------------------------------------------------ circle_8pt ---

Dataset build_circle_8pt() {
    Dataset ds;
    ds.name = "circle_8pt";
    std::vector<Scalar> angles, values;
    for (int j = 0; j < 8; ++j) angles.push_back(scalar_from_long(j, 8));
    for (const char* v : {"4", "3", "7/2", "3", "4", "1", "3", "1"}) values.push_back(Q(v));
    ds.target = wrap(make_circle(angles, values));

    ds.functions["u1"] =
        wrap(make_circle(angles, {Q("3"), Q("3"), Q("7/2"), Q("3"), Q("3"), Q("0"), Q("0"), Q("0")}));
    ds.functions["u2"] =
        wrap(make_circle(angles, {Q("1"), Q("0"), Q("0"), Q("0"), Q("1"), Q("1"), Q("3"), Q("1")}));

    Claim dec;
    dec.check = "decomposition";
    dec.label = "f = u1 + u2 with both summands unimodal";
    dec.provenance = "paper";
    dec.rule = "sum";
    dec.summands = {"u1", "u2"};
    ds.claims.push_back(dec);

    Claim nu;
    nu.check = "not_unimodal";
    nu.label = "f itself is not unimodal";
    nu.provenance = "paper";
    ds.claims.push_back(nu);

    Claim uc;
    uc.check = "ucat";
    uc.label = "ucat = 2";
    uc.provenance = "paper";
    uc.relation = "=";
    uc.value = 2;
    ds.claims.push_back(uc);

    Claim pattern;
    pattern.check = "m_a_plus";
    pattern.label = "M_a^+ pattern at the 8 knots and 16 arc midpoints";
    pattern.provenance = "paper";
    auto expected = [&](const Scalar& a) {
        if (a >= Q("1/8") && a <= Q("2/8")) return 2;
        if (a >= Q("5/8") && a <= Q("6/8")) return 2;
        return 3;
    };
    for (int j = 0; j < 8; ++j) {
        Scalar a = scalar_from_long(j, 8);
        pattern.scalars.push_back(a);
        pattern.int_values.push_back(expected(a));
    }
    for (int j = 0; j < 16; ++j) {
        Scalar a = scalar_from_long(2 * j + 1, 16);
        pattern.scalars.push_back(a);
        pattern.int_values.push_back(expected(a));
    }
    ds.claims.push_back(pattern);
    return ds;
}

// -------------------------------------------------------- graph examples ---

GraphPL graph_pl_of(const std::vector<VertexId>& ids,
                    const std::vector<std::pair<VertexId, VertexId>>& edges,
                    const std::map<VertexId, std::pair<Scalar, Scalar>>& coords,
                    const std::map<VertexId, Scalar>& values, const Scalar& exponent = Scalar(1)) {
    return make_graph_pl(make_graph(ids, edges, coords), values, exponent);
}

Dataset build_graph_example_1() {
    Dataset ds;
    ds.name = "graph_example_1";
    std::vector<VertexId> ids{"a1", "a2", "b1", "b2", "c", "d1", "d2", "d3", "e1", "e2", "e3", "q"};
    std::vector<std::pair<VertexId, VertexId>> edges{
        {"a1", "a2"}, {"a2", "c"},  {"b1", "b2"}, {"b2", "c"},  {"c", "d1"},  {"c", "e1"},
        {"d1", "d2"}, {"d2", "d3"}, {"d3", "q"},  {"e1", "e2"}, {"e2", "e3"}, {"e3", "q"}};
    std::map<VertexId, std::pair<Scalar, Scalar>> coords{
        {"a1", {Q("2"), Q("0")}},   {"a2", {Q("1"), Q("0")}},   {"b1", {Q("0"), Q("2")}},
        {"b2", {Q("0"), Q("1")}},   {"c", {Q("0"), Q("0")}},    {"d1", {Q("-1"), Q("0")}},
        {"d2", {Q("-2"), Q("0")}},  {"d3", {Q("-2"), Q("-1")}}, {"e1", {Q("0"), Q("-1")}},
        {"e2", {Q("0"), Q("-2")}},  {"e3", {Q("-1"), Q("-2")}}, {"q", {Q("-2"), Q("-2")}}};

    std::map<VertexId, Scalar> f{{"a1", Q("5")}, {"a2", Q("1")}, {"b1", Q("5")}, {"b2", Q("1")},
                                 {"c", Q("2")},  {"d1", Q("1")}, {"d2", Q("1")}, {"d3", Q("1")},
                                 {"e1", Q("1")}, {"e2", Q("1")}, {"e3", Q("1")}, {"q", Q("2")}};
    ds.target = wrap(graph_pl_of(ids, edges, coords, f));

    std::map<VertexId, Scalar> u1{{"a1", Q("5")}, {"a2", Q("1")}, {"c", Q("1")}, {"d1", Q("1")},
                                  {"d2", Q("1")}, {"d3", Q("1")}, {"q", Q("1")}};
    std::map<VertexId, Scalar> u2{{"b1", Q("5")}, {"b2", Q("1")}, {"c", Q("1")}, {"e1", Q("1")},
                                  {"e2", Q("1")}, {"e3", Q("1")}, {"q", Q("1")}};
    ds.functions["u1"] = wrap(graph_pl_of(ids, edges, coords, u1));
    ds.functions["u2"] = wrap(graph_pl_of(ids, edges, coords, u2));

    ds.functions["sqrt_f"] = wrap(graph_pl_of(ids, edges, coords, f, Q("1/2")));
    std::map<VertexId, Scalar> v1{{"a1", Q("5")}, {"a2", Q("1")}, {"c", Q("1/2")}};
    std::map<VertexId, Scalar> v2{{"b1", Q("5")}, {"b2", Q("1")}, {"c", Q("1/2")}};
    std::map<VertexId, Scalar> v3{{"q", Q("2")},  {"d1", Q("1")}, {"d2", Q("1")},
                                  {"d3", Q("1")}, {"e1", Q("1")}, {"e2", Q("1")},
                                  {"e3", Q("1")}};
    ds.functions["v1"] = wrap(graph_pl_of(ids, edges, coords, v1, Q("1/2")));
    ds.functions["v2"] = wrap(graph_pl_of(ids, edges, coords, v2, Q("1/2")));
    ds.functions["v3"] = wrap(graph_pl_of(ids, edges, coords, v3, Q("1/2")));

    Claim dec;
    dec.check = "decomposition";
    dec.label = "f = u1 + u2 with both summands unimodal";
    dec.provenance = "paper";
    dec.rule = "sum";
    dec.summands = {"u1", "u2"};
    ds.claims.push_back(dec);

    Claim nu;
    nu.check = "not_unimodal";
    nu.label = "f itself is not unimodal";
    nu.provenance = "paper";
    ds.claims.push_back(nu);

    Claim uc;
    uc.check = "ucat";
    uc.label = "ucat(f) = 2";
    uc.provenance = "paper";
    uc.relation = "=";
    uc.value = 2;
    uc.rule = "sum";
    uc.summands = {"u1", "u2"};
    ds.claims.push_back(uc);

    Claim vdec;
    vdec.check = "decomposition";
    vdec.label = "sqrt(f) = v1 + v2 + v3 with unimodal summands";
    vdec.provenance = "paper";
    vdec.rule = "sum";
    vdec.summands = {"v1", "v2", "v3"};
    vdec.target = "sqrt_f";
    vdec.note = "the source lists v2 on the a-side; the b-side mirror is the "
                "only assignment that sums to sqrt(f)";
    ds.claims.push_back(vdec);

    Claim uhalf;
    uhalf.check = "ucat";
    uhalf.label = "ucat^(1/2)(f) <= 3 via the explicit decomposition";
    uhalf.provenance = "paper";
    uhalf.p = Q("1/2");
    uhalf.relation = "<=";
    uhalf.value = 3;
    uhalf.rule = "sum";
    uhalf.summands = {"v1", "v2", "v3"};
    uhalf.target = "sqrt_f";
    ds.claims.push_back(uhalf);

    Claim uext;
    uext.check = "ucat";
    uext.label = "ucat^(1/2)(f) = 3";
    uext.provenance = "paper";
    uext.scope = "external";
    uext.p = Q("1/2");
    uext.relation = "=";
    uext.value = 3;
    uext.note = "the lower bound is a topological argument, not machine-checked";
    ds.claims.push_back(uext);

    Claim pv;
    pv.check = "path_value";
    pv.label = "pv(a1, b1) = 1";
    pv.provenance = "derived";
    pv.vertex_ids = {"a1", "b1"};
    pv.bound = Q("1");
    ds.claims.push_back(pv);

    Claim lb;
    lb.check = "lower_bound";
    lb.label = "path-value lower bound holds for the mode points {a1, b1}";
    lb.provenance = "derived";
    lb.vertex_ids = {"a1", "b1"};
    lb.expectation = true;
    ds.claims.push_back(lb);
    return ds;
}

Dataset build_graph_example_1_variant() {
    Dataset ds;
    ds.name = "graph_example_1_variant";
    std::vector<VertexId> ids{"a1", "a2", "b1", "b2", "c1", "c2", "d1",
                              "d2", "d3", "e1", "e2", "e3", "q"};
    std::vector<std::pair<VertexId, VertexId>> edges{
        {"a1", "a2"}, {"a2", "c1"}, {"b1", "b2"}, {"b2", "c1"}, {"c1", "c2"},
        {"c2", "d1"}, {"c2", "e1"}, {"d1", "d2"}, {"d2", "d3"}, {"d3", "q"},
        {"e1", "e2"}, {"e2", "e3"}, {"e3", "q"}};
    // coordinates are illustrative only (the source gives a picture, no numbers)
    std::map<VertexId, std::pair<Scalar, Scalar>> coords{
        {"a1", {Q("2"), Q("0")}},   {"a2", {Q("1"), Q("0")}},   {"b1", {Q("0"), Q("2")}},
        {"b2", {Q("0"), Q("1")}},   {"c1", {Q("0"), Q("0")}},   {"c2", {Q("-1"), Q("-1")}},
        {"d1", {Q("-2"), Q("-1")}}, {"d2", {Q("-3"), Q("-1")}}, {"d3", {Q("-3"), Q("-2")}},
        {"e1", {Q("-1"), Q("-2")}}, {"e2", {Q("-1"), Q("-3")}}, {"e3", {Q("-2"), Q("-3")}},
        {"q", {Q("-3"), Q("-3")}}};

    std::map<VertexId, Scalar> f{{"a1", Q("5")}, {"a2", Q("1")}, {"b1", Q("5")}, {"b2", Q("1")},
                                 {"c1", Q("2")}, {"c2", Q("2")}, {"d1", Q("1")}, {"d2", Q("1")},
                                 {"d3", Q("1")}, {"e1", Q("1")}, {"e2", Q("1")}, {"e3", Q("1")},
                                 {"q", Q("2")}};
    ds.target = wrap(graph_pl_of(ids, edges, coords, f));

    std::map<VertexId, Scalar> u1{{"a1", Q("5")}, {"a2", Q("1")}, {"c1", Q("1")}, {"c2", Q("1")},
                                  {"d1", Q("1")}, {"d2", Q("1")}, {"d3", Q("1")}, {"q", Q("1")}};
    std::map<VertexId, Scalar> u2{{"b1", Q("5")}, {"b2", Q("1")}, {"c1", Q("1")}, {"c2", Q("1")},
                                  {"e1", Q("1")}, {"e2", Q("1")}, {"e3", Q("1")}, {"q", Q("1")}};
    ds.functions["u1"] = wrap(graph_pl_of(ids, edges, coords, u1));
    ds.functions["u2"] = wrap(graph_pl_of(ids, edges, coords, u2));

    ds.functions["sqrt_f"] = wrap(graph_pl_of(ids, edges, coords, f, Q("1/2")));
    std::map<VertexId, Scalar> v1{
        {"a1", Q("5")}, {"a2", Q("1")}, {"c1", Q("1/2")}, {"c2", Q("1/2")}};
    std::map<VertexId, Scalar> v2{
        {"b1", Q("5")}, {"b2", Q("1")}, {"c1", Q("1/2")}, {"c2", Q("1/2")}};
    std::map<VertexId, Scalar> v3{{"q", Q("2")},  {"d1", Q("1")}, {"d2", Q("1")},
                                  {"d3", Q("1")}, {"e1", Q("1")}, {"e2", Q("1")},
                                  {"e3", Q("1")}};
    ds.functions["v1"] = wrap(graph_pl_of(ids, edges, coords, v1, Q("1/2")));
    ds.functions["v2"] = wrap(graph_pl_of(ids, edges, coords, v2, Q("1/2")));
    ds.functions["v3"] = wrap(graph_pl_of(ids, edges, coords, v3, Q("1/2")));

    Claim dec;
    dec.check = "decomposition";
    dec.label = "f = u1 + u2 with both summands unimodal";
    dec.provenance = "derived";
    dec.rule = "sum";
    dec.summands = {"u1", "u2"};
    dec.note = "construction mirroring the valence-4 example, as the source's "
               "remark describes";
    ds.claims.push_back(dec);

    Claim nu;
    nu.check = "not_unimodal";
    nu.label = "f itself is not unimodal";
    nu.provenance = "derived";
    ds.claims.push_back(nu);

    Claim uc;
    uc.check = "ucat";
    uc.label = "ucat(f) = 2";
    uc.provenance = "derived";
    uc.relation = "=";
    uc.value = 2;
    uc.rule = "sum";
    uc.summands = {"u1", "u2"};
    ds.claims.push_back(uc);

    Claim vdec;
    vdec.check = "decomposition";
    vdec.label = "sqrt(f) = v1 + v2 + v3 with unimodal summands";
    vdec.provenance = "derived";
    vdec.rule = "sum";
    vdec.summands = {"v1", "v2", "v3"};
    vdec.target = "sqrt_f";
    ds.claims.push_back(vdec);

    Claim uhalf;
    uhalf.check = "ucat";
    uhalf.label = "ucat^(1/2)(f) <= 3 via the explicit decomposition";
    uhalf.provenance = "derived";
    uhalf.p = Q("1/2");
    uhalf.relation = "<=";
    uhalf.value = 3;
    uhalf.rule = "sum";
    uhalf.summands = {"v1", "v2", "v3"};
    uhalf.target = "sqrt_f";
    ds.claims.push_back(uhalf);

    Claim uext;
    uext.check = "ucat";
    uext.label = "ucat^(1/2)(f) = 3";
    uext.provenance = "paper";
    uext.scope = "external";
    uext.p = Q("1/2");
    uext.relation = "=";
    uext.value = 3;
    uext.note = "the source remarks the proof mirrors the valence-4 case and omits it";
    ds.claims.push_back(uext);
    return ds;
}

Dataset build_graph_example_2() {
    Dataset ds;
    ds.name = "graph_example_2";
    std::vector<VertexId> ids{"a", "b", "c", "d", "e"};
    std::vector<std::pair<VertexId, VertexId>> edges{{"a", "b"}, {"a", "c"}, {"a", "d"},
                                                     {"a", "e"}, {"b", "c"}, {"b", "d"},
                                                     {"b", "e"}, {"c", "d"}, {"c", "e"}};
    // planar rendering coordinates are illustrative only
    std::map<VertexId, std::pair<Scalar, Scalar>> coords{{"a", {Q("-2"), Q("0")}},
                                                         {"b", {Q("2"), Q("0")}},
                                                         {"c", {Q("0"), Q("1")}},
                                                         {"d", {Q("0"), Q("3")}},
                                                         {"e", {Q("0"), Q("-3")}}};
    std::map<VertexId, Scalar> f{
        {"a", Q("1")}, {"b", Q("1")}, {"c", Q("1")}, {"d", Q("3")}, {"e", Q("3")}};
    ds.target = wrap(graph_pl_of(ids, edges, coords, f));

    // subdivided realization for the max decomposition: i,j,k on ab, p,q,r on
    // bc, x,y,z on ca (quarter points; the subdivision vertices are ordinary
    // vertices of the refined graph)
    std::vector<VertexId> sid{"a", "b", "c", "d", "e", "i", "j", "k", "p", "q2", "r",
                              "x", "y", "z"};
    std::vector<std::pair<VertexId, VertexId>> sedges{
        {"a", "i"},  {"i", "j"},  {"j", "k"},  {"k", "b"},  {"b", "p"},  {"p", "q2"},
        {"q2", "r"}, {"r", "c"},  {"c", "x"},  {"x", "y"},  {"y", "z"},  {"z", "a"},
        {"a", "d"},  {"a", "e"},  {"b", "d"},  {"b", "e"},  {"c", "d"},  {"c", "e"}};
    auto lerp = [&](const VertexId& u, const VertexId& v, int num, int den) {
        auto [ux, uy] = coords[u];
        auto [vx, vy] = coords[v];
        Scalar t = scalar_from_long(num, den);
        return std::pair<Scalar, Scalar>{ux + t * (vx - ux), uy + t * (vy - uy)};
    };
    std::map<VertexId, std::pair<Scalar, Scalar>> scoords = coords;
    scoords["i"] = lerp("a", "b", 1, 4);
    scoords["j"] = lerp("a", "b", 2, 4);
    scoords["k"] = lerp("a", "b", 3, 4);
    scoords["p"] = lerp("b", "c", 1, 4);
    scoords["q2"] = lerp("b", "c", 2, 4);
    scoords["r"] = lerp("b", "c", 3, 4);
    scoords["x"] = lerp("c", "a", 1, 4);
    scoords["y"] = lerp("c", "a", 2, 4);
    scoords["z"] = lerp("c", "a", 3, 4);

    std::map<VertexId, Scalar> fs = f;
    for (const char* v : {"i", "j", "k", "p", "q2", "r", "x", "y", "z"}) fs[v] = Q("1");
    ds.functions["f_subdivided"] = wrap(graph_pl_of(sid, sedges, scoords, fs));

    std::map<VertexId, Scalar> u1{{"d", Q("3")},  {"a", Q("1")}, {"b", Q("1")},  {"c", Q("1")},
                                  {"j", Q("1")},  {"k", Q("1")}, {"q2", Q("1")}, {"r", Q("1")},
                                  {"y", Q("1")},  {"z", Q("1")}};
    std::map<VertexId, Scalar> u2{{"e", Q("3")},  {"a", Q("1")}, {"b", Q("1")}, {"c", Q("1")},
                                  {"i", Q("1")},  {"j", Q("1")}, {"p", Q("1")}, {"q2", Q("1")},
                                  {"x", Q("1")},  {"y", Q("1")}};
    ds.functions["u1"] = wrap(graph_pl_of(sid, sedges, scoords, u1));
    ds.functions["u2"] = wrap(graph_pl_of(sid, sedges, scoords, u2));

    // length-3 sum decomposition on the unsubdivided graph (the source leaves
    // it to the reader)
    std::map<VertexId, Scalar> w1{{"d", Q("3")}, {"a", Q("1")}};
    std::map<VertexId, Scalar> w2{{"e", Q("3")}, {"b", Q("1")}};
    std::map<VertexId, Scalar> w3{{"c", Q("1")}};
    ds.functions["w1"] = wrap(graph_pl_of(ids, edges, coords, w1));
    ds.functions["w2"] = wrap(graph_pl_of(ids, edges, coords, w2));
    ds.functions["w3"] = wrap(graph_pl_of(ids, edges, coords, w3));

    Claim maxdec;
    maxdec.check = "decomposition";
    maxdec.label = "f = max{u1, u2} on the subdivided graph, both unimodal";
    maxdec.provenance = "paper";
    maxdec.rule = "max";
    maxdec.summands = {"u1", "u2"};
    maxdec.target = "f_subdivided";
    ds.claims.push_back(maxdec);

    Claim sumdec;
    sumdec.check = "decomposition";
    sumdec.label = "f = w1 + w2 + w3 with unimodal summands";
    sumdec.provenance = "derived";
    sumdec.rule = "sum";
    sumdec.summands = {"w1", "w2", "w3"};
    sumdec.note = "the source leaves the length-3 sum decomposition to the reader";
    ds.claims.push_back(sumdec);

    Claim nu;
    nu.check = "not_unimodal";
    nu.label = "f itself is not unimodal";
    nu.provenance = "paper";
    ds.claims.push_back(nu);

    Claim uinf;
    uinf.check = "ucat";
    uinf.label = "ucat^inf(f) = 2";
    uinf.provenance = "paper";
    uinf.p_infinity = true;
    uinf.relation = "=";
    uinf.value = 2;
    uinf.rule = "max";
    uinf.summands = {"u1", "u2"};
    uinf.target = "f_subdivided";
    ds.claims.push_back(uinf);

    Claim usum;
    usum.check = "ucat";
    usum.label = "ucat(f) <= 3 via the sum decomposition";
    usum.provenance = "derived";
    usum.relation = "<=";
    usum.value = 3;
    usum.rule = "sum";
    usum.summands = {"w1", "w2", "w3"};
    ds.claims.push_back(usum);

    Claim uext;
    uext.check = "ucat";
    uext.label = "ucat(f) = 3";
    uext.provenance = "paper";
    uext.scope = "external";
    uext.relation = "=";
    uext.value = 3;
    uext.note = "no 2-summand decomposition exists; the case analysis is not "
                "machine-checked";
    ds.claims.push_back(uext);

    Claim pv;
    pv.check = "path_value";
    pv.label = "pv(d, e) = 1";
    pv.provenance = "derived";
    pv.vertex_ids = {"d", "e"};
    pv.bound = Q("1");
    ds.claims.push_back(pv);

    Claim lb1;
    lb1.check = "lower_bound";
    lb1.label = "path-value bound holds for the points {d, e}";
    lb1.provenance = "derived";
    lb1.vertex_ids = {"d", "e"};
    lb1.expectation = true;
    ds.claims.push_back(lb1);

    Claim lb2;
    lb2.check = "lower_bound";
    lb2.label = "path-value bound fails for the single point {d}";
    lb2.provenance = "derived";
    lb2.vertex_ids = {"d"};
    lb2.expectation = false;
    lb2.note = "pv(d, e) = 1 < 3 = f(e)";
    ds.claims.push_back(lb2);
    return ds;
}

// -------------------------------------------------------- plane examples ---

// 44 vertices of the first planar example, 1-based in the source tables.
const std::vector<Point2>& plane1_vertices() {
    static const std::vector<Point2> v = [] {
        std::vector<Point2> out;
        auto add = [&](const char* x, const char* y) { out.push_back(P(x, y)); };
        add("-4", "0");  add("-4", "2");  add("-4", "4");  add("-3", "1");
        add("-3", "2");  add("-3", "3");  add("-2", "-2"); add("-2", "0");
        add("-2", "1");  add("-2", "2");  add("-2", "3");  add("-2", "4");
        add("-1", "-1"); add("-1", "1");  add("-1", "2");  add("-1", "3");
        add("0", "-4");  add("0", "-2");  add("0", "2");   add("0", "4");
        add("1", "-3");  add("1", "-2");  add("1", "-1");  add("1", "1");
        add("1", "2");   add("1", "11/5"); add("1", "3");  add("2", "-4");
        add("2", "-3");  add("2", "-2");  add("2", "-1");  add("2", "0");
        add("2", "1");   add("2", "2");   add("2", "4");   add("11/5", "3");
        add("3", "-3");  add("3", "-2");  add("3", "-1");  add("3", "1");
        add("4", "-4");  add("4", "-2");  add("4", "0");   add("4", "2");
        return out;
    }();
    return v;
}

const std::vector<std::vector<size_t>>& plane1_faces() {
    static const std::vector<std::vector<size_t>> f = [] {
        // 1-based tables, converted on construction
        std::vector<std::vector<size_t>> raw{
            {1, 4, 5, 2},     {1, 8, 9, 4},     {2, 6, 3},        {2, 5, 6},
            {3, 6, 12},       {4, 10, 5},       {4, 9, 10},       {5, 10, 11, 6},
            {6, 11, 12},      {7, 13, 14, 8},   {7, 18, 23, 13},  {8, 14, 9},
            {9, 14, 15, 10},  {10, 16, 11},     {10, 15, 16},     {11, 16, 20, 12},
            {13, 23, 24, 14}, {14, 19, 15},     {14, 24, 19},     {15, 19, 20, 16},
            {17, 21, 22, 18}, {17, 28, 29, 21}, {18, 22, 23},     {19, 27, 20},
            {19, 24, 25},     {19, 25, 26},     {19, 26, 34, 27}, {20, 27, 35},
            {21, 30, 22},     {21, 29, 30},     {22, 30, 31, 23}, {23, 32, 24},
            {23, 31, 32},     {24, 33, 34, 25}, {24, 32, 33},     {25, 34, 26},
            {27, 34, 35},     {28, 37, 29},     {28, 41, 37},     {29, 37, 38, 30},
            {30, 39, 31},     {30, 38, 39},     {31, 39, 43, 32}, {32, 36, 33},
            {32, 40, 34, 36}, {32, 43, 40},     {33, 36, 34},     {34, 40, 44},
            {37, 42, 38},     {37, 41, 42},     {38, 42, 43, 39}, {40, 43, 44}};
        for (auto& face : raw)
            for (auto& i : face) --i;
        return raw;
    }();
    return f;
}

std::vector<Scalar> plane1_table(const Scalar& top, const std::vector<int>& top_idx,
                                 const std::vector<int>& one_idx) {
    std::vector<Scalar> vals(44, Scalar(0));
    for (int i : top_idx) vals[static_cast<size_t>(i - 1)] = top;
    for (int i : one_idx) vals[static_cast<size_t>(i - 1)] = Q("1");
    return vals;
}

Dataset build_plane_example_1() {
    Dataset ds;
    ds.name = "plane_example_1";
    auto verts = plane1_vertices();
    auto faces = plane1_faces();

    auto u1_vals = plane1_table(Q("5"), {40}, {4, 5, 6, 9, 13, 14, 23, 24, 31, 33, 36, 37, 38, 39});
    auto u2_vals =
        plane1_table(Q("5"), {27}, {6, 11, 13, 14, 15, 16, 21, 22, 23, 24, 25, 26, 29, 37});
    std::vector<Scalar> F_vals(44, Scalar(0));
    for (size_t i = 0; i < 44; ++i) F_vals[i] = u1_vals[i] + u2_vals[i];

    // the target is f = sqrt(F), stored exactly as base F with exponent 1/2
    ds.target = wrap(make_plane_pl(verts, faces, F_vals, Q("1/2")));
    ds.functions["F"] = wrap(make_plane_pl(verts, faces, F_vals));
    ds.functions["u1"] = wrap(make_plane_pl(verts, faces, u1_vals));
    ds.functions["u2"] = wrap(make_plane_pl(verts, faces, u2_vals));
    ds.functions["u1_sqrt"] = wrap(make_plane_pl(verts, faces, u1_vals, Q("1/2")));
    ds.functions["u2_sqrt"] = wrap(make_plane_pl(verts, faces, u2_vals, Q("1/2")));

    Claim dec;
    dec.check = "decomposition";
    dec.label = "F = u1 + u2 with both summands unimodal";
    dec.provenance = "paper";
    dec.rule = "sum";
    dec.summands = {"u1", "u2"};
    dec.target = "F";
    ds.claims.push_back(dec);

    Claim nuF;
    nuF.check = "not_unimodal";
    nuF.label = "F is not unimodal";
    nuF.provenance = "paper";
    nuF.target = "F";
    ds.claims.push_back(nuF);

    Claim nu;
    nu.check = "not_unimodal";
    nu.label = "f = sqrt(F) is not unimodal";
    nu.provenance = "paper";
    ds.claims.push_back(nu);

    Claim u2c;
    u2c.check = "ucat";
    u2c.label = "ucat^2(f) = ucat(F) = 2";
    u2c.provenance = "paper";
    u2c.p = Q("2");
    u2c.relation = "=";
    u2c.value = 2;
    u2c.rule = "p_power";
    u2c.summands = {"u1_sqrt", "u2_sqrt"};
    ds.claims.push_back(u2c);

    Claim uext;
    uext.check = "ucat";
    uext.label = "ucat(f) >= 3";
    uext.provenance = "paper";
    uext.scope = "external";
    uext.relation = ">=";
    uext.value = 3;
    uext.note = "the non-existence of a 2-summand decomposition is a "
                "path-crossing argument, not machine-checked";
    ds.claims.push_back(uext);

    Claim pz;
    pz.check = "point_value";
    pz.label = "f(z0) = f(w0) = 0";
    pz.provenance = "paper";
    pz.points = {P("2", "-2"), P("-2", "2")};
    pz.bound = Q("0");
    ds.claims.push_back(pz);

    Claim pa;
    pa.check = "point_value";
    pa.label = "f(a) = f(b) = sqrt(5) (base 5, exponent 1/2)";
    pa.provenance = "paper";
    pa.points = {P("3", "1"), P("1", "3")};
    pa.bound = Q("5");
    ds.claims.push_back(pa);

    Claim pq;
    pq.check = "point_value";
    pq.label = "f = 1 on sampled points of the boundary of Q";
    pq.provenance = "paper";
    // the sixteen value-1 vertices of the decomposition ...
    for (int i : {4, 5, 9, 11, 15, 16, 21, 22, 25, 26, 29, 31, 33, 36, 38, 39})
        pq.points.push_back(verts[static_cast<size_t>(i - 1)]);
    // ... plus the corner points of C that are not vertices
    pq.points.push_back(P("3/2", "1/2"));
    pq.points.push_back(P("3/2", "-1/2"));
    pq.points.push_back(P("1/2", "-3/2"));
    pq.points.push_back(P("-3/2", "-3/2"));
    pq.points.push_back(P("-3/2", "1/2"));
    pq.points.push_back(P("-1/2", "3/2"));
    pq.points.push_back(P("1/2", "3/2"));
    pq.bound = Q("1");
    ds.claims.push_back(pq);

    Claim pout;
    pout.check = "point_upper";
    pout.label = "f <= sqrt(2) outside A and B";
    pout.provenance = "paper";
    // A = [11/5,19/5] x [1/5,9/5], B is its reflection; vertices strictly
    // outside both (all except x40, x27, x26), padded with face centroids
    Scalar alox = Q("11/5"), ahix = Q("19/5"), aloy = Q("1/5"), ahiy = Q("9/5");
    auto outside = [&](const Point2& p) {
        bool in_a = p.x >= alox && p.x <= ahix && p.y >= aloy && p.y <= ahiy;
        bool in_b = p.y >= alox && p.y <= ahix && p.x >= aloy && p.x <= ahiy;
        return !in_a && !in_b;
    };
    for (size_t i = 0; i < verts.size(); ++i)
        if (outside(verts[i])) pout.points.push_back(verts[i]);
    for (auto& face : faces) {
        if (pout.points.size() >= 50) break;
        Scalar cx(0), cy(0);
        for (size_t i : face) {
            cx += verts[i].x;
            cy += verts[i].y;
        }
        Point2 centroid{cx / static_cast<long>(face.size()), cy / static_cast<long>(face.size())};
        if (outside(centroid)) pout.points.push_back(centroid);
    }
    pout.bound = Q("2"); // base-space bound: f <= sqrt(2) iff F <= 2
    ds.claims.push_back(pout);

    Claim sl;
    sl.check = "superlevel";
    sl.label = "Q = {f >= 1}: one component with two holes";
    sl.provenance = "derived";
    sl.p = Q("1");
    sl.components = 1;
    sl.euler = -1;
    ds.claims.push_back(sl);
    return ds;
}

// 47 vertices of the second planar example.
const std::vector<Point2>& plane2_vertices() {
    static const std::vector<Point2> v = [] {
        std::vector<Point2> out;
        auto add = [&](const char* x, const char* y) { out.push_back(P(x, y)); };
        add("-7", "-7"); add("-7", "7");  add("-6", "-6"); add("-6", "6");
        add("-5", "-5"); add("-5", "-1"); add("-5", "1");  add("-5", "5");
        add("-4", "0");  add("-10/3", "0"); add("-3", "-5"); add("-3", "-1");
        add("-3", "1");  add("-3", "5");  add("-2", "-4"); add("-2", "0");
        add("-2", "4");  add("-1", "-5"); add("-1", "-3"); add("-1", "-1");
        add("-1", "1");  add("-1", "3");  add("-1", "5");  add("0", "-6");
        add("0", "-4");  add("0", "0");   add("0", "4");   add("0", "6");
        add("1", "-7");  add("1", "-5");  add("1", "-3");  add("1", "-1");
        add("1", "1");   add("1", "3");   add("1", "5");   add("1", "7");
        add("2", "-4");  add("2", "0");   add("2", "4");   add("3", "-5");
        add("3", "-1");  add("3", "1");   add("3", "5");   add("10/3", "0");
        add("4", "0");   add("5", "-1");  add("5", "1");
        return out;
    }();
    return v;
}

const std::vector<std::vector<size_t>>& plane2_faces() {
    static const std::vector<std::vector<size_t>> f = [] {
        std::vector<std::vector<size_t>> raw{
            {1, 3, 4, 2},     {1, 29, 24, 3},   {2, 4, 28, 36},   {3, 5, 8, 4},
            {3, 24, 18, 5},   {4, 8, 23, 28},   {6, 9, 7},        {6, 12, 9},
            {7, 9, 13},       {9, 12, 10, 13},  {10, 12, 16},     {10, 16, 13},
            {11, 15, 16, 12}, {11, 18, 25, 15}, {13, 16, 17, 14}, {14, 17, 27, 23},
            {15, 19, 20, 16}, {15, 25, 19},     {16, 21, 22, 17}, {16, 20, 26},
            {16, 26, 21},     {17, 22, 27},     {18, 24, 25},     {19, 25, 26, 20},
            {21, 26, 27, 22}, {23, 27, 28},     {24, 29, 30, 25}, {25, 31, 32, 26},
            {25, 30, 40, 37}, {25, 37, 31},     {26, 33, 34, 27}, {26, 32, 38},
            {26, 38, 33},     {27, 35, 36, 28}, {27, 34, 39},     {27, 39, 43, 35},
            {31, 37, 38, 32}, {33, 38, 39, 34}, {37, 40, 41, 38}, {38, 41, 44},
            {38, 42, 43, 39}, {38, 44, 42},     {41, 45, 42, 44}, {41, 46, 45},
            {42, 45, 47},     {45, 46, 47}};
        for (auto& face : raw)
            for (auto& i : face) --i;
        return raw;
    }();
    return f;
}

std::vector<Scalar> plane2_table(const std::vector<int>& threes, const std::vector<int>& ones) {
    std::vector<Scalar> vals(47, Scalar(0));
    for (int i : threes) vals[static_cast<size_t>(i - 1)] = Q("3");
    for (int i : ones) vals[static_cast<size_t>(i - 1)] = Q("1");
    return vals;
}

// tent of height 1 over an axis-aligned rectangle, peaked at the center
Scalar phi_rect(const Point2& lo, const Point2& hi, const Point2& p) {
    if (p.x <= lo.x || p.x >= hi.x || p.y <= lo.y || p.y >= hi.y) return Scalar(0);
    Scalar dx = scalar_min(p.x - lo.x, hi.x - p.x) / ((hi.x - lo.x) / 2);
    Scalar dy = scalar_min(p.y - lo.y, hi.y - p.y) / ((hi.y - lo.y) / 2);
    return scalar_min(dx, dy);
}

Dataset build_plane_example_2() {
    Dataset ds;
    ds.name = "plane_example_2";
    auto base_verts = plane2_vertices();
    auto base_faces = plane2_faces();

    std::vector<int> f_ones{3, 4, 10, 15, 16, 17, 24, 25, 26, 27, 28, 37, 38, 39, 44};
    auto f_vals = plane2_table({9, 45}, f_ones);
    ds.target = wrap(make_plane_pl(base_verts, base_faces, f_vals));
    PlanePL f_base = *ds.target.plane;

    // v1/v2 need four extra diagonals to be piecewise linear
    PlaneBuilder vb;
    for (auto& face : base_faces) {
        std::vector<Point2> poly;
        for (size_t i : face) poly.push_back(base_verts[i]);
        vb.add_face(poly);
    }
    auto split = [&](PlaneBuilder& b, int i, int j) {
        b.split_face_diagonal(base_verts[static_cast<size_t>(i - 1)],
                              base_verts[static_cast<size_t>(j - 1)]);
    };
    split(vb, 15, 18);
    split(vb, 17, 23);
    split(vb, 30, 37);
    split(vb, 35, 39);
    auto v1_vals = plane2_table({9}, {3, 4, 10, 15, 16, 17, 24, 25, 26, 27, 28});
    auto v2_vals = plane2_table({45}, {3, 4, 24, 25, 26, 27, 28, 37, 38, 39, 44});
    PlanePL v1 = make_plane_pl(vb.verts, vb.faces, v1_vals);
    PlanePL v2 = make_plane_pl(vb.verts, vb.faces, v2_vals);

    // sum decomposition: eight diagonals of its own
    PlaneBuilder sb;
    for (auto& face : base_faces) {
        std::vector<Point2> poly;
        for (size_t i : face) poly.push_back(base_verts[i]);
        sb.add_face(poly);
    }
    split(sb, 1, 4);
    split(sb, 4, 5);
    split(sb, 15, 18);
    split(sb, 20, 25);
    split(sb, 21, 27);
    split(sb, 25, 32);
    split(sb, 27, 33);
    split(sb, 35, 39);
    auto s1_vals = plane2_table({9}, {4, 10, 15, 16, 17, 27, 28});
    auto s2_vals = plane2_table({45}, {3, 24, 25, 37, 38, 39, 44});
    auto s3_vals = plane2_table({}, {26});
    PlanePL s1 = make_plane_pl(sb.verts, sb.faces, s1_vals);
    PlanePL s2 = make_plane_pl(sb.verts, sb.faces, s2_vals);
    PlanePL s3 = make_plane_pl(sb.verts, sb.faces, s3_vals);

    // shared refined complex for everything: all diagonals, the six dent
    // rectangles with their center fans, T-junctions repaired
    PlaneBuilder mb;
    for (auto& face : base_faces) {
        std::vector<Point2> poly;
        for (size_t i : face) poly.push_back(base_verts[i]);
        mb.add_face(poly);
    }
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {15, 18}, {17, 23}, {30, 37}, {35, 39}, {1, 4}, {4, 5}, {20, 25}, {21, 27},
             {25, 32}, {27, 33}})
        split(mb, i, j);
    struct Rect {
        Point2 lo, hi;
    };
    std::vector<Rect> u1_rects{{P("-1", "2"), P("1", "3")},
                               {P("-1", "-2"), P("1", "-1")},
                               {P("-7", "-2"), P("-5", "-1")}};
    std::vector<Rect> u2_rects{{P("-1", "1"), P("1", "2")},
                               {P("-1", "-3"), P("1", "-2")},
                               {P("-7", "1"), P("-5", "2")}};
    for (auto& r : u1_rects) mb.refine_rect_fan(r.lo, r.hi);
    for (auto& r : u2_rects) mb.refine_rect_fan(r.lo, r.hi);
    mb.insert_collinear_vertices();

    auto eval_on = [&](const PlanePL& g, const Point2& p) {
        auto v = plane_eval_base(g, p);
        if (!v) throw BadTiling("refined vertex escaped the support");
        return *v;
    };
    std::vector<Scalar> mf, mu1, mu2, ms1, ms2, ms3;
    for (auto& p : mb.verts) {
        mf.push_back(eval_on(f_base, p));
        Scalar a = eval_on(v1, p);
        for (auto& r : u1_rects) a -= phi_rect(r.lo, r.hi, p);
        mu1.push_back(a);
        Scalar b = eval_on(v2, p);
        for (auto& r : u2_rects) b -= phi_rect(r.lo, r.hi, p);
        mu2.push_back(b);
        ms1.push_back(eval_on(s1, p));
        ms2.push_back(eval_on(s2, p));
        ms3.push_back(eval_on(s3, p));
    }
    ds.functions["f_refined"] = wrap(make_plane_pl(mb.verts, mb.faces, mf));
    ds.functions["u1"] = wrap(make_plane_pl(mb.verts, mb.faces, mu1));
    ds.functions["u2"] = wrap(make_plane_pl(mb.verts, mb.faces, mu2));
    ds.functions["s1"] = wrap(make_plane_pl(mb.verts, mb.faces, ms1));
    ds.functions["s2"] = wrap(make_plane_pl(mb.verts, mb.faces, ms2));
    ds.functions["s3"] = wrap(make_plane_pl(mb.verts, mb.faces, ms3));

    Claim refok;
    refok.check = "decomposition";
    refok.label = "the refined complex carries the same function";
    refok.provenance = "derived";
    refok.rule = "sum";
    refok.summands = {"f_refined"};
    refok.target = "self";
    ds.claims.push_back(refok);

    Claim maxdec;
    maxdec.check = "decomposition";
    maxdec.label = "f = max{u1, u2} with both summands unimodal";
    maxdec.provenance = "paper";
    maxdec.rule = "max";
    maxdec.summands = {"u1", "u2"};
    maxdec.target = "f_refined";
    ds.claims.push_back(maxdec);

    Claim sumdec;
    sumdec.check = "decomposition";
    sumdec.label = "f = s1 + s2 + s3 with all summands unimodal";
    sumdec.provenance = "paper";
    sumdec.rule = "sum";
    sumdec.summands = {"s1", "s2", "s3"};
    sumdec.target = "f_refined";
    ds.claims.push_back(sumdec);

    Claim nu;
    nu.check = "not_unimodal";
    nu.label = "f itself is not unimodal";
    nu.provenance = "paper";
    ds.claims.push_back(nu);

    Claim uinf;
    uinf.check = "ucat";
    uinf.label = "ucat^inf(f) = 2";
    uinf.provenance = "paper";
    uinf.p_infinity = true;
    uinf.relation = "=";
    uinf.value = 2;
    uinf.rule = "max";
    uinf.summands = {"u1", "u2"};
    uinf.target = "f_refined";
    ds.claims.push_back(uinf);

    Claim usum;
    usum.check = "ucat";
    usum.label = "ucat(f) <= 3 via the sum decomposition";
    usum.provenance = "paper";
    usum.relation = "<=";
    usum.value = 3;
    usum.rule = "sum";
    usum.summands = {"s1", "s2", "s3"};
    usum.target = "f_refined";
    ds.claims.push_back(usum);

    Claim uext;
    uext.check = "ucat";
    uext.label = "ucat(f) = 3";
    uext.provenance = "paper";
    uext.scope = "external";
    uext.relation = "=";
    uext.value = 3;
    uext.note = "the six-case analysis ruling out 2 summands is not machine-checked";
    ds.claims.push_back(uext);

    Claim sl;
    sl.check = "superlevel";
    sl.label = "Q = {f >= 1} is connected with five holes and area 32/9";
    sl.provenance = "derived";
    sl.p = Q("1");
    sl.components = 1;
    sl.euler = -4;
    sl.area = Q("32/9");
    sl.has_area = true;
    ds.claims.push_back(sl);
    return ds;
}

} // namespace

std::vector<std::string> dataset_names() {
    std::vector<std::string> names;
    for (int d = 1; d <= 6; ++d) names.push_back("cantor_truncated_" + std::to_string(d));
    names.push_back("circle_8pt");
    names.push_back("graph_example_1");
    names.push_back("graph_example_1_variant");
    names.push_back("graph_example_2");
    names.push_back("plane_example_1");
    names.push_back("plane_example_2");
    return names;
}

Dataset build_dataset(const std::string& name) {
    if (name.rfind("cantor_truncated_", 0) == 0) {
        int d = std::atoi(name.substr(std::string("cantor_truncated_").size()).c_str());
        if (d >= 1 && d <= 12) return build_cantor(d);
    }
    if (name == "circle_8pt") return build_circle_8pt();
    if (name == "graph_example_1") return build_graph_example_1();
    if (name == "graph_example_1_variant") return build_graph_example_1_variant();
    if (name == "graph_example_2") return build_graph_example_2();
    if (name == "plane_example_1") return build_plane_example_1();
    if (name == "plane_example_2") return build_plane_example_2();
    throw UnknownDataset("no dataset named " + name);
}

namespace {

ojson claim_to_json(const Claim& c) {
    ojson j;
    j["check"] = c.check;
    j["label"] = c.label;
    j["provenance"] = c.provenance;
    if (c.scope != "machine") j["scope"] = c.scope;
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.rule.empty()) j["rule"] = c.rule;
    if (c.p != 1) j["p"] = format_scalar(c.p);
    if (c.p_infinity) j["p_infinity"] = true;
    if (!c.summands.empty()) j["summands"] = c.summands;
    if (c.target != "self") j["target"] = c.target;
    if (!c.relation.empty()) j["relation"] = c.relation;
    if (c.value != 0) j["value"] = c.value;
    if (!c.scalars.empty()) {
        ojson a = ojson::array();
        for (auto& s : c.scalars) a.push_back(format_scalar(s));
        j["scalars"] = std::move(a);
    }
    if (!c.int_values.empty()) j["int_values"] = c.int_values;
    if (!c.points.empty()) {
        ojson a = ojson::array();
        for (auto& p : c.points)
            a.push_back(ojson::array({format_scalar(p.x), format_scalar(p.y)}));
        j["points"] = std::move(a);
    }
    if (c.bound != 0 || c.check == "point_value" || c.check == "path_value" ||
        c.check == "variation")
        j["bound"] = format_scalar(c.bound);
    if (!c.vertex_ids.empty()) j["vertex_ids"] = c.vertex_ids;
    if (!c.expectation) j["expectation"] = false;
    if (c.components != 0) j["components"] = c.components;
    if (c.euler != 0) j["euler"] = c.euler;
    if (c.has_area) j["area"] = format_scalar(c.area);
    return j;
}

Claim claim_from_json(const ojson& j) {
    Claim c;
    c.check = j.at("check").get<std::string>();
    c.label = j.value("label", std::string{});
    c.provenance = j.value("provenance", std::string{});
    c.scope = j.value("scope", std::string{"machine"});
    c.note = j.value("note", std::string{});
    c.rule = j.value("rule", std::string{});
    if (j.contains("p")) c.p = parse_scalar(j["p"].get<std::string>());
    c.p_infinity = j.value("p_infinity", false);
    if (j.contains("summands")) c.summands = j["summands"].get<std::vector<std::string>>();
    c.target = j.value("target", std::string{"self"});
    c.relation = j.value("relation", std::string{});
    c.value = j.value("value", 0);
    if (j.contains("scalars"))
        for (auto& s : j["scalars"]) c.scalars.push_back(parse_scalar(s.get<std::string>()));
    if (j.contains("int_values")) c.int_values = j["int_values"].get<std::vector<int>>();
    if (j.contains("points"))
        for (auto& p : j["points"])
            c.points.push_back({parse_scalar(p.at(0).get<std::string>()),
                                parse_scalar(p.at(1).get<std::string>())});
    if (j.contains("bound")) c.bound = parse_scalar(j["bound"].get<std::string>());
    if (j.contains("vertex_ids")) c.vertex_ids = j["vertex_ids"].get<std::vector<std::string>>();
    c.expectation = j.value("expectation", true);
    c.components = j.value("components", 0);
    c.euler = j.value("euler", 0L);
    if (j.contains("area")) {
        c.area = parse_scalar(j["area"].get<std::string>());
        c.has_area = true;
    }
    return c;
}

} // namespace

ojson dataset_to_json(const Dataset& ds) {
    ojson j;
    j["name"] = ds.name;
    j["target"] = to_json(ds.target);
    ojson fns;
    for (auto& [name, f] : ds.functions) fns[name] = to_json(f);
    j["functions"] = std::move(fns);
    ojson claims = ojson::array();
    for (auto& c : ds.claims) claims.push_back(claim_to_json(c));
    j["claims"] = std::move(claims);
    return j;
}

Dataset dataset_from_json(const ojson& j) {
    Dataset ds;
    ds.name = j.at("name").get<std::string>();
    ds.target = function_from_json(j.at("target"));
    if (j.contains("functions"))
        for (auto& [name, f] : j["functions"].items())
            ds.functions[name] = function_from_json(f);
    for (auto& c : j.at("claims")) ds.claims.push_back(claim_from_json(c));
    return ds;
}

namespace {

const AnyFunction& resolve(const Dataset& ds, const std::string& name) {
    if (name == "self" || name.empty()) return ds.target;
    auto it = ds.functions.find(name);
    if (it == ds.functions.end()) throw UnknownDataset(ds.name + ": unknown function " + name);
    return it->second;
}

CombinationRule rule_of(const std::string& name) {
    if (name == "sum") return CombinationRule::Sum;
    if (name == "max") return CombinationRule::Max;
    if (name == "p_power") return CombinationRule::PPower;
    throw UnknownDataset("unknown combination rule " + name);
}

bool any_is_unimodal(const AnyFunction& f) {
    if (f.line) return is_unimodal(*f.line);
    if (f.circle) return is_unimodal_circle(*f.circle);
    if (f.graph) return is_unimodal_graph(*f.graph, UnimodalMode::Contractible);
    if (f.plane) return is_unimodal_plane(*f.plane, UnimodalMode::Contractible);
    throw UnknownDataset("empty function");
}

// combination identity + unimodality of every summand; detail on failure
std::string check_decomposition(const Dataset& ds, const Claim& c) {
    const AnyFunction& target = resolve(ds, c.target);
    CombinationRule rule = rule_of(c.rule);
    for (auto& name : c.summands) {
        // a single-summand "sum" is a pure equality check, not a decomposition
        if (c.summands.size() > 1 && !any_is_unimodal(resolve(ds, name)))
            return "summand " + name + " is not unimodal";
    }
    if (target.graph) {
        std::vector<GraphPL> summands;
        for (auto& name : c.summands) summands.push_back(*resolve(ds, name).graph);
        if (!verify_combination(summands, rule, *target.graph, c.p))
            return "combination identity fails";
        return {};
    }
    if (target.plane) {
        std::vector<PlanePL> summands;
        for (auto& name : c.summands) summands.push_back(*resolve(ds, name).plane);
        if (!verify_combination_plane(summands, rule, *target.plane, c.p))
            return "combination identity fails";
        return {};
    }
    if (target.circle) {
        if (rule != CombinationRule::Sum) return "only sum decompositions on the circle";
        const CirclePL& t = *target.circle;
        for (auto& name : c.summands) {
            const CirclePL& s = *resolve(ds, name).circle;
            if (s.angles != t.angles) return "summand knots differ from the target";
        }
        for (size_t i = 0; i < t.angles.size(); ++i) {
            AlgebraicSum sum{Scalar(0)};
            for (auto& name : c.summands) {
                const CirclePL& s = *resolve(ds, name).circle;
                sum += AlgebraicSum::pow(s.values[i], s.exponent);
            }
            if (compare(sum, AlgebraicSum::pow(t.values[i], t.exponent)) != 0)
                return "sum differs at a knot";
        }
        return {};
    }
    if (target.line) {
        const PLFunction& t = *target.line;
        std::vector<Scalar> grid = t.breakpoints;
        for (auto& name : c.summands) {
            const PLFunction& s = *resolve(ds, name).line;
            grid.insert(grid.end(), s.breakpoints.begin(), s.breakpoints.end());
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        for (auto& x : grid) {
            AlgebraicSum sum{Scalar(0)};
            for (auto& name : c.summands) sum += eval(*resolve(ds, name).line, x);
            if (compare(sum, eval(t, x)) != 0) return "sum differs at a refinement breakpoint";
        }
        return {};
    }
    return "unsupported carrier";
}

std::string check_ucat_machine(const Dataset& ds, const Claim& c) {
    const AnyFunction& t = ds.target;
    if (t.line) {
        const PLFunction& f = *t.line;
        int u = f.domain == DomainKind::WholeLine ? ucat_line(f, c.p)
                                                  : ucat_interval(power(f, c.p)).n;
        if (c.relation == "=" && u != c.value) return "computed " + std::to_string(u);
        if (c.relation == "<=" && !(u <= c.value)) return "computed " + std::to_string(u);
        if (c.relation == ">=" && !(u >= c.value)) return "computed " + std::to_string(u);
        return {};
    }
    if (t.circle) {
        int u = ucat_circle(*t.circle, c.p);
        if (c.relation == "=" && u != c.value) return "computed " + std::to_string(u);
        if (c.relation == "<=" && !(u <= c.value)) return "computed " + std::to_string(u);
        if (c.relation == ">=" && !(u >= c.value)) return "computed " + std::to_string(u);
        return {};
    }
    // graph / plane: the upper bound comes from the certified decomposition,
    // the lower bound 2 from non-unimodality
    if (c.relation == ">=") return "graph/plane lower bounds are not machine-checkable";
    if (c.rule.empty() || c.summands.empty())
        return "no certifying decomposition attached to the claim";
    if (static_cast<int>(c.summands.size()) != c.value)
        return "decomposition size differs from the claimed bound";
    std::string dec = check_decomposition(ds, c);
    if (!dec.empty()) return dec;
    if (c.relation == "=") {
        if (c.value != 2) return "only the bound 2 admits a machine lower bound";
        if (any_is_unimodal(ds.target)) return "target is unimodal, so the bound 2 fails";
    }
    return {};
}

VerifyEntry run_claim(const Dataset& ds, const Claim& c) {
    VerifyEntry e;
    e.dataset = ds.name;
    e.claim = c.label.empty() ? c.check : c.label;
    e.provenance = c.provenance;
    if (c.scope == "external") {
        e.status = VerifyStatus::External;
        e.detail = c.note.empty() ? "externally proved in the source; not machine-checked"
                                  : c.note;
        return e;
    }
    std::string fail;
    try {
        if (c.check == "decomposition") {
            fail = check_decomposition(ds, c);
        } else if (c.check == "not_unimodal") {
            const AnyFunction& t = resolve(ds, c.target);
            if (any_is_unimodal(t)) fail = "function is unimodal";
        } else if (c.check == "ucat") {
            fail = check_ucat_machine(ds, c);
        } else if (c.check == "sweep_points") {
            auto pts = sweep_points(*ds.target.line);
            if (pts != c.scalars) {
                fail = "sweep points differ:";
                for (auto& x : pts) fail += " " + format_scalar(x);
            }
        } else if (c.check == "variation") {
            auto v = variation(*ds.target.line, VariationKind::Negative,
                               Interval::open(c.scalars.at(0), c.scalars.at(1)));
            if (compare(v, AlgebraicSum(c.bound)) != 0) fail = "V^- = " + v.str();
        } else if (c.check == "point_value") {
            for (auto& p : c.points) {
                auto v = point_probe(*ds.target.plane, p);
                if (v.base != c.bound) {
                    fail = "value " + format_scalar(v.base) + " at (" + format_scalar(p.x) + "," +
                           format_scalar(p.y) + ")";
                    break;
                }
            }
        } else if (c.check == "point_upper") {
            for (auto& p : c.points) {
                auto v = point_probe(*ds.target.plane, p);
                if (v.base > c.bound) {
                    fail = "value " + format_scalar(v.base) + " at (" + format_scalar(p.x) + "," +
                           format_scalar(p.y) + ")";
                    break;
                }
            }
        } else if (c.check == "superlevel") {
            auto s = superlevel_stats(*ds.target.plane, c.p);
            if (s.components != c.components || s.euler != c.euler)
                fail = "components=" + std::to_string(s.components) +
                       " euler=" + std::to_string(s.euler);
            else if (c.has_area && s.area != c.area)
                fail = "area=" + format_scalar(s.area);
        } else if (c.check == "m_a_plus") {
            for (size_t i = 0; i < c.scalars.size(); ++i) {
                int m = m_a_plus(*ds.target.circle, c.scalars[i]);
                if (m != c.int_values.at(i)) {
                    fail = "M_a^+=" + std::to_string(m) + " at a=" + format_scalar(c.scalars[i]);
                    break;
                }
            }
        } else if (c.check == "path_value") {
            Scalar v = path_value(*ds.target.graph, GraphPoint::at_vertex(c.vertex_ids.at(0)),
                                  GraphPoint::at_vertex(c.vertex_ids.at(1)));
            if (v != c.bound) fail = "pv = " + format_scalar(v);
        } else if (c.check == "lower_bound") {
            auto rep = lower_bound_check(*ds.target.graph, c.vertex_ids);
            if (rep.ok != c.expectation)
                fail = rep.ok ? "bound unexpectedly holds" : "violated at " + rep.violation;
        } else {
            fail = "unknown check kind " + c.check;
        }
    } catch (const Error& err) {
        fail = std::string("error: ") + err.what();
    }
    if (fail.empty()) {
        e.status = VerifyStatus::Pass;
        if (!c.note.empty()) e.detail = c.note;
    } else {
        e.status = VerifyStatus::Fail;
        e.detail = fail;
    }
    return e;
}

} // namespace

bool VerifyReport::all_machine_checks_pass() const {
    for (auto& e : entries)
        if (e.status == VerifyStatus::Fail) return false;
    return true;
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    std::string current;
    for (auto& e : entries) {
        if (e.dataset != current) {
            current = e.dataset;
            os << current << "\n";
        }
        const char* tag = e.status == VerifyStatus::Pass     ? "pass"
                          : e.status == VerifyStatus::Fail   ? "FAIL"
                                                             : "externally proved";
        os << "  [" << tag << "] (" << e.provenance << ") " << e.claim;
        if (!e.detail.empty()) os << " -- " << e.detail;
        os << "\n";
    }
    return os.str();
}

ojson VerifyReport::json() const {
    ojson arr = ojson::array();
    for (auto& e : entries) {
        ojson j;
        j["dataset"] = e.dataset;
        j["claim"] = e.claim;
        j["provenance"] = e.provenance;
        j["status"] = e.status == VerifyStatus::Pass     ? "pass"
                      : e.status == VerifyStatus::Fail   ? "fail"
                                                         : "external";
        if (!e.detail.empty()) j["detail"] = e.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

VerifyReport verify_dataset(const Dataset& ds) {
    VerifyReport rep;
    for (auto& c : ds.claims) rep.entries.push_back(run_claim(ds, c));
    return rep;
}

VerifyReport verify_all() {
    VerifyReport rep;
    for (auto& name : dataset_names()) {
        auto sub = verify_dataset(build_dataset(name));
        rep.entries.insert(rep.entries.end(), sub.entries.begin(), sub.entries.end());
    }
    return rep;
}

} // namespace ucat
