#include "ucat/json_io.hpp"

#include <fstream>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

ojson scalars_to_json(const std::vector<Scalar>& xs) {
    ojson a = ojson::array();
    for (auto& x : xs) a.push_back(format_scalar(x));
    return a;
}

std::vector<Scalar> scalars_from_json(const ojson& a) {
    std::vector<Scalar> out;
    for (auto& x : a) out.push_back(parse_scalar(x.get<std::string>()));
    return out;
}

void put_exponent(ojson& j, const Scalar& e) {
    if (e != 1) j["exponent"] = format_scalar(e);
}

Scalar get_exponent(const ojson& j) {
    if (j.contains("exponent")) return parse_scalar(j["exponent"].get<std::string>());
    return Scalar(1);
}

} // namespace

std::string AnyFunction::domain() const {
    if (line) return line->domain == DomainKind::WholeLine ? "line" : "interval";
    if (circle) return "circle";
    if (graph) return "graph";
    if (plane) return "plane";
    return "empty";
}

ojson to_json(const PLFunction& f) {
    ojson j;
    j["domain"] = f.domain == DomainKind::WholeLine ? "line" : "interval";
    j["breakpoints"] = scalars_to_json(f.breakpoints);
    j["values"] = scalars_to_json(f.values);
    put_exponent(j, f.exponent);
    return j;
}

ojson to_json(const CirclePL& f) {
    ojson j;
    j["domain"] = "circle";
    j["angles"] = scalars_to_json(f.angles);
    j["values"] = scalars_to_json(f.values);
    put_exponent(j, f.exponent);
    return j;
}

ojson to_json(const GraphPL& f) {
    ojson j;
    j["domain"] = "graph";
    ojson verts = ojson::array();
    for (size_t i = 0; i < f.graph.vertices.size(); ++i) {
        ojson v;
        v["id"] = f.graph.vertices[i];
        auto it = f.graph.coords.find(f.graph.vertices[i]);
        if (it != f.graph.coords.end()) {
            v["x"] = format_scalar(it->second.first);
            v["y"] = format_scalar(it->second.second);
        }
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    ojson edges = ojson::array();
    for (auto [u, v] : f.graph.edges)
        edges.push_back(ojson::array({f.graph.vertices[u], f.graph.vertices[v]}));
    j["edges"] = std::move(edges);
    ojson values;
    for (size_t i = 0; i < f.graph.vertices.size(); ++i)
        values[f.graph.vertices[i]] = format_scalar(f.values[i]);
    j["values"] = std::move(values);
    put_exponent(j, f.exponent);
    return j;
}

ojson to_json(const PlanePL& f) {
    ojson j;
    j["domain"] = "plane";
    ojson verts = ojson::array();
    for (auto& p : f.complex->vertices)
        verts.push_back(ojson::array({format_scalar(p.x), format_scalar(p.y)}));
    j["vertices"] = std::move(verts);
    ojson faces = ojson::array();
    for (auto& face : f.complex->faces) {
        ojson fa = ojson::array();
        for (size_t i : face) fa.push_back(i);
        faces.push_back(std::move(fa));
    }
    j["faces"] = std::move(faces);
    j["values"] = scalars_to_json(f.values);
    put_exponent(j, f.exponent);
    return j;
}

ojson to_json(const AnyFunction& f) {
    if (f.line) return to_json(*f.line);
    if (f.circle) return to_json(*f.circle);
    if (f.graph) return to_json(*f.graph);
    if (f.plane) return to_json(*f.plane);
    throw ParseError("empty function");
}

PLFunction pl_from_json(const ojson& j) {
    DomainKind dom = j.at("domain").get<std::string>() == "line" ? DomainKind::WholeLine
                                                                 : DomainKind::ClosedInterval;
    return make_pl(scalars_from_json(j.at("breakpoints")), scalars_from_json(j.at("values")), dom,
                   get_exponent(j));
}

CirclePL circle_from_json(const ojson& j) {
    return make_circle(scalars_from_json(j.at("angles")), scalars_from_json(j.at("values")),
                       get_exponent(j));
}

GraphPL graph_from_json(const ojson& j) {
    std::vector<VertexId> ids;
    std::map<VertexId, std::pair<Scalar, Scalar>> coords;
    for (auto& v : j.at("vertices")) {
        VertexId id = v.at("id").get<std::string>();
        ids.push_back(id);
        if (v.contains("x"))
            coords[id] = {parse_scalar(v.at("x").get<std::string>()),
                          parse_scalar(v.at("y").get<std::string>())};
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    std::map<VertexId, Scalar> values;
    for (auto& [k, v] : j.at("values").items()) values[k] = parse_scalar(v.get<std::string>());
    return make_graph_pl(make_graph(std::move(ids), edges, std::move(coords)), values,
                         get_exponent(j));
}

PlanePL plane_from_json(const ojson& j) {
    std::vector<Point2> verts;
    for (auto& v : j.at("vertices"))
        verts.push_back({parse_scalar(v.at(0).get<std::string>()),
                         parse_scalar(v.at(1).get<std::string>())});
    std::vector<std::vector<size_t>> faces;
    for (auto& f : j.at("faces")) {
        std::vector<size_t> face;
        for (auto& i : f) face.push_back(i.get<size_t>());
        faces.push_back(std::move(face));
    }
    return make_plane_pl(std::move(verts), std::move(faces), scalars_from_json(j.at("values")),
                         get_exponent(j));
}

AnyFunction function_from_json(const ojson& j) {
    AnyFunction f;
    std::string d = j.at("domain").get<std::string>();
    if (d == "line" || d == "interval")
        f.line = pl_from_json(j);
    else if (d == "circle")
        f.circle = circle_from_json(j);
    else if (d == "graph")
        f.graph = graph_from_json(j);
    else if (d == "plane")
        f.plane = plane_from_json(j);
    else
        throw ParseError("unknown domain: " + d);
    return f;
}

AnyFunction load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    // dataset files wrap the target function
    if (j.contains("target")) return function_from_json(j.at("target"));
    return function_from_json(j);
}

std::string dump_canonical(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace ucat
