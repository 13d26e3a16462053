#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "ucat/circle.hpp"
#include "ucat/graph.hpp"
#include "ucat/pl_function.hpp"
#include "ucat/plane.hpp"

namespace ucat {

using ojson = nlohmann::ordered_json;

// Any of the four carriers; exactly one member is set.
struct AnyFunction {
    std::optional<PLFunction> line;
    std::optional<CirclePL> circle;
    std::optional<GraphPL> graph;
    std::optional<PlanePL> plane;

    std::string domain() const;
};

ojson to_json(const PLFunction& f);
ojson to_json(const CirclePL& f);
ojson to_json(const GraphPL& f);
ojson to_json(const PlanePL& f);
ojson to_json(const AnyFunction& f);

PLFunction pl_from_json(const ojson& j);
CirclePL circle_from_json(const ojson& j);
GraphPL graph_from_json(const ojson& j);
PlanePL plane_from_json(const ojson& j);
AnyFunction function_from_json(const ojson& j);

AnyFunction load_function_file(const std::string& path);

// Canonical text form used for the committed files: 2-space indent plus a
// trailing newline, no locale-dependent content.
std::string dump_canonical(const ojson& j);

} // namespace ucat
