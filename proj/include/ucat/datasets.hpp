#pragma once

#include <map>
#include <string>
#include <vector>

#include "ucat/json_io.hpp"

namespace ucat {

// A machine-checkable (or externally proved) claim about a dataset. Which
// fields apply depends on `check`:
//   decomposition : rule, p, summands, target, unimodal summands expected
//   not_unimodal  : the target is not unimodal (contractible mode)
//   ucat          : p / p_infinity, relation, value, scope; for scope
//                   "machine" on graph/plane carriers, `rule`+`summands`
//                   certify the upper bound
//   sweep_points  : expected sweep positions of a line target
//   variation     : expected V^* over an interval of a line target
//   point_value   : exact value at a labeled plane point
//   point_upper   : base-space upper bound at each listed plane point
//   superlevel    : component/Euler/area structure of a plane superlevel set
//   m_a_plus      : expected M_a^+ of a circle target at an angle
//   path_value    : expected pv between two graph vertices
//   lower_bound   : the path-value lower bound holds (or fails) for points
struct Claim {
    std::string check;
    std::string label;
    std::string provenance; // "paper" | "derived"
    std::string scope = "machine"; // or "external"
    std::string note;

    std::string rule; // "sum" | "max" | "p_power"
    Scalar p{1};
    bool p_infinity = false;
    std::vector<std::string> summands;
    std::string target = "self";

    std::string relation; // "=", "<=", ">="
    int value = 0;

    std::vector<Scalar> scalars;          // sweep points / variation bounds / angles
    std::vector<int> int_values;          // expected counts aligned with scalars
    std::vector<Point2> points;           // plane probe points
    Scalar bound{0};                      // base-space value or bound
    std::vector<std::string> vertex_ids;  // graph points
    bool expectation = true;              // expected boolean outcome
    int components = 0;
    long euler = 0;
    Scalar area{0};
    bool has_area = false;
};

struct Dataset {
    std::string name;
    AnyFunction target;
    std::map<std::string, AnyFunction> functions; // named summands / refinements
    std::vector<Claim> claims;
};

std::vector<std::string> dataset_names();
Dataset build_dataset(const std::string& name);

ojson dataset_to_json(const Dataset& ds);
Dataset dataset_from_json(const ojson& j);

enum class VerifyStatus { Pass, Fail, External };

struct VerifyEntry {
    std::string dataset;
    std::string claim;
    std::string provenance;
    VerifyStatus status = VerifyStatus::Pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool all_machine_checks_pass() const;
    std::string text() const;
    ojson json() const;
};

VerifyReport verify_dataset(const Dataset& ds);
VerifyReport verify_all();

} // namespace ucat
