#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mrep/appendix.hpp"
#include "mrep/downgrade.hpp"
#include "mrep/implicitize.hpp"

namespace mrep {

using Json = nlohmann::json;

// Input schema: {"field": "Q" | {"p": <prime>}, "variables": [...], "forms": [...]}.
// Throws ValidationError on any schema or content problem.
ParamSystem system_from_json(const Json& j);
ParamSystem read_system_file(const std::string& path);
Json system_to_json(const ParamSystem& sys);
std::string field_name(const Field& f);

Json to_json(const ThresholdReport& r);
Json to_json(const MatrixRep& m);
Json to_json(const ResolutionRanks& r);
Json to_json(const LambdaVerdict& v);
Json to_json(const CgzReport& r);
Json to_json(const Implicitization& imp, const std::vector<std::string>& t_names);
Json to_json(const ImplicitVerdict& v, const std::vector<std::string>& t_names);
Json to_json(const LefschetzVerdict& v);
Json to_json(const SignVerdict& v);
Json to_json(const AnnihilationVerdict& v);
Json to_json(const KernelVerdict& v);
// {"table": name, "points": [...], "all_pass": bool}
Json grid_json(const std::string& name, const std::vector<GridPoint>& grid);

}  // namespace mrep
