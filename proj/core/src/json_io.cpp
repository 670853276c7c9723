#include "mrep/json_io.hpp"

#include <fstream>

#include "mrep/errors.hpp"

namespace mrep {

namespace {

template <class Map>
Json int_table(const Map& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string field_name(const Field& f) { return f.is_rational() ? "Q" : "GF(" + std::to_string(f.characteristic()) + ")"; }

ParamSystem system_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("input must be a JSON object");
  for (const char* key : {"field", "variables", "forms"})
    if (!j.contains(key)) throw ValidationError(std::string("input is missing \"") + key + "\"");
  Field field;
  const Json& fj = j.at("field");
  if (fj.is_string()) {
    if (fj.get<std::string>() != "Q") throw ValidationError("field must be \"Q\" or {\"p\": prime}");
  } else if (fj.is_object() && fj.contains("p") && fj.at("p").is_number_unsigned()) {
    field = Field::prime(fj.at("p").get<std::uint64_t>());
  } else {
    throw ValidationError("field must be \"Q\" or {\"p\": prime}");
  }
  auto strings = [&](const char* key) {
    const Json& a = j.at(key);
    if (!a.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : a) {
      if (!e.is_string()) throw ValidationError(std::string("\"") + key + "\" must be an array of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  return ParamSystem::parse(field, strings("variables"), strings("forms"));
}

ParamSystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError("input file " + path + " is not valid JSON: " + e.what());
  }
  return system_from_json(j);
}

Json system_to_json(const ParamSystem& sys) {
  Json out;
  if (sys.field().is_rational())
    out["field"] = "Q";
  else
    out["field"] = {{"p", sys.field().characteristic()}};
  out["variables"] = sys.x_names();
  Json forms = Json::array();
  for (const auto& f : sys.forms()) forms.push_back(print_poly(f, sys.x_names()));
  out["forms"] = forms;
  return out;
}

Json to_json(const ThresholdReport& r) {
  Json out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["field"] = r.field;
  out["rank_field"] = r.rank_field;
  out["window_top"] = r.window_top;
  out["hilb_RmodI"] = int_table(r.hilb_RmodI);
  out["hilb_RmodIsat"] = int_table(r.hilb_RmodIsat);
  out["h_dims"] = int_table(r.h_dims);
  out["h0m_H1"] = int_table(r.h0m_H1);
  out["indeg_H1"] = optional_json(r.indeg_H1);
  out["end_H1"] = optional_json(r.end_H1);
  out["indeg_H2"] = optional_json(r.indeg_H2);
  out["indeg_H0mH1"] = optional_json(r.indeg_H0mH1);
  out["indeg_Isat"] = optional_json(r.indeg_Isat);
  out["end_H0m_RmodI"] = optional_json(r.end_H0m_RmodI);
  out["end_RmodI"] = optional_json(r.end_RmodI);
  out["mu0"] = r.mu0;
  out["nu0"] = r.nu0;
  out["regularity"] = optional_json(r.regularity);
  out["dim_RmodI"] = r.dim_RmodI;
  out["mprimary"] = r.mprimary;
  out["base_degree"] = r.base_degree;
  Json checks = Json::array();
  for (const auto& c : r.bound_checks)
    checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"pass", c.pass}, {"note", c.note}});
  out["bound_checks"] = checks;
  out["warnings"] = r.warnings;
  out["all_pass"] = r.all_pass();
  return out;
}

Json to_json(const MatrixRep& m) {
  Json out;
  out["mu"] = m.mu;
  out["field"] = field_name(m.field);
  out["nrows"] = m.nrows();
  out["ncols"] = m.ncols();
  Json rows = Json::array();
  for (const auto& r : m.rows) rows.push_back(monomial_string(r, m.x_names));
  out["row_monomials"] = rows;
  Json cols = Json::array();
  for (const auto& c : m.columns) {
    Json entries = Json::array();
    for (const auto& e : c.entries) entries.push_back(print_poly(e, m.t_names));
    cols.push_back({{"tdegree", c.tdegree}, {"entries", entries}});
  }
  out["columns"] = cols;
  Json ranks = Json::object();
  for (const auto& [ell, p] : m.predicted) {
    auto it = m.actual.find(ell);
    ranks[std::to_string(ell)] = {{"predicted", p}, {"actual", it == m.actual.end() ? 0 : it->second}};
  }
  out["column_ranks"] = ranks;
  out["warnings"] = m.warnings;
  return out;
}

Json to_json(const ResolutionRanks& r) {
  return {{"mu", r.mu},
          {"b", int_table(r.b)},
          {"b_direct", int_table(r.b_direct)},
          {"beta", int_table(r.beta)},
          {"beta_direct", int_table(r.beta_direct)},
          {"consistent", r.consistent()}};
}

Json to_json(const LambdaVerdict& v) {
  return {{"mu", v.mu},           {"p", v.p},
          {"source_dim", v.source_dim}, {"target_dim", v.target_dim},
          {"rank", v.rank},       {"injective", v.injective},
          {"surjective", v.surjective}, {"bijective", v.bijective},
          {"guaranteed", v.guaranteed}};
}

Json to_json(const CgzReport& r) {
  return {{"dim_Z1", r.dim_Z1}, {"condition", r.condition}, {"mu0", r.mu0}, {"mu0_ok", r.mu0_ok},
          {"rows", r.rows},     {"cols", r.cols},           {"square", r.square}};
}

Json to_json(const ImplicitVerdict& v, const std::vector<std::string>& t_names) {
  Json out = {{"vanishes", v.vanishes}, {"primitive", v.primitive}, {"repeated_factor", v.repeated_factor}};
  out["residual_degree"] = v.vanishes ? Json(nullptr) : Json(v.residual_degree);
  out["vanishing_factor"] = v.vanishing_factor ? Json(print_poly(*v.vanishing_factor, t_names)) : Json(nullptr);
  return out;
}

Json to_json(const Implicitization& imp, const std::vector<std::string>& t_names) {
  return {{"mu", imp.mu},
          {"rows", imp.rows},
          {"cols", imp.cols},
          {"method", imp.method},
          {"implicit", print_poly(imp.equation, t_names)},
          {"degree", imp.degree},
          {"verified", imp.verified()},
          {"verdict", to_json(imp.verdict, t_names)}};
}

Json to_json(const LefschetzVerdict& v) {
  return {{"n", v.n},
          {"m", v.m},
          {"k", v.k},
          {"t", v.t},
          {"source_dim", v.source_dim},
          {"target_dim", v.target_dim},
          {"rank", v.rank},
          {"injective", v.injective},
          {"surjective", v.surjective},
          {"expected_inj", v.expected_inj},
          {"expected_surj", v.expected_surj},
          {"pass", v.holds()}};
}

Json to_json(const SignVerdict& v) {
  Json c = Json::array();
  for (const auto& x : v.c) c.push_back(x.get_str());
  return {{"n", v.n},
          {"d", v.d},
          {"coefficients", c},
          {"positive_head", v.positive_head},
          {"negative_tail", v.negative_tail},
          {"middle_zero", v.middle_zero},
          {"pass", v.holds()}};
}

Json to_json(const AnnihilationVerdict& v) {
  return {{"m", v.m}, {"t", v.t}, {"j", v.j}, {"a_order", v.a_order}, {"pass", v.annihilated}};
}

Json to_json(const KernelVerdict& v) {
  return {{"m", v.m},
          {"t", v.t},
          {"N", v.N},
          {"observed", v.observed},
          {"predicted", v.predicted},
          {"span_dim", v.span_dim},
          {"span_in_kernel", v.span_in_kernel},
          {"pass", v.holds()}};
}

Json grid_json(const std::string& name, const std::vector<GridPoint>& grid) {
  Json pts = Json::array();
  bool all = true;
  for (const auto& g : grid) {
    pts.push_back({{"point", g.label}, {"pass", g.pass}, {"detail", g.detail}});
    all = all && g.pass;
  }
  return {{"table", name}, {"points", pts}, {"all_pass", all}};
}

}  // namespace mrep
