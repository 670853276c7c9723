#include "mrep_cli/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "mrep/errors.hpp"
#include "mrep/json_io.hpp"

namespace mrep::cli {

namespace {

constexpr std::size_t kLefschetzMaxN = 5;
constexpr unsigned kLefschetzMaxM = 5;
constexpr unsigned kSignsMax = 12;
constexpr unsigned kLemmeMax = 8;

class UsageError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct Options {
  std::string input;
  std::string out_path;
  std::string mu = "auto";
  std::optional<int> tune;
  std::optional<int> lmax;
  std::string format = "json";
  bool exact = false;
  std::size_t n = 0;
  unsigned m = 0, d = 0, t = 0, N = 4;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw ValidationError("cannot write " + o.out_path);
  f << text << "\n";
}

int resolve_mu(const Options& o, KoszulLab& lab) {
  if (o.tune) return tuned_mu(lab, *o.tune);
  if (o.mu == "auto") return lab.mu0();
  std::size_t used = 0;
  int mu = 0;
  try {
    mu = std::stoi(o.mu, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != o.mu.size() || o.mu.empty()) throw UsageError("--mu must be an integer or auto");
  if (mu < 0) throw UsageError("--mu must be >= 0");
  return mu;
}

LabOptions lab_options(const Options& o) {
  LabOptions lo;
  lo.exact = o.exact;
  return lo;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  ParamSystem sys = read_system_file(o.input);
  KoszulLab lab(sys, lab_options(o));
  const ThresholdReport& r = lab.report();
  emit(to_json(r).dump(2), o, out);
  return r.all_pass() ? kOk : kHypothesis;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  ParamSystem sys = read_system_file(o.input);
  KoszulLab lab(sys, lab_options(o));
  lab.report();
  const int mu = resolve_mu(o, lab);
  MatrixRep m = build_matrix(lab, mu, o.lmax);
  if (o.format == "text")
    emit(matrix_text(m), o, out);
  else
    emit(to_json(m).dump(2), o, out);
  return kOk;
}

int cmd_implicitize(const Options& o, std::ostream& out) {
  ParamSystem sys = read_system_file(o.input);
  KoszulLab lab(sys, lab_options(o));
  lab.report();
  const int mu = resolve_mu(o, lab);
  Implicitization imp = implicitize(lab, mu, o.lmax);
  emit(to_json(imp, sys.t_names()).dump(2), o, out);
  return imp.verified() ? kOk : kHypothesis;
}

int emit_grid(const std::string& name, const std::vector<GridPoint>& grid, const Options& o, std::ostream& out) {
  Json j = grid_json(name, grid);
  emit(j.dump(2), o, out);
  return j["all_pass"].get<bool>() ? kOk : kHypothesis;
}

int cmd_lefschetz(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > kLefschetzMaxN || o.m < 1 || o.m > kLefschetzMaxM)
    throw UsageError("lefschetz needs 1 <= n <= " + std::to_string(kLefschetzMaxN) + " and 1 <= m <= " +
                     std::to_string(kLefschetzMaxM));
  return emit_grid("lefschetz n=" + std::to_string(o.n) + " m=" + std::to_string(o.m), lefschetz_grid(o.n, o.m), o, out);
}

int cmd_signs(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.n > kSignsMax || o.d < 2 || o.d > kSignsMax)
    throw UsageError("signs needs 2 <= n, d <= " + std::to_string(kSignsMax));
  SignVerdict v = sign_pattern(static_cast<unsigned>(o.n), o.d, false);
  emit(to_json(v).dump(2), o, out);
  return v.holds() ? kOk : kHypothesis;
}

int cmd_lemme(const Options& o, std::ostream& out) {
  if (o.m < 1 || o.m > kLemmeMax || o.t > kLemmeMax || o.N < 1 || o.N > kLemmeMax)
    throw UsageError("lemme needs 1 <= m <= " + std::to_string(kLemmeMax) + ", t <= " + std::to_string(kLemmeMax) +
                     ", 1 <= N <= " + std::to_string(kLemmeMax));
  return emit_grid("lemme m=" + std::to_string(o.m) + " t=" + std::to_string(o.t), lemme_grid(o.m, o.t, o.N), o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Matrix representations of parameterized hypersurfaces"};
  app.name("mrep");
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* c) {
    c->add_option("input", o.input, "JSON input file")->required();
    c->add_option("--out", o.out_path, "write output to this file instead of stdout");
    c->add_flag("--exact", o.exact, "compute all dimensions over Q instead of modulo a large prime");
  };
  auto add_mu = [&](CLI::App* c) {
    c->add_option("--mu", o.mu, "degree mu, or auto for the threshold degree")->default_val("auto");
    c->add_option("--tune", o.tune, "choose mu by the column-count heuristic for this l");
    c->add_option("--lmax", o.lmax, "largest T-degree of columns")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "threshold report with bound checks");
  add_input(analyze);
  auto* matrix = app.add_subcommand("matrix", "matrix representation M_mu");
  add_input(matrix);
  add_mu(matrix);
  matrix->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* implicit = app.add_subcommand("implicitize", "implicit equation from M_mu");
  add_input(implicit);
  add_mu(implicit);

  auto* appendix = app.add_subcommand("appendix", "exhaustive checks of the appendix statements");
  appendix->require_subcommand(1);
  auto* lef = appendix->add_subcommand("lefschetz", "multiplication by a power of x_1+...+x_n on Q[x]/(x_i^m)");
  lef->add_option("--n", o.n)->required();
  lef->add_option("--m", o.m)->required();
  auto* signs = appendix->add_subcommand("signs", "sign pattern of (1-t^d)^n/(1-t)^(n-1)");
  signs->add_option("--n", o.n)->required();
  signs->add_option("--d", o.d)->required();
  auto* lemme = appendix->add_subcommand("lemme", "annihilation and kernel structure for (x+a)^t");
  lemme->add_option("--m", o.m)->required();
  lemme->add_option("--t", o.t)->required();
  lemme->add_option("--N", o.N, "nilpotency order of a")->default_val(4);
  for (auto* c : {lef, signs, lemme}) c->add_option("--out", o.out_path, "write output to this file instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*matrix) return cmd_matrix(o, out);
    if (*implicit) return cmd_implicitize(o, out);
    if (*lef) return cmd_lefschetz(o, out);
    if (*signs) return cmd_signs(o, out);
    if (*lemme) return cmd_lemme(o, out);
  } catch (const ValidationError& e) {
    err << "mrep: " << e.what() << "\n";
    return kValidation;
  } catch (const HypothesisViolation& e) {
    err << "mrep: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::exception& e) {
    err << "mrep: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace mrep::cli
