#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "dmm/bounds.hpp"
#include "dmm/errors.hpp"
#include "dmm/milne.hpp"
#include "dmm/oracle.hpp"
#include "dmm/poly_text.hpp"
#include "dmm/profile.hpp"
#include "dmm/report_io.hpp"
#include "dmm/system_file.hpp"
#include "dmm/table1.hpp"
#include "dmm/validation.hpp"

using namespace dmm;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitValidation = 4;

void emit_bounds(const std::vector<BoundReport>& rows, const std::string& format) {
  if (format == "json") std::cout << to_json(rows).dump(2) << "\n";
  else std::cout << bounds_csv(rows);
}

void require_square(const SystemFile& sys) {
  if (sys.polys.size() != sys.nvars())
    throw PreconditionError("expected " + std::to_string(sys.nvars()) + " polynomials, found " + std::to_string(sys.polys.size()));
}

void require_bivariate(const SystemFile& sys) {
  if (sys.nvars() != 2 || sys.polys.size() != 2) throw PreconditionError("command needs two polynomials in two variables");
}

IsolationBox parse_box(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) v.push_back(parse_rational(item));
  if (v.size() != 4) throw ParseError("--box expects xlo,xhi,ylo,yhi");
  return IsolationBox{v[0], v[1], v[2], v[3], 0, 0};
}

int cmd_bounds(const std::string& path, int ell, const std::string& mode, const std::string& format) {
  SystemFile sys = load_system(path);
  require_square(sys);
  std::vector<BoundReport> rows;
  if (sys.nvars() == 1) {
    rows = dmm1_product_bounds(sys.polys[0], ell);
  } else if (mode == "dense") {
    rows = dmm_n_dense_bounds(static_cast<int>(sys.nvars()), sys.degree(), sys.bitsize());
  } else {
    SystemProfile prof = system_profile(sys.polys);
    for (const auto& w : prof.warnings) std::cerr << "warning: " << w << "\n";
    if (mode == "zero-dim") rows = dmm_n_bounds(prof, ell);
    else if (mode == "mixedvol") rows = dmm_n_mixedvol_bounds(prof, ell);
    else {
      rows = dmm_n_excess_bounds(prof, ell);
      auto dense = dmm_n_excess_dense_bounds(static_cast<int>(sys.nvars()), sys.degree(), sys.bitsize());
      rows.insert(rows.end(), dense.begin(), dense.end());
    }
  }
  emit_bounds(rows, format);
  return kExitOk;
}

int cmd_isolate(const std::string& path, const std::string& box) {
  SystemFile sys = load_system(path);
  require_bivariate(sys);
  std::optional<IsolationBox> initial;
  if (!box.empty()) initial = parse_box(box);
  std::cout << to_json(isolate(sys.polys[0], sys.polys[1], initial)).dump(2) << "\n";
  return kExitOk;
}

int cmd_table1(const std::string& format) {
  json out = json::array();
  std::string text = "n,d,tau,column,computed,printed,diff,status\n";
  bool ok = true;
  for (const auto& ref : kTable1) {
    for (const auto& r : positive_min_bounds(ref.n, ref.d, ref.tau)) {
      long printed = table1_printed(ref, r.name);
      Integer diff = r.rounded - printed;
      std::string status = diff == 0 ? "match" : abs(diff) <= table1_tolerance(r.name) ? "within-tolerance" : "MISMATCH";
      if (status == "MISMATCH" && r.name != "m_DMM") ok = false;
      text += std::to_string(ref.n) + "," + std::to_string(ref.d) + "," + std::to_string(ref.tau) + "," + r.name + "," +
              r.rounded.get_str() + "," + std::to_string(printed) + "," + diff.get_str() + "," + status + "\n";
      json row;
      row["n"] = ref.n;
      row["d"] = ref.d;
      row["tau"] = ref.tau;
      row["column"] = r.name;
      row["computed"] = r.rounded.get_str();
      row["printed"] = printed;
      row["diff"] = diff.get_str();
      row["status"] = status;
      out.push_back(row);
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  else std::cout << text;
  return ok ? kExitOk : kExitValidation;
}

int cmd_eigen(int n, int tau, const std::string& format) {
  auto rows = eigen_bounds(n, tau);
  emit_bounds(rows, format);
  if (format != "json") {
    const BoundReport* sep = nullptr;
    const BoundReport* gap = nullptr;
    for (const auto& r : rows) {
      if (r.name == "eigen_sep_lower") sep = &r;
      if (r.name == "eigen_gap_lower") gap = &r;
    }
    std::cout << "# separation exponent " << sep->rounded << " vs Gap exponent " << gap->rounded << "\n";
  }
  return kExitOk;
}

int cmd_steps(const std::string& path) {
  SystemFile sys = load_system(path);
  require_square(sys);
  const int n = static_cast<int>(sys.nvars()), d = std::max(sys.degree(), 1), tau = sys.bitsize();
  json out;
  StepBound dense = subdivision_step_bound(n, d, tau);
  out["dense"] = {{"n", n}, {"d", d}, {"tau", tau}, {"pruned_nodes", dense.pruned_nodes.to_string()},
                  {"bound_value", dense.tree_nodes_ceil.get_str()}};
  if (n == 1) {
    LogExpr closed = Rational(8L * d * d) * LogExpr::lg(d) + Rational(3L * d) * LogExpr::lg(d) + LogExpr(5L * d * tau);
    LogExpr diff = dense.pruned_nodes - closed;
    out["n1_closed_form"] = {{"expression", closed.to_string()},
                             {"value_ceil", ceil_exponent(closed).get_str()},
                             {"matches", diff.is_rational() && diff.constant() == 0}};
  } else {
    SystemProfile prof = system_profile(sys.polys);
    if (prof.D >= 1) {
      StepBound pb = subdivision_step_bound(prof);
      out["profile"] = {{"D", prof.D.get_str()}, {"bound_value", pb.tree_nodes_ceil.get_str()}};
    }
  }
  int code = kExitOk;
  if (n == 2) {
    IsolationResult res = isolate(sys.polys[0], sys.polys[1]);
    bool within = Integer(res.stats.oracle_calls) <= res.stats.bound_value;
    out["measured"] = {{"oracle_calls", res.stats.oracle_calls}, {"max_depth", res.stats.max_depth}, {"within_bound", within}};
    if (!within) code = kExitValidation;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

int cmd_validate(const std::string& path, const std::string& format) {
  SystemFile sys = load_system(path);
  require_bivariate(sys);
  ValidationReport rep = validate_bounds(sys);
  if (rep.system.empty()) rep.system = path;
  if (format == "json") std::cout << to_json(rep).dump(2) << "\n";
  else std::cout << validation_csv(rep);
  return rep.all_pass() ? kExitOk : kExitValidation;
}

int cmd_oracle(const std::string& path, const std::string& width) {
  SystemFile sys = load_system(path);
  require_bivariate(sys);
  RootOracle2D oracle(sys.polys[0], sys.polys[1]);
  std::vector<OracleRoot> roots = oracle.roots();
  Rational w = parse_rational(width);
  if (w <= 0) throw PreconditionError("--width must be positive");
  for (auto& r : roots) oracle.refine(r, w);
  std::cout << to_json(roots).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aggregate root-separation bounds and bivariate real-root isolation"};
  app.require_subcommand(1);

  std::string path, mode = "zero-dim", format = "csv", box, width = "1/1024";
  int ell = 1, n = 2, tau = 1;

  auto* bounds = app.add_subcommand("bounds", "Bound reports for a system file");
  bounds->add_option("system", path, "System file")->required();
  bounds->add_option("--ell", ell, "Number of root pairs in the product bounds");
  bounds->add_option("--mode", mode, "zero-dim, excess, dense or mixedvol")
      ->check(CLI::IsMember({"zero-dim", "excess", "dense", "mixedvol"}));
  bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* iso = app.add_subcommand("isolate", "Isolate the real roots of a bivariate system");
  iso->add_option("system", path)->required();
  iso->add_option("--box", box, "xlo,xhi,ylo,yhi");

  auto* table = app.add_subcommand("table1", "Positive-minimum bound comparison table");
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* eigen = app.add_subcommand("eigen", "Eigenproblem bounds against the Gap theorem");
  eigen->add_option("--n", n)->required();
  eigen->add_option("--tau", tau)->required();
  eigen->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* steps = app.add_subcommand("steps", "Subdivision step bound and measured oracle calls");
  steps->add_option("system", path)->required();

  auto* validate = app.add_subcommand("validate", "Check bounds against oracle roots");
  validate->add_option("system", path)->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* oracle = app.add_subcommand("oracle", "Independent real roots of a bivariate system");
  oracle->add_option("system", path)->required();
  oracle->add_option("--width", width, "Refine to this width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*bounds) return cmd_bounds(path, ell, mode, format);
    if (*iso) return cmd_isolate(path, box);
    if (*table) return cmd_table1(format);
    if (*eigen) return cmd_eigen(n, tau, format);
    if (*steps) return cmd_steps(path);
    if (*validate) return cmd_validate(path, format);
    if (*oracle) return cmd_oracle(path, width);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
