// tenfold: classify Bloch Hamiltonians, compute their invariants, and run the self-check.
//
// Exit codes: 0 success, 1 classification conflict / failed check / obstruction,
// 2 usage error or malformed input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tenfold/acceptance.hpp"
#include "tenfold/builtin.hpp"
#include "tenfold/model_io.hpp"

namespace {

using json = nlohmann::json;
using namespace tenfold;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kParamNames{"v", "w", "m", "t", "delta", "mu", "coupling", "dv", "theta"};

struct Output {
  std::string format = "text";
  bool quiet = false;
};

struct ModelArgs {
  std::string file;
  std::string builtin;
  std::map<std::string, double> values;
  std::map<std::string, std::vector<CLI::Option*>> opts;  // one per subcommand
  int grid = 0;
  double tol = kSymmetryTol;

  builtin::Params overrides() const {
    builtin::Params p;
    for (const auto& [name, list] : opts)
      for (const auto* opt : list)
        if (opt->count() > 0) p[name] = values.at(name);
    return p;
  }
};

/// Collects the report as ordered text lines and a JSON object at the same time.
struct Report {
  std::vector<std::string> lines;
  json doc = json::object();

  void line(std::string s) { lines.push_back(std::move(s)); }

  void emit(const Output& out) const {
    if (out.quiet) return;
    if (out.format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

void add_model_options(CLI::App* cmd, ModelArgs& args, bool positional = true) {
  if (positional) cmd->add_option("model", args.file, "Model file (JSON)");
  cmd->add_option("--builtin", args.builtin, "Built-in model: ssh, qwz, kitaev, bhz, rice-mele");
  for (const auto& name : kParamNames) {
    args.values[name] = 0.0;
    args.opts[name].push_back(cmd->add_option("--" + name, args.values[name], "Builtin parameter " + name));
  }
  cmd->add_option("--grid", args.grid, "Points per k axis")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", args.tol, "Symmetry residual tolerance")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--quiet", out.quiet, "Suppress report output");
}

/// --grid beats TENFOLD_GRID beats the caller's default (0 means "module default").
int grid_points(const ModelArgs& args) {
  if (args.grid > 0) return args.grid;
  if (const char* env = std::getenv("TENFOLD_GRID")) {
    try {
      const int g = std::stoi(env);
      if (g > 0) return g;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("TENFOLD_GRID must be a positive integer, got '") + env + "'");
  }
  return 0;
}

io::LoadedModel load_model(const ModelArgs& args) {
  if (!args.builtin.empty() && !args.file.empty())
    throw InvalidArgument("give either a model file or --builtin, not both");
  if (!args.builtin.empty()) {
    auto b = builtin::make(args.builtin, args.overrides());
    return {std::move(b.model), std::move(b.symmetries)};
  }
  if (args.file.empty()) throw InvalidArgument("no model: pass a model file or --builtin NAME");
  if (!args.overrides().empty()) throw InvalidArgument("parameter flags need --builtin");
  return io::load(args.file);
}

/// "name" or "name:key=value,key=value" when not an existing file.
io::LoadedModel load_reference(const std::string& ref) {
  if (std::filesystem::exists(ref)) return io::load(ref);
  const auto colon = ref.find(':');
  const std::string name = ref.substr(0, colon);
  builtin::Params p;
  if (colon != std::string::npos) {
    std::stringstream rest(ref.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidArgument("bad reference parameter '" + item + "'");
      try {
        p[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw InvalidArgument("bad reference parameter '" + item + "'");
      }
    }
  }
  auto b = builtin::make(name, p);
  return {std::move(b.model), std::move(b.symmetries)};
}

KGrid classification_grid(const BlochModel& model, int points) {
  const int d = model.dim();
  return KGrid(d, points > 0 ? points : default_points(d));
}

// ---------------------------------------------------------------------------

int cmd_classify(const ModelArgs& args, const Output& out) {
  const auto loaded = load_model(args);
  const BlochModel& model = loaded.model;
  const auto cls = classify(model, loaded.symmetries, classification_grid(model, grid_points(args)), args.tol);
  const int d = model.dim();
  const auto group = expected_group(cls.az, d);

  Report r;
  r.line(cls.az.label + " s=" + std::to_string(cls.az.s) + " d=" + std::to_string(d) +
         " group=" + std::string(to_string(group)) + " family=" + std::string(to_string(cls.az.family)));
  r.doc = {{"label", cls.az.label},
           {"family", to_string(cls.az.family)},
           {"s", cls.az.s},
           {"d", d},
           {"group", to_string(group)}};
  json checks = json::array();
  for (const auto& c : cls.checks) {
    r.line("check=" + c.name + " supplied=" + (c.supplied ? "1" : "0") + " implied=" +
           (c.implied ? "1" : "0") + " residual=" + fmt(c.residual) + " accepted=" +
           (c.accepted ? "1" : "0"));
    checks.push_back({{"name", c.name},
                      {"supplied", c.supplied},
                      {"implied", c.implied},
                      {"residual", c.residual},
                      {"accepted", c.accepted}});
  }
  r.doc["checks"] = std::move(checks);
  r.emit(out);
  return kExitOk;
}

int cmd_invariant(const ModelArgs& args, const std::string& type, const Output& out) {
  const auto loaded = load_model(args);
  const BlochModel& model = loaded.model;
  const int d = model.dim();
  const int points = grid_points(args);
  const auto cls = classify(model, loaded.symmetries, classification_grid(model, points), args.tol);
  const auto group = expected_group(cls.az, d);
  const auto pts = [&](int fallback) { return points > 0 ? points : fallback; };

  std::optional<InvariantResult> result;
  if (type == "auto") {
    InvariantOptions opt;
    opt.points = points;
    opt.tol = args.tol;
    const auto outcome = invariant_for(model, cls, d, opt);
    if (outcome.status == DispatchStatus::NoInvariant) {
      Report r;
      r.line("kind=none value=0 residual=0 expected_group=" + std::string(to_string(group)));
      r.doc = {{"kind", "none"}, {"expected_group", to_string(group)}};
      r.emit(out);
      return kExitOk;
    }
    if (outcome.status == DispatchStatus::Unsupported)
      throw SymmetryViolation("no invariant implemented for class " + cls.az.label + " in d=" +
                              std::to_string(d));
    result = outcome.result;
  } else if (type == "chern") {
    result = chern(flatten(model, KGrid(d, pts(default_points(d)))));
  } else if (type == "winding") {
    if (!cls.accepted.chiral) throw SymmetryViolation("winding needs an accepted chiral symmetry");
    result = winding(model, *cls.accepted.chiral, KGrid(d, pts(default_points(d))), args.tol);
  } else if (type == "majorana") {
    if (!cls.accepted.ph) throw SymmetryViolation("majorana needs an accepted particle-hole symmetry");
    result = majorana_z2(model, *cls.accepted.ph, args.tol);
  } else if (type == "kanemele") {
    if (!cls.accepted.tr) throw SymmetryViolation("kanemele needs an accepted time-reversal symmetry");
    result = kane_mele_z2(flatten(model, KGrid(d, pts(kKaneMeleDefaultPoints))), *cls.accepted.tr, args.tol);
  } else {
    if (d != 0) throw InvalidArgument("count needs a 0-dimensional model");
    result = negative_count(eval(model, std::span<const double>{}));
  }

  Report r;
  r.line("kind=" + std::string(to_string(result->kind)) + " value=" + std::to_string(result->value) +
         " residual=" + fmt(result->residual) + " expected_group=" + std::string(to_string(group)));
  r.doc = {{"kind", to_string(result->kind)},
           {"value", result->value},
           {"residual", result->residual},
           {"expected_group", to_string(group)},
           {"class", cls.az.label}};
  r.emit(out);
  return kExitOk;
}

int cmd_table(const std::string& family, bool check, const Output& out) {
  Report r;
  json cells = json::array();
  for (Family f : {Family::Complex, Family::Real}) {
    if (family != "all" && family != to_string(f)) continue;
    const int p = period(f);
    std::ostringstream head;
    head << std::left << std::setw(6) << "s" << std::setw(6) << "class";
    for (int d = 0; d < 8; ++d) head << std::setw(4) << ("d=" + std::to_string(d));
    r.line(head.str());
    for (int s = 0; s < p; ++s) {
      std::ostringstream row;
      row << std::left << std::setw(6) << s << std::setw(6) << cartan_label(f, s);
      for (int d = 0; d < 8; ++d) row << std::setw(4) << to_string(group_at(f, s, d));
      r.line(row.str());
    }
    r.line("");
    for (int s = 0; s < p; ++s)
      for (int d = 0; d < 8; ++d) {
        const auto g = group_at(f, s, d);
        r.line(std::string(to_string(f)) + "," + std::to_string(s) + "," + std::to_string(d) + "," +
               std::string(to_string(g)));
        cells.push_back({{"family", to_string(f)}, {"s", s}, {"d", d}, {"group", to_string(g)}});
      }
  }
  r.doc["cells"] = std::move(cells);

  int code = kExitOk;
  if (check) {
    const auto diff = generate_table();
    const auto ids = check_periodicities();
    bool ids_ok = true;
    for (const auto& c : ids) ids_ok = ids_ok && c.ok();
    const bool one_one = !ids.empty() && ids.front().ok();
    std::ostringstream summary;
    summary << diff.matched() << "/" << diff.compared << " match; (1,1)-periodicity: "
            << (one_one ? "pass" : "FAIL");
    r.line(summary.str());
    json idj = json::array();
    for (const auto& c : ids) {
      r.line("identity=" + c.name + " checked=" + std::to_string(c.checked) +
             " failures=" + std::to_string(c.failures));
      idj.push_back({{"name", c.name}, {"checked", c.checked}, {"failures", c.failures}});
    }
    json mism = json::array();
    for (const auto& m : diff.mismatches) {
      r.line("mismatch family=" + std::string(to_string(m.family)) + " s=" + std::to_string(m.s) +
             " d=" + std::to_string(m.d) + " generated=" + std::string(to_string(m.generated)) +
             " reference=" + std::string(m.reference));
      mism.push_back({{"family", to_string(m.family)}, {"s", m.s}, {"d", m.d}});
    }
    r.doc["check"] = {{"matched", diff.matched()},
                      {"compared", diff.compared},
                      {"identities", std::move(idj)},
                      {"mismatches", std::move(mism)}};
    if (!diff.ok() || !ids_ok) code = kExitFail;
  }
  r.emit(out);
  return code;
}

int cmd_suspend(const ModelArgs& args, const std::string& ref_arg, const std::string& sym, int steps,
                const Output& out) {
  const auto base = load_model(args);
  const BlochModel& model = base.model;
  if (model.dim() > 1) throw InvalidArgument("suspend: base model must have dim 0 or 1");
  const auto ref = load_reference(ref_arg);
  if (ref.model.bands() != model.bands())
    throw InvalidArgument("suspend: reference has " + std::to_string(ref.model.bands()) +
                          " bands, base has " + std::to_string(model.bands()));
  if (ref.model.dim() != 0 && ref.model.dim() != model.dim())
    throw InvalidArgument("suspend: reference must be constant (dim 0) or share the base dimension");

  const int points = grid_points(args);
  const KGrid grid(model.dim(), model.dim() == 0 ? 1 : (points > 0 ? points : default_points(1)));
  const auto base_sample = flatten(model, grid);
  std::vector<CMat> ref_q;
  if (ref.model.dim() == 0) {
    ref_q.assign(grid.size(), flatten_matrix(eval(ref.model, std::span<const double>{})).q);
  } else {
    ref_q = flatten(ref.model, grid).q;
  }

  Report r;
  try {
    auto fam = build_interpolation(base_sample, ref_q, steps);
    SymKind kind = SymKind::None;
    std::optional<CMat> u;
    if (sym == "T") {
      kind = SymKind::T;
      u = base.symmetries.tr;
    } else if (sym == "C") {
      kind = SymKind::C;
      u = base.symmetries.ph;
    }
    if (kind != SymKind::None && !u)
      throw InvalidArgument("suspend: base model supplies no " + sym + " representation");
    fam = extend_symmetric(std::move(fam), kind, u);

    r.line("min_gap=" + fmt(fam.min_gap));
    r.line("extension_residual=" + fmt(fam.extension_residual));
    r.line("convention_discrepancy=" + fmt(fam.convention_discrepancy));
    r.doc = {{"min_gap", fam.min_gap},
             {"extension_residual", fam.extension_residual},
             {"convention_discrepancy", fam.convention_discrepancy},
             {"sym", sym},
             {"steps", steps}};
    if (model.dim() == 1) {
      const auto pump = pump_chern(fam);
      r.line("pump_chern=" + std::to_string(pump.value) + " residual=" + fmt(pump.residual));
      r.doc["pump_chern"] = pump.value;
      r.doc["pump_residual"] = pump.residual;
    }
  } catch (const Obstruction& e) {
    r.line("obstruction k=" + fmt(e.k()) + " theta=" + fmt(e.theta()) + " gap=" + fmt(e.gap()) +
           " reason=\"" + e.why() + "\"");
    r.doc = json::object();
    r.doc["obstruction"] = {{"k", e.k()}, {"theta", e.theta()}, {"gap", e.gap()}, {"reason", e.why()}};
    r.emit(out);
    return kExitFail;
  } catch (const EndpointAsymmetry& e) {
    r.line(std::string("endpoint_asymmetry ") + e.what());
    r.doc = {{"endpoint_asymmetry", e.what()}};
    r.emit(out);
    return kExitFail;
  }
  r.emit(out);
  return kExitOk;
}

int cmd_clifford(int k, const std::string& dump, const Output& out) {
  const auto set = clifford::generate(k);
  const double residual = clifford::clifford_residual(set);
  double ortho = 0.0;
  for (const auto& j : set.j) ortho = std::max(ortho, clifford::orthogonality_residual(j));

  Report r;
  std::vector<double> mids;
  bool mids_ok = true;
  for (int i = 0; i + 1 < k; ++i) {
    mids.push_back(clifford::midpoint_residual(set, i));
    mids_ok = mids_ok && mids.back() < 1e-12;
  }
  bool nesting = true;
  for (std::size_t m = 0; m < set.size(); ++m) {
    std::span<const RMat> prefix(set.j.data(), m);
    nesting = nesting && clifford::is_complex_structure(set.j[m], prefix).ok;
  }
  const bool ok = residual < 1e-12 && mids_ok && nesting;
  std::ostringstream summary;
  summary << "N=" << set.n << " ";
  if (residual < 1e-12) summary << "residual<1e-12";
  else summary << "residual=" << fmt(residual);
  summary << " midpoints: " << (mids_ok ? "pass" : "FAIL");
  r.line(summary.str());
  r.line("k=" + std::to_string(k) + " N=" + std::to_string(set.n) + " clifford_residual=" + fmt(residual) +
         " orthogonality_residual=" + fmt(ortho));
  for (std::size_t i = 0; i < mids.size(); ++i)
    r.line("midpoint i=" + std::to_string(i) + " residual=" + fmt(mids[i]));
  r.line(std::string("nesting=") + (nesting ? "pass" : "FAIL"));
  r.doc = {{"k", k},
           {"N", set.n},
           {"clifford_residual", residual},
           {"orthogonality_residual", ortho},
           {"midpoint_residuals", mids},
           {"nesting", nesting}};

  if (!dump.empty()) {
    json mats = json::array();
    for (const auto& j : set.j) mats.push_back(io::matrix_to_json(j.cast<cplx>()));
    std::ofstream f(dump);
    if (!f) throw InvalidArgument("cannot write '" + dump + "'");
    f << json{{"N", set.n}, {"generators", std::move(mats)}}.dump() << "\n";
  }
  r.emit(out);
  return ok ? kExitOk : kExitFail;
}

int cmd_selfcheck(const Output& out) {
  if (out.format == "json") {
    const auto results = acceptance::run();
    json arr = json::array();
    bool all = true;
    for (const auto& c : results) {
      all = all && c.pass;
      arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
    }
    if (!out.quiet) std::cout << json{{"criteria", arr}, {"pass", all}}.dump(2) << "\n";
    return all ? kExitOk : kExitFail;
  }
  return acceptance::selfcheck(std::cout, {}, out.quiet);
}

std::string displacement_text(const std::vector<int>& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tenfold-way classification and topological invariants of Bloch Hamiltonians"};
  app.require_subcommand(1);

  Output out;
  ModelArgs margs;

  auto* classify_cmd = app.add_subcommand("classify", "Determine the AZ class and its expected group");
  add_model_options(classify_cmd, margs);
  add_output_options(classify_cmd, out);

  std::string inv_type = "auto";
  auto* invariant_cmd = app.add_subcommand("invariant", "Compute the topological invariant");
  add_model_options(invariant_cmd, margs);
  add_output_options(invariant_cmd, out);
  invariant_cmd->add_option("--type", inv_type, "Invariant kind")
      ->check(CLI::IsMember({"auto", "chern", "winding", "majorana", "kanemele", "count"}));

  std::string family = "all";
  bool check = false;
  auto* table_cmd = app.add_subcommand("table", "Print the periodic table");
  table_cmd->add_option("--family", family, "real, complex or all")
      ->check(CLI::IsMember({"real", "complex", "all"}));
  table_cmd->add_flag("--check", check, "Diff against the embedded table and check periodicities");
  add_output_options(table_cmd, out);

  std::string ref, sym = "none";
  int steps = 60;
  auto* suspend_cmd = app.add_subcommand("suspend", "Build a gapped interpolation to a reference");
  add_model_options(suspend_cmd, margs);
  add_output_options(suspend_cmd, out);
  suspend_cmd->add_option("--ref", ref, "Reference: model file or builtin name[:key=val,...]")->required();
  suspend_cmd->add_option("--sym", sym, "Symmetric extension")->check(CLI::IsMember({"T", "C", "none"}));
  suspend_cmd->add_option("--steps", steps, "Theta samples over the full circle (even)")
      ->check(CLI::Range(2, 100000));

  int k = 8;
  std::string dump;
  auto* clifford_cmd = app.add_subcommand("clifford", "Check the Clifford generator construction");
  clifford_cmd->add_option("--k", k, "Number of generators")->check(CLI::Range(1, clifford::kMaxGenerators));
  clifford_cmd->add_option("--dump", dump, "Write the generators as JSON");
  add_output_options(clifford_cmd, out);

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the acceptance suite");
  add_output_options(selfcheck_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(margs, out);
    if (*invariant_cmd) return cmd_invariant(margs, inv_type, out);
    if (*table_cmd) return cmd_table(family, check, out);
    if (*suspend_cmd) {
      if (steps % 2 != 0) throw InvalidArgument("--steps must be even");
      return cmd_suspend(margs, ref, sym, steps, out);
    }
    if (*clifford_cmd) return cmd_clifford(k, dump, out);
    if (*selfcheck_cmd) return cmd_selfcheck(out);
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what();
    if (!e.displacement().empty()) std::cerr << " (R=" << displacement_text(e.displacement()) << ")";
    std::cerr << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClassificationConflict& e) {
    std::cerr << "conflict: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
