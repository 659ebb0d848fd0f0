#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bott_table.hpp"
#include "builtin.hpp"
#include "clifford.hpp"
#include "invariants.hpp"
#include "suspension.hpp"
#include "symmetry.hpp"

namespace tenfold::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Knobs that let the test suite inject faults into an otherwise normal run.
struct Config {
  ReferenceTable reference = kReferenceTable;
  PlaquetteOrientation chern_orientation = PlaquetteOrientation::KxKy;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  return seconds_since(t0);
}

inline std::string cell_name(const TableMismatch& m) {
  std::ostringstream os;
  os << to_string(m.family) << " s=" << m.s << " d=" << m.d << " (" << cartan_label(m.family, m.s)
     << "): generated " << to_string(m.generated) << ", reference " << m.reference;
  return os.str();
}

inline CriterionResult table_regeneration(const Config& cfg) {
  CriterionResult r{1, "table-regeneration", false, {}, 0.0};
  TableDiff diff;
  r.seconds = timed([&] { diff = generate_table(cfg.reference); });
  std::ostringstream os;
  os << diff.matched() << "/" << diff.compared << " match";
  for (const auto& m : diff.mismatches) os << "; mismatch " << cell_name(m);
  r.pass = diff.ok() && diff.compared == 80 && r.seconds < 0.010;
  if (r.seconds >= 0.010) os << "; too slow";
  r.detail = os.str();
  return r;
}

inline CriterionResult bott_clock() {
  CriterionResult r{2, "bott-clock-identities", false, {}, 0.0};
  std::vector<IdentityCheck> checks;
  r.seconds = timed([&] { checks = check_periodicities(); });
  std::ostringstream os;
  r.pass = true;
  for (const auto& c : checks) {
    os << (os.tellp() > 0 ? "; " : "") << c.name << ": " << (c.ok() ? "pass" : "FAIL") << " ("
       << c.checked - c.failures << "/" << c.checked << ")";
    r.pass = r.pass && c.ok();
  }
  r.detail = os.str();
  return r;
}

inline CriterionResult classifying_spaces() {
  CriterionResult r{3, "classifying-space-pi0", false, {}, 0.0};
  struct Expect {
    Family f;
    int s;
    InvariantGroup g;
  };
  using G = InvariantGroup;
  const std::vector<Expect> expected{
      {Family::Complex, 0, G::Z},  {Family::Complex, 1, G::Zero}, {Family::Real, 0, G::Z},
      {Family::Real, 1, G::Z2},    {Family::Real, 2, G::Z2},      {Family::Real, 3, G::Zero},
      {Family::Real, 4, G::Z},     {Family::Real, 5, G::Zero},    {Family::Real, 6, G::Zero},
      {Family::Real, 7, G::Zero}};
  int ok = 0;
  std::ostringstream bad;
  r.seconds = timed([&] {
    for (const auto& e : expected) {
      if (pi0(e.f, e.s) == e.g) ++ok;
      else bad << "; " << to_string(e.f) << " s=" << e.s << " got " << to_string(pi0(e.f, e.s));
    }
  });
  r.pass = ok == static_cast<int>(expected.size());
  r.detail = std::to_string(ok) + "/" + std::to_string(expected.size()) + " spaces" + bad.str();
  return r;
}

inline CriterionResult clifford_suite() {
  CriterionResult r{4, "clifford-suite", false, {}, 0.0};
  double residual = 0.0, worst_mid = 0.0;
  bool nesting = true;
  r.seconds = timed([&] {
    const auto set = clifford::generate(8);
    residual = clifford::clifford_residual(set);
    for (int i = 0; i <= 6; ++i) worst_mid = std::max(worst_mid, clifford::midpoint_residual(set, i));
    for (std::size_t m = 0; m < set.size(); ++m) {
      std::span<const RMat> prefix(set.j.data(), m);
      nesting = nesting && clifford::is_complex_structure(set.j[m], prefix).ok;
    }
  });
  r.pass = residual < 1e-12 && worst_mid < 1e-12 && nesting && r.seconds < 5.0;
  std::ostringstream os;
  os << "N=256 residual=" << residual << " max_midpoint=" << worst_mid
     << " nesting=" << (nesting ? "pass" : "FAIL");
  r.detail = os.str();
  return r;
}

inline CriterionResult winding_sweep() {
  CriterionResult r{5, "ssh-winding-sweep", false, {}, 0.0};
  int failures = 0, total = 0;
  double slowest = 0.0;
  std::ostringstream bad;
  const auto t0 = Clock::now();
  for (int tenth = 1; tenth <= 19; ++tenth) {
    if (tenth == 10) continue;
    const double v = tenth / 10.0;
    const long expected = v < 1.0 ? 1 : 0;
    ++total;
    InvariantResult res{};
    std::string err;
    const double dt = timed([&] {
      try {
        res = winding(builtin::ssh(v, 1.0), pauli::z(), KGrid(1, 201));
      } catch (const Error& e) {
        err = e.what();
      }
    });
    slowest = std::max(slowest, dt);
    if (!err.empty() || res.value != expected || dt >= 0.050) {
      ++failures;
      bad << "; v=" << v << (err.empty() ? " got " + std::to_string(res.value) : " " + err);
    }
  }
  r.seconds = seconds_since(t0);
  r.pass = failures == 0;
  std::ostringstream os;
  os << failures << "/" << total << " failures, slowest " << std::setprecision(3) << slowest * 1e3
     << " ms" << bad.str();
  r.detail = os.str();
  return r;
}

inline CriterionResult chern_sweep(const Config& cfg) {
  CriterionResult r{6, "qwz-chern-sweep", false, {}, 0.0};
  const std::vector<std::pair<double, long>> cases{{-3, 0}, {-1, -1}, {1, 1}, {3, 0}};
  bool pass = true;
  std::ostringstream os;
  const auto t0 = Clock::now();
  for (const auto& [m, expected] : cases) {
    std::vector<long> values;
    for (int points : {61, 121}) {
      InvariantResult res{};
      const double dt = timed([&] {
        res = chern(flatten(builtin::qwz(m), KGrid(2, points)), cfg.chern_orientation);
      });
      values.push_back(res.value);
      const bool ok = res.value == expected && res.residual < 1e-3 && dt < 1.0;
      pass = pass && ok;
      if (!ok) os << "; m=" << m << " grid=" << points << " C=" << res.value << " residual=" << res.residual
                  << " t=" << dt << "s";
    }
    pass = pass && values[0] == values[1];
  }
  r.seconds = seconds_since(t0);
  r.pass = pass;
  r.detail = (pass ? "C(m=-3,-1,1,3) = 0,-1,1,0 at 61x61 and 121x121" : "mismatch") + os.str();
  return r;
}

inline CriterionResult majorana_sweep() {
  CriterionResult r{7, "kitaev-majorana-sweep", false, {}, 0.0};
  int failures = 0;
  std::ostringstream bad;
  r.seconds = timed([&] {
    for (double mu : {0.5, 1.0, 1.5, 2.5, 3.0}) {
      const long expected = mu < 2.0 ? -1 : +1;
      const auto res = majorana_z2(builtin::kitaev(1.0, 1.0, mu), pauli::x());
      if (res.value != expected) {
        ++failures;
        bad << "; mu=" << mu << " got " << res.value;
      }
    }
  });
  r.pass = failures == 0;
  r.detail = std::to_string(5 - failures) + "/5 match" + bad.str();
  return r;
}

inline CriterionResult kane_mele() {
  CriterionResult r{8, "bhz-kane-mele-z2", false, {}, 0.0};
  const CMat ut = kron(pauli::eps(), CMat(CMat::Identity(2, 2)));
  long topo = -1, trivial = -1;
  r.seconds = timed([&] {
    topo = kane_mele_z2(flatten(builtin::bhz(1.0), KGrid(2, kKaneMeleDefaultPoints)), ut).value;
    trivial = kane_mele_z2(flatten(builtin::bhz(3.0), KGrid(2, kKaneMeleDefaultPoints)), ut).value;
  });
  r.pass = topo == 1 && trivial == 0;
  r.detail = "m=1 -> " + std::to_string(topo) + ", m=3 -> " + std::to_string(trivial) +
             " (101 Wilson lines)";
  return r;
}

struct CoherenceCase {
  std::string name;
  builtin::Params params;
  std::string label;
  InvariantGroup group;
  bool topological;
};

inline std::vector<CoherenceCase> coherence_cases() {
  using G = InvariantGroup;
  return {
      {"ssh", {{"v", 0.5}}, "BDI", G::Z, true},
      {"ssh", {{"v", 1.5}}, "BDI", G::Z, false},
      {"qwz", {{"m", 1.0}}, "A", G::Z, true},
      {"qwz", {{"m", 3.0}}, "A", G::Z, false},
      {"kitaev", {{"mu", 1.0}}, "D", G::Z2, true},
      {"kitaev", {{"mu", 3.0}}, "D", G::Z2, false},
      {"bhz", {{"m", 1.0}}, "AII", G::Z2, true},
      {"bhz", {{"m", 3.0}}, "AII", G::Z2, false},
      {"rice-mele", {}, "AI", G::Zero, false},
  };
}

inline CriterionResult coherence() {
  CriterionResult r{9, "classification-coherence", false, {}, 0.0};
  int failures = 0;
  std::ostringstream bad;
  const auto cases = coherence_cases();
  r.seconds = timed([&] {
    for (const auto& c : cases) {
      try {
        const auto b = builtin::make(c.name, c.params);
        const int d = b.model.dim();
        const auto cls = classify(b.model, b.symmetries, KGrid(d, default_points(d)));
        const auto out = invariant_for(b.model, cls, d);
        bool ok = cls.az.label == c.label && out.expected == c.group;
        if (c.group == InvariantGroup::Zero) {
          ok = ok && out.status == DispatchStatus::NoInvariant;
        } else {
          ok = ok && out.status == DispatchStatus::Computed &&
               group_of(out.result->kind) == out.expected &&
               out.result->nontrivial() == c.topological;
        }
        if (!ok) {
          ++failures;
          bad << "; " << c.name << " label=" << cls.az.label << " group=" << to_string(out.expected);
        }
      } catch (const Error& e) {
        ++failures;
        bad << "; " << c.name << " " << e.what();
      }
    }
  });
  r.pass = failures == 0;
  r.detail = std::to_string(cases.size() - failures) + "/" + std::to_string(cases.size()) +
             " cases coherent" + bad.str();
  return r;
}

inline CriterionResult suspension_suite() {
  CriterionResult r{10, "suspension-suite", false, {}, 0.0};
  std::ostringstream os;
  bool pass = true;
  r.seconds = timed([&] {
    const KGrid line(1, default_points(1));
    // Symmetric extension of a C-symmetric SSH half family.
    const auto half = build_interpolation(flatten(builtin::ssh(1.5, 1.0), line), pauli::x(), 60);
    const auto full = extend_symmetric(half, SymKind::C, pauli::z());
    const bool ext_ok = full.extension_residual < 1e-12;
    os << "extension_residual=" << full.extension_residual;

    // QWZ read as a pump over (k_x, theta = k_y), and its orientation reversal.
    const auto qwz = builtin::qwz(1.0);
    const KGrid pump_line(1, 61);
    const auto fwd = family_from_function(pump_line, 61, [&](double k, double th) {
      return eval(qwz, {k, th});
    });
    const auto rev = family_from_function(pump_line, 61, [&](double k, double th) {
      return eval(qwz, {k, -th});
    });
    const long c_fwd = pump_chern(fwd).value, c_rev = pump_chern(rev).value;
    const bool pump_ok = c_fwd == 1 && c_rev == -1;
    os << " pump=" << c_fwd << " reversed=" << c_rev;

    // Obstruction scan over SSH pairs.
    const std::vector<double> vs{0.2, 0.5, 0.8, 1.3, 1.7};
    int agree = 0, total = 0;
    for (double v1 : vs) {
      for (double v2 : vs) {
        ++total;
        const long w1 = winding(builtin::ssh(v1, 1.0), pauli::z(), line).value;
        const long w2 = winding(builtin::ssh(v2, 1.0), pauli::z(), line).value;
        bool obstructed = false;
        try {
          build_interpolation(flatten(builtin::ssh(v1, 1.0), line),
                              flatten(builtin::ssh(v2, 1.0), line).q, 60);
        } catch (const Obstruction&) {
          obstructed = true;
        }
        if (obstructed == (w1 != w2)) ++agree;
      }
    }
    os << " obstruction_scan=" << agree << "/" << total;
    pass = ext_ok && pump_ok && agree == total;
  });
  r.pass = pass;
  r.detail = os.str();
  return r;
}

}  // namespace detail

inline std::vector<CriterionResult> run(const Config& cfg = {}) {
  std::vector<CriterionResult> out;
  const std::vector<std::function<CriterionResult()>> criteria{
      [&] { return detail::table_regeneration(cfg); },
      [] { return detail::bott_clock(); },
      [] { return detail::classifying_spaces(); },
      [] { return detail::clifford_suite(); },
      [] { return detail::winding_sweep(); },
      [&] { return detail::chern_sweep(cfg); },
      [] { return detail::majorana_sweep(); },
      [] { return detail::kane_mele(); },
      [] { return detail::coherence(); },
      [] { return detail::suspension_suite(); },
  };
  for (const auto& c : criteria) {
    try {
      out.push_back(c());
    } catch (const std::exception& e) {
      out.push_back({static_cast<int>(out.size()) + 1, "criterion", false,
                     std::string("unexpected error: ") + e.what(), 0.0});
    }
  }
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << r.name << ": " << r.detail
     << " [" << std::fixed << std::setprecision(1) << r.seconds * 1e3 << " ms]";
  return os.str();
}

/// Run every criterion, print one line each, return 0 iff all pass.
inline int selfcheck(std::ostream& out, const Config& cfg = {}, bool quiet = false) {
  const auto results = run(cfg);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (!quiet) out << format_line(r) << "\n";
  }
  if (!quiet)
    out << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria pass"
                        : std::to_string(failed) + " of " + std::to_string(results.size()) +
                              " criteria fail")
        << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace tenfold::acceptance
