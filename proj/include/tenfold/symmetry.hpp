#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bott_table.hpp"
#include "model.hpp"

namespace tenfold {

/// Candidate symmetry representations. Time reversal and particle-hole act as
/// U * complex conjugation; chiral acts as the plain unitary U_S.
struct SymmetrySpec {
  std::optional<CMat> tr;
  std::optional<CMat> ph;
  std::optional<CMat> chiral;
};

enum class AntiunitaryKind { T, C };

inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kSquareTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-8;

/// max over the grid of |U conj(H(-k)) U^dagger - sigma H(k)|_max, sigma = +1 for T, -1 for C.
inline double residual_antiunitary(const BlochModel& model, const CMat& u, AntiunitaryKind kind,
                                   const KGrid& grid) {
  require_unitary(u, kUnitaryTol, "antiunitary symmetry");
  require_square(u, model.bands(), "antiunitary symmetry");
  const double sigma = kind == AntiunitaryKind::T ? 1.0 : -1.0;
  double r = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto k = grid.point(i);
    const CMat h = eval(model, k);
    for (auto& x : k) x = -x;
    const CMat hm = eval(model, k);
    r = std::max(r, max_norm(u * hm.conjugate() * u.adjoint() - sigma * h));
  }
  return r;
}

/// Same residual evaluated on a flattened sample; -k is looked up on the grid.
inline double residual_antiunitary(const FlattenedSample& sample, const CMat& u,
                                   AntiunitaryKind kind) {
  require_unitary(u, kUnitaryTol, "antiunitary symmetry");
  require_square(u, sample.bands(), "antiunitary symmetry");
  const double sigma = kind == AntiunitaryKind::T ? 1.0 : -1.0;
  double r = 0.0;
  for (std::size_t i = 0; i < sample.grid.size(); ++i) {
    const CMat& qm = sample.q[sample.grid.negated(i)];
    r = std::max(r, max_norm(u * qm.conjugate() * u.adjoint() - sigma * sample.q[i]));
  }
  return r;
}

inline double residual_chiral(const BlochModel& model, const CMat& us, const KGrid& grid) {
  require_unitary(us, kUnitaryTol, "chiral symmetry");
  require_square(us, model.bands(), "chiral symmetry");
  double r = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const CMat h = eval(model, grid.point(i));
    r = std::max(r, max_norm(us * h * us.adjoint() + h));
  }
  return r;
}

/// Sign of (U K)^2 = U conj(U) = +-I.
inline int square_sign(const CMat& u) {
  require_unitary(u, kUnitaryTol, "square_sign");
  const CMat sq = u * u.conjugate();
  const CMat id = CMat::Identity(u.rows(), u.cols());
  if (max_norm(sq - id) < kSquareTol) return +1;
  if (max_norm(sq + id) < kSquareTol) return -1;
  throw InvalidRepresentation("U conj(U) is neither +I nor -I");
}

struct AZClass {
  std::string label;
  Family family = Family::Complex;
  int s = 0;
  std::optional<int> t_sq;
  std::optional<int> c_sq;
  bool chiral = false;
};

/// Altland-Zirnbauer class from squared signs and presence of a chiral symmetry.
inline AZClass az_from_signs(std::optional<int> t_sq, std::optional<int> c_sq, bool chiral) {
  AZClass az;
  az.t_sq = t_sq;
  az.c_sq = c_sq;
  if (!t_sq && !c_sq) {
    az.family = Family::Complex;
    az.s = chiral ? 1 : 0;
    az.chiral = chiral;
  } else {
    az.family = Family::Real;
    const int t = t_sq.value_or(0);
    const int c = c_sq.value_or(0);
    // (t, c) -> s, following the real rows AI, BDI, D, DIII, AII, CII, C, CI.
    if (t == +1 && c == 0) az.s = 0;
    else if (t == +1 && c == +1) az.s = 1;
    else if (t == 0 && c == +1) az.s = 2;
    else if (t == -1 && c == +1) az.s = 3;
    else if (t == -1 && c == 0) az.s = 4;
    else if (t == -1 && c == -1) az.s = 5;
    else if (t == 0 && c == -1) az.s = 6;
    else az.s = 7;  // t == +1 && c == -1
    az.chiral = t_sq && c_sq;
  }
  az.label = std::string(cartan_label(az.family, az.s));
  return az;
}

struct SymmetryCheck {
  std::string name;
  bool supplied = false;
  bool implied = false;
  double residual = 0.0;
  bool accepted = false;
};

struct Classification {
  AZClass az;
  SymmetrySpec accepted;  // accepted representations, including implied ones
  std::vector<SymmetryCheck> checks;
};

/// Verify the supplied symmetries and map their squared signs to an AZ class.
/// Symmetries with residual >= tol are treated as absent and reported in checks.
inline Classification classify(const BlochModel& model, const SymmetrySpec& spec,
                               const KGrid& grid, double tol = kSymmetryTol) {
  Classification out;
  auto check_anti = [&](const std::optional<CMat>& u, AntiunitaryKind kind, const char* name) {
    SymmetryCheck c{name, u.has_value(), false, 0.0, false};
    if (u) {
      c.residual = residual_antiunitary(model, *u, kind, grid);
      c.accepted = c.residual < tol;
    }
    return c;
  };
  SymmetryCheck t = check_anti(spec.tr, AntiunitaryKind::T, "T");
  SymmetryCheck c = check_anti(spec.ph, AntiunitaryKind::C, "C");
  SymmetryCheck s{"S", spec.chiral.has_value(), false, 0.0, false};
  if (spec.chiral) {
    s.residual = residual_chiral(model, *spec.chiral, grid);
    s.accepted = s.residual < tol;
  }
  if (t.accepted) out.accepted.tr = *spec.tr;
  if (c.accepted) out.accepted.ph = *spec.ph;
  if (s.accepted) out.accepted.chiral = *spec.chiral;

  if (t.accepted && c.accepted) {
    if (s.supplied && !s.accepted)
      throw ClassificationConflict("T and C hold but the supplied chiral symmetry fails (residual " +
                                   std::to_string(s.residual) + ")");
    if (!s.supplied) {
      const CMat implied = *spec.tr * spec.ph->conjugate();
      s = SymmetryCheck{"S", false, true, residual_chiral(model, implied, grid), false};
      s.accepted = s.residual < 10 * tol;
      out.accepted.chiral = implied;
    }
  } else if (s.accepted && (t.accepted != c.accepted)) {
    // Chiral = U_T conj(U_C): derive the missing antiunitary partner.
    const CMat& us = *spec.chiral;
    if (t.accepted) {
      const CMat uc = spec.tr->transpose() * us.conjugate();
      c = SymmetryCheck{"C", c.supplied, true, residual_antiunitary(model, uc, AntiunitaryKind::C, grid),
                        false};
      c.accepted = c.residual < 10 * tol;
      if (c.accepted) out.accepted.ph = uc;
    } else {
      const CMat ut = us * spec.ph->transpose();
      t = SymmetryCheck{"T", t.supplied, true, residual_antiunitary(model, ut, AntiunitaryKind::T, grid),
                        false};
      t.accepted = t.residual < 10 * tol;
      if (t.accepted) out.accepted.tr = ut;
    }
    if (!(t.accepted && c.accepted))
      throw ClassificationConflict(
          "chiral symmetry and a single antiunitary symmetry do not combine consistently");
  }

  std::optional<int> t_sq, c_sq;
  if (out.accepted.tr) t_sq = square_sign(*out.accepted.tr);
  if (out.accepted.ph) c_sq = square_sign(*out.accepted.ph);
  out.az = az_from_signs(t_sq, c_sq, out.accepted.chiral.has_value());
  out.checks = {t, c, s};
  return out;
}

inline InvariantGroup expected_group(const AZClass& az, int d) { return group_at(az.family, az.s, d); }

}  // namespace tenfold
