#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bott_table.hpp"
#include "invariants.hpp"
#include "model.hpp"
#include "symmetry.hpp"

namespace tenfold {

enum class SymKind { None, T, C };

inline std::string_view to_string(SymKind k) {
  switch (k) {
    case SymKind::T:
      return "T";
    case SymKind::C:
      return "C";
    case SymKind::None:
      break;
  }
  return "none";
}

/// Two-parameter family h(k, theta) on the base grid times a uniform theta
/// circle. Sample j sits at theta_j = 2*pi*j/steps, reported in [-pi, pi);
/// j = steps/2 is theta = pi.
struct InterpolationFamily {
  KGrid grid;
  int theta_steps = 0;
  std::vector<std::vector<CMat>> values{};  // values[j][k-index]
  int filled = 0;
  bool complete = false;    // false: only theta in [0, pi] is filled
  double min_gap = 0.0;     // of the pre-flattened path
  SymKind sym_kind = SymKind::None;
  std::optional<CMat> sym_u{};
  double extension_residual = 0.0;      // against the printed partner formula
  double convention_discrepancy = 0.0;  // printed transpose form vs conjugation form

  double theta(int j) const {
    const double t = kTwoPi * j / theta_steps;
    return t >= kPi ? t - kTwoPi : t;
  }
  int half() const { return theta_steps / 2; }
  const CMat& at(std::size_t k_index, int j) const {
    return values[static_cast<std::size_t>(((j % theta_steps) + theta_steps) % theta_steps)][k_index];
  }
};

inline constexpr double kEndpointTol = 1e-8;
inline constexpr double kVortexFlux = kPi / 2;
inline constexpr double kObstructionLinkTol = 1e-3;

namespace detail {

inline CMat frame_of(const CMat& q, int filled) {
  Eigen::SelfAdjointEigenSolver<CMat> es(q);
  return es.eigenvectors().leftCols(filled);
}

inline cplx link(const CMat& a, const CMat& b) {
  return (a.adjoint() * b).determinant();
}

/// A gap closing of the continuous path between samples shows up as a
/// plaquette carrying Berry flux near pi, or as a nearly orthogonal link.
inline void scan_vortices(const InterpolationFamily& fam,
                          const std::vector<std::vector<double>>& gaps) {
  const KGrid& grid = fam.grid;
  const int last = fam.half();
  std::vector<std::vector<CMat>> frames(last + 1);
  for (int j = 0; j <= last; ++j)
    for (std::size_t i = 0; i < grid.size(); ++i) frames[j].push_back(frame_of(fam.values[j][i], fam.filled));

  auto k_of = [&](std::size_t i) { return grid.dim() > 0 ? grid.point(i)[0] : 0.0; };
  auto fail = [&](std::size_t i, int j, const std::string& why) {
    throw Obstruction(k_of(i), fam.theta(j), gaps[j][i], why);
  };
  for (int j = 0; j < last; ++j) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const cplx lt = link(frames[j][i], frames[j + 1][i]);
      if (std::abs(lt) < kObstructionLinkTol) fail(i, j, "theta link collapses");
      for (int a = 0; a < grid.dim(); ++a) {
        const std::size_t ia = grid.shifted(i, a, +1);
        const cplx lk0 = link(frames[j][i], frames[j][ia]);
        const cplx lk1 = link(frames[j + 1][i], frames[j + 1][ia]);
        const cplx lt1 = link(frames[j][ia], frames[j + 1][ia]);
        if (std::abs(lk0) < kObstructionLinkTol || std::abs(lk1) < kObstructionLinkTol ||
            std::abs(lt1) < kObstructionLinkTol)
          fail(i, j, "k link collapses");
        const double flux = std::arg(lk0 * lt1 * std::conj(lk1) * std::conj(lt));
        if (std::abs(flux) > kVortexFlux) {
          // Report the corner closest to the gap closing.
          std::size_t bi = i;
          int bj = j;
          for (std::size_t ci : {i, ia})
            for (int cj : {j, j + 1})
              if (gaps[cj][ci] < gaps[bj][bi]) bi = ci, bj = cj;
          fail(bi, bj, "plaquette encloses a gap closing");
        }
      }
    }
  }
}

}  // namespace detail

/// Half family h(k, t*pi) = flatten((1-t) Q_1(k) + t Q_2(k)) for t in [0, 1].
/// The reference may depend on k; the usual choice is a constant matrix.
inline InterpolationFamily build_interpolation(const FlattenedSample& base,
                                               const std::vector<CMat>& ref, int theta_steps,
                                               double gap_tol = kDefaultGapTol) {
  if (theta_steps < 2 || theta_steps % 2 != 0)
    throw InvalidArgument("build_interpolation: theta_steps must be even and >= 2");
  if (ref.size() != base.q.size())
    throw InvalidArgument("build_interpolation: reference sampled on a different grid");
  const Eigen::Index n = base.bands();
  for (const CMat& r : ref) {
    require_square(r, n, "build_interpolation reference");
    if (hermiticity_residual(r) > 1e-10 ||
        max_norm(r * r - CMat::Identity(n, n)) > 1e-10)
      throw InvalidArgument("build_interpolation: reference must be Hermitian with Q^2 = I");
  }

  InterpolationFamily fam{.grid = base.grid, .theta_steps = theta_steps, .filled = base.filled};
  fam.values.assign(theta_steps, {});
  fam.min_gap = std::numeric_limits<double>::infinity();
  const int last = fam.half();
  std::vector<std::vector<double>> gaps(last + 1);
  for (int j = 0; j <= last; ++j) {
    const double t = static_cast<double>(j) / last;
    fam.values[j].reserve(base.q.size());
    for (std::size_t i = 0; i < base.q.size(); ++i) {
      FlatMatrix f = flatten_matrix((1.0 - t) * base.q[i] + t * ref[i]);
      const double k0 = base.grid.dim() > 0 ? base.grid.point(i)[0] : 0.0;
      if (f.gap <= gap_tol) throw Obstruction(k0, fam.theta(j), f.gap, "spectrum reaches zero");
      if (f.filled != base.filled)
        throw Obstruction(k0, fam.theta(j), f.gap, "filled-band count changes along the path");
      fam.min_gap = std::min(fam.min_gap, f.gap);
      gaps[j].push_back(f.gap);
      fam.values[j].push_back(std::move(f.q));
    }
  }
  detail::scan_vortices(fam, gaps);
  return fam;
}

inline InterpolationFamily build_interpolation(const FlattenedSample& base, const CMat& ref,
                                               int theta_steps, double gap_tol = kDefaultGapTol) {
  return build_interpolation(base, std::vector<CMat>(base.q.size(), ref), theta_steps, gap_tol);
}

namespace detail {
/// -[U^dagger X U]^T for C, [U^dagger X U]^T for T.
inline CMat printed_partner(const CMat& x, SymKind kind, const CMat& u) {
  CMat p = (u.adjoint() * x * u).transpose();
  return kind == SymKind::C ? CMat(-p) : p;
}
/// -U conj(X) U^dagger for C, U conj(X) U^dagger for T.
inline CMat conjugation_partner(const CMat& x, SymKind kind, const CMat& u) {
  CMat p = u * x.conjugate() * u.adjoint();
  return kind == SymKind::C ? CMat(-p) : p;
}
}  // namespace detail

/// Fill theta in (-pi, 0) from the symmetry partner h(k,theta) = P[h(-k,-theta)],
/// closing the half family into a loop. SymKind::None mirrors theta -> -theta.
inline InterpolationFamily extend_symmetric(InterpolationFamily fam, SymKind kind,
                                            const std::optional<CMat>& u = std::nullopt) {
  if (fam.complete) throw InvalidArgument("extend_symmetric: family is already complete");
  const KGrid& grid = fam.grid;
  const int s = fam.theta_steps;
  const int half = fam.half();
  fam.sym_kind = kind;
  if (kind == SymKind::None) {
    for (int j = half + 1; j < s; ++j) fam.values[j] = fam.values[s - j];
    fam.complete = true;
    return fam;
  }
  if (!u) throw InvalidArgument("extend_symmetric: symmetry kind needs a unitary");
  require_unitary(*u, kUnitaryTol, "extend_symmetric");
  require_square(*u, fam.values[0].front().rows(), "extend_symmetric");
  fam.sym_u = *u;

  auto endpoint_residual = [&](int j) {
    double r = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      r = std::max(r, max_norm(fam.values[j][i] -
                               detail::printed_partner(fam.values[j][grid.negated(i)], kind, *u)));
    return r;
  };
  if (const double r0 = endpoint_residual(0); r0 >= kEndpointTol) throw EndpointAsymmetry("0", r0);
  if (const double rp = endpoint_residual(half); rp >= kEndpointTol) throw EndpointAsymmetry("pi", rp);

  for (int j = half + 1; j < s; ++j) {
    fam.values[j].resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      fam.values[j][i] = detail::printed_partner(fam.values[s - j][grid.negated(i)], kind, *u);
  }
  fam.complete = true;

  fam.extension_residual = 0.0;
  fam.convention_discrepancy = 0.0;
  for (int j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const CMat& partner_src = fam.at(grid.negated(i), s - j);
      const CMat printed = detail::printed_partner(partner_src, kind, *u);
      fam.extension_residual = std::max(fam.extension_residual, max_norm(fam.values[j][i] - printed));
      fam.convention_discrepancy =
          std::max(fam.convention_discrepancy,
                   max_norm(printed - detail::conjugation_partner(partner_src, kind, *u)));
    }
  }
  return fam;
}

/// Complete family sampled from an explicit Hamiltonian h(k, theta) on a 1D base.
inline InterpolationFamily family_from_function(const KGrid& grid, int theta_steps,
                                                const std::function<CMat(double, double)>& h,
                                                double gap_tol = kDefaultGapTol) {
  if (grid.dim() != 1) throw InvalidArgument("family_from_function: needs a 1D base grid");
  if (theta_steps < 2) throw InvalidArgument("family_from_function: theta_steps must be >= 2");
  InterpolationFamily fam{.grid = grid, .theta_steps = theta_steps};
  fam.values.assign(theta_steps, {});
  fam.min_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < theta_steps; ++j) {
    const double th = kTwoPi * j / theta_steps;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double k = grid.point(i)[0];
      FlatMatrix f = flatten_matrix(h(k, th));
      if (f.gap <= gap_tol) throw GapClosed({k, th}, f.gap);
      if (j == 0 && i == 0) fam.filled = f.filled;
      if (f.filled != fam.filled) throw InconsistentFilling("filled count varies over the family");
      fam.min_gap = std::min(fam.min_gap, f.gap);
      fam.values[j].push_back(std::move(f.q));
    }
  }
  fam.complete = true;
  return fam;
}

/// Chern number over the (k, theta) torus, oriented k then theta.
inline InvariantResult pump_chern(const InterpolationFamily& fam) {
  if (!fam.complete) throw InvalidArgument("pump_chern: family must cover the full theta circle");
  if (fam.grid.dim() != 1) throw InvalidArgument("pump_chern: needs a 1D base");
  const int nk = fam.grid.points_per_axis();
  std::vector<std::vector<CMat>> frames(fam.theta_steps);
  for (int j = 0; j < fam.theta_steps; ++j)
    for (int i = 0; i < nk; ++i) frames[j].push_back(detail::frame_of(fam.values[j][i], fam.filled));
  const double flux = detail::lattice_flux(
      nk, fam.theta_steps, [&](int ik, int jt) -> const CMat& { return frames[jt][ik]; });
  return detail::rounded(InvariantKind::Chern, flux / kTwoPi);
}

struct SuspensionReport {
  AZClass az;
  int d = 0;
  InvariantGroup base_group = InvariantGroup::Zero;  // (s, d)
  InvariantGroup pump_group = InvariantGroup::Zero;  // (s, d+1): where the pump invariant lives
  InvariantGroup loop_group = InvariantGroup::Zero;  // loop of (s, d+1), i.e. (s+1, d+1)
  bool consistent = false;
};

/// Loop of the suspended class must reproduce the base classification.
inline SuspensionReport suspension_consistency(const AZClass& az, int d) {
  SuspensionReport r{az, d};
  r.base_group = group_at(az.family, az.s, d);
  r.pump_group = group_at(suspend_shift(TableIndex(az.family, az.s, d)));
  r.loop_group = group_at(loop_shift(TableIndex(az.family, az.s, d + 1)));
  r.consistent = r.loop_group == r.base_group;
  return r;
}

inline SuspensionReport suspension_consistency(const BlochModel& model, const AZClass& az) {
  return suspension_consistency(az, model.dim());
}

}  // namespace tenfold
