#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bott_table.hpp"
#include "model.hpp"
#include "pfaffian.hpp"
#include "symmetry.hpp"

namespace tenfold {

enum class InvariantKind { Chern, Winding, MajoranaZ2, KaneMeleZ2, NegativeCount };

inline std::string_view to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::Chern:
      return "chern";
    case InvariantKind::Winding:
      return "winding";
    case InvariantKind::MajoranaZ2:
      return "majorana_z2";
    case InvariantKind::KaneMeleZ2:
      return "kane_mele_z2";
    case InvariantKind::NegativeCount:
      break;
  }
  return "negative_count";
}

/// Z-valued kinds carry an integer; Z2-valued kinds take two values
/// (majorana_z2 uses +-1 with -1 nontrivial, kane_mele_z2 uses 0/1).
inline InvariantGroup group_of(InvariantKind k) {
  return (k == InvariantKind::MajoranaZ2 || k == InvariantKind::KaneMeleZ2) ? InvariantGroup::Z2
                                                                            : InvariantGroup::Z;
}

struct InvariantResult {
  InvariantKind kind;
  long value = 0;
  double residual = 0.0;  // distance of the raw computed value from `value`

  bool nontrivial() const {
    return kind == InvariantKind::MajoranaZ2 ? value == -1 : value != 0;
  }
};

namespace detail {
inline InvariantResult rounded(InvariantKind kind, double raw) {
  const double v = std::round(raw);
  return {kind, static_cast<long>(v), std::abs(raw - v)};
}
}  // namespace detail

// --------------------------------------------------------------------------
// Chern number

/// Plaquettes are traversed k_x then k_y (counter-clockwise in the (k_x,k_y)
/// plane). The reversed orientation exists only to exercise the test suite.
enum class PlaquetteOrientation { KxKy, KyKx };

inline constexpr double kSingularLinkTol = 1e-10;

namespace detail {
/// Lattice field strength summed over an nx x ny torus; frames are indexed
/// ix + nx * iy and plaquettes are traversed x then y.
inline double lattice_flux(int nx, int ny, const std::function<const CMat&(int, int)>& frame) {
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  std::vector<cplx> link_x(n), link_y(n);
  auto index = [nx](int ix, int iy) { return static_cast<std::size_t>(ix) + static_cast<std::size_t>(nx) * iy; };
  auto unit_link = [](const CMat& a, const CMat& b) {
    const cplx det = (a.adjoint() * b).determinant();
    if (std::abs(det) < kSingularLinkTol)
      throw SingularLink("link overlap |det| = " + std::to_string(std::abs(det)) + "; refine the grid");
    return det / std::abs(det);
  };
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const CMat& here = frame(ix, iy);
      link_x[index(ix, iy)] = unit_link(here, frame((ix + 1) % nx, iy));
      link_y[index(ix, iy)] = unit_link(here, frame(ix, (iy + 1) % ny));
    }
  }
  double flux = 0.0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const cplx loop = link_x[index(ix, iy)] * link_y[index((ix + 1) % nx, iy)] *
                        std::conj(link_x[index(ix, (iy + 1) % ny)]) * std::conj(link_y[index(ix, iy)]);
      flux += std::arg(loop);
    }
  }
  return flux;
}
}  // namespace detail

/// Lattice field-strength Chern number from filled-band frames on a 2D grid.
/// The frames may carry any k-dependent gauge.
inline InvariantResult chern_from_frames(const KGrid& grid, const std::vector<CMat>& frames,
                                         PlaquetteOrientation orientation =
                                             PlaquetteOrientation::KxKy) {
  if (grid.dim() != 2) throw InvalidArgument("chern: needs a 2D grid");
  if (frames.size() != grid.size()) throw InvalidArgument("chern: one frame per grid point");
  const int m = grid.points_per_axis();
  double flux = detail::lattice_flux(m, m, [&](int ix, int iy) -> const CMat& {
    return frames[static_cast<std::size_t>(ix) + static_cast<std::size_t>(m) * iy];
  });
  if (orientation == PlaquetteOrientation::KyKx) flux = -flux;
  return detail::rounded(InvariantKind::Chern, flux / kTwoPi);
}

inline std::vector<CMat> filled_frames(const FlattenedSample& sample) {
  std::vector<CMat> frames;
  frames.reserve(sample.q.size());
  for (std::size_t i = 0; i < sample.q.size(); ++i) frames.push_back(sample.filled_frame(i));
  return frames;
}

inline InvariantResult chern(const FlattenedSample& sample,
                             PlaquetteOrientation orientation = PlaquetteOrientation::KxKy) {
  return chern_from_frames(sample.grid, filled_frames(sample), orientation);
}

// --------------------------------------------------------------------------
// Winding number

/// Unitary whose columns are the +1 then -1 eigenvectors of the chiral operator.
/// U_S is first rescaled by a global phase so that it squares to +I.
inline CMat chiral_basis(const CMat& us, Eigen::Index* plus_count) {
  const cplx c = (us * us).trace() / static_cast<double>(us.rows());
  const CMat herm_us = us * std::polar(1.0, -std::arg(c) / 2);
  const CMat sym = 0.5 * (herm_us + herm_us.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(sym);
  const auto& ev = es.eigenvalues();
  Eigen::Index minus = 0;
  while (minus < ev.size() && ev[minus] < 0.0) ++minus;
  const Eigen::Index plus = ev.size() - minus;
  CMat w(us.rows(), us.cols());
  w.leftCols(plus) = es.eigenvectors().rightCols(plus);
  w.rightCols(minus) = es.eigenvectors().leftCols(minus);
  *plus_count = plus;
  return w;
}

/// Winding of det q(k) around the origin, q the upper-right block of H(k) in
/// the chiral basis. Each phase step must stay below pi/2 in magnitude.
inline InvariantResult winding(const BlochModel& model, const CMat& us, const KGrid& grid,
                               double tol = kSymmetryTol, double gap_tol = kDefaultGapTol) {
  if (model.dim() != 1 || grid.dim() != 1) throw InvalidArgument("winding: needs a 1D model");
  const double chiral_res = residual_chiral(model, us, grid);
  if (chiral_res >= tol)
    throw ChiralViolation("winding: chiral residual " + std::to_string(chiral_res));
  Eigen::Index plus = 0;
  const CMat w = chiral_basis(us, &plus);
  if (2 * plus != us.rows())
    throw InvalidRepresentation("winding: chiral blocks have unequal size");

  const int m = grid.points_per_axis();
  std::vector<cplx> dets(m);
  for (int j = 0; j < m; ++j) {
    const std::vector<double> k{grid.coordinate(j)};
    const CMat h = eval(model, k);
    const double gap = spectral_gap(h);
    if (gap <= gap_tol) throw GapClosed(k, gap);
    dets[j] = (w.adjoint() * h * w).topRightCorner(plus, plus).determinant();
  }
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double step = std::arg(dets[(j + 1) % m] / dets[j]);
    if (std::abs(step) > kPi / 2)
      throw GridTooCoarse("winding: phase step " + std::to_string(step) + " at k index " +
                          std::to_string(j));
    total += step;
  }
  return detail::rounded(InvariantKind::Winding, total / kTwoPi);
}

// --------------------------------------------------------------------------
// Zero-dimensional count

inline constexpr double kZeroModeTol = 1e-10;

inline InvariantResult negative_count(const CMat& h) {
  if (h.rows() != h.cols()) throw InvalidArgument("negative_count: matrix is not square");
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double gap = ev.cwiseAbs().minCoeff();
  if (gap < kZeroModeTol) throw GapClosed({}, gap);
  return {InvariantKind::NegativeCount, static_cast<long>((ev.array() < 0.0).count()), 0.0};
}

// --------------------------------------------------------------------------
// Majorana number

/// X with X X^T = U for a symmetric unitary U: U = O diag(e^{i phi}) O^T with O
/// real orthogonal, X = O diag(e^{i phi / 2}).
inline CMat symmetric_unitary_root(const CMat& u) {
  const CMat sym = 0.5 * (u + u.transpose());
  const RMat re = sym.real();
  const RMat im = sym.imag();
  const Eigen::Index n = u.rows();
  Eigen::SelfAdjointEigenSolver<RMat> es_re(re);
  RMat o = es_re.eigenvectors();
  const RVec& ev = es_re.eigenvalues();
  // Re and Im commute; resolve Im inside each degenerate block of Re.
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && std::abs(ev[stop] - ev[start]) < 1e-8) ++stop;
    const Eigen::Index len = stop - start;
    if (len > 1) {
      const RMat basis = o.middleCols(start, len);
      Eigen::SelfAdjointEigenSolver<RMat> es_im(basis.transpose() * im * basis);
      o.middleCols(start, len) = basis * es_im.eigenvectors();
    }
    start = stop;
  }
  const CMat diag = o.transpose().cast<cplx>() * sym * o.cast<cplx>();
  CMat x = o.cast<cplx>();
  for (Eigen::Index i = 0; i < n; ++i) x.col(i) *= std::polar(1.0, std::arg(diag(i, i)) / 2);
  return x;
}

/// sign(Pf A(0) * Pf A(pi)) with A = -i V H V^dagger real antisymmetric in the
/// basis V where particle-hole symmetry is bare complex conjugation.
inline InvariantResult majorana_z2(const BlochModel& model, const CMat& uc,
                                   double tol = kSymmetryTol, double gap_tol = kDefaultGapTol) {
  if (model.dim() != 1) throw InvalidArgument("majorana_z2: needs a 1D model");
  const KGrid check_grid(1, default_points(1) - 1);
  const double res = residual_antiunitary(model, uc, AntiunitaryKind::C, check_grid);
  if (res >= tol) throw SymmetryViolation("majorana_z2: particle-hole residual " + std::to_string(res));
  if (square_sign(uc) != +1) throw InvalidRepresentation("majorana_z2: needs C^2 = +1");
  const CMat v = symmetric_unitary_root(uc).adjoint();
  double sign = 1.0;
  double leak = 0.0;
  for (double k : {0.0, kPi}) {
    const std::vector<double> kv{k};
    const CMat h = eval(model, kv);
    const double gap = spectral_gap(h);
    if (gap <= gap_tol) throw GapClosed(kv, gap);
    const CMat a = cplx(0, -1) * (v * h * v.adjoint());
    leak = std::max(leak, max_norm(a.imag()));
    RMat ar = a.real();
    ar = 0.5 * (ar - ar.transpose());
    sign *= pfaffian(ar) < 0.0 ? -1.0 : 1.0;
  }
  return {InvariantKind::MajoranaZ2, static_cast<long>(sign), leak};
}

// --------------------------------------------------------------------------
// Time-reversal Z2 from Wannier-centre flow

/// Wilson-loop eigenphases in (-pi, pi] along k_x at fixed k_y index.
inline std::vector<double> wilson_phases(const KGrid& grid, const std::vector<CMat>& frames,
                                         int ky_index) {
  const int m = grid.points_per_axis();
  const std::array<int, 2> start{0, ky_index};
  const std::size_t i0 = grid.linear_index(start);
  CMat w = CMat::Identity(frames[i0].cols(), frames[i0].cols());
  std::size_t i = i0;
  for (int step = 0; step < m; ++step) {
    const std::size_t next = grid.shifted(i, 0, +1);
    w = w * (frames[i].adjoint() * frames[next]);
    i = next;
  }
  Eigen::ComplexEigenSolver<CMat> es(w, false);
  std::vector<double> phases;
  for (Eigen::Index a = 0; a < es.eigenvalues().size(); ++a) phases.push_back(std::arg(es.eigenvalues()[a]));
  std::sort(phases.begin(), phases.end());
  return phases;
}

/// Midpoint of the largest circular gap between sorted phases.
inline double largest_gap_midpoint(const std::vector<double>& sorted) {
  double best = -1.0, mid = 0.0;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    const double lo = sorted[a];
    const double hi = a + 1 < sorted.size() ? sorted[a + 1] : sorted.front() + kTwoPi;
    if (hi - lo > best) {
      best = hi - lo;
      mid = wrap_phase(0.5 * (lo + hi));
    }
  }
  return mid;
}

inline constexpr double kWilsonDegeneracyTol = 1e-9;

/// Parity of Wannier-centre crossings of the largest-gap line between k_y = 0
/// and k_y = pi. Needs an even number of points per axis so k_y = pi is sampled.
inline InvariantResult kane_mele_z2(const FlattenedSample& sample, const CMat& ut,
                                    double tol = kSymmetryTol) {
  const KGrid& grid = sample.grid;
  if (grid.dim() != 2) throw InvalidArgument("kane_mele_z2: needs a 2D sample");
  if (grid.points_per_axis() % 2 != 0)
    throw InvalidArgument("kane_mele_z2: points per axis must be even to sample k_y = pi");
  if (sample.bands() % 2 != 0 || sample.filled % 2 != 0)
    throw InvalidArgument("kane_mele_z2: band and filled counts must be even");
  const double res = residual_antiunitary(sample, ut, AntiunitaryKind::T);
  if (res >= tol) throw SymmetryViolation("kane_mele_z2: time-reversal residual " + std::to_string(res));
  if (square_sign(ut) != -1) throw InvalidRepresentation("kane_mele_z2: needs T^2 = -1");

  const auto frames = filled_frames(sample);
  const int lines = grid.points_per_axis() / 2 + 1;
  std::vector<double> prev = wilson_phases(grid, frames, 0);
  double z_prev = largest_gap_midpoint(prev);
  long crossings = 0;
  for (int j = 1; j < lines; ++j) {
    const std::vector<double> cur = wilson_phases(grid, frames, j);
    const double z_cur = largest_gap_midpoint(cur);
    const double arc = wrap_phase(z_cur - z_prev);  // signed shortest arc z_prev -> z_cur
    for (double x : cur) {
      const double from_start = wrap_phase(x - z_prev);
      if (std::abs(from_start) < kWilsonDegeneracyTol ||
          std::abs(wrap_phase(x - z_cur)) < kWilsonDegeneracyTol)
        throw DegenerateWilsonPhases("kane_mele_z2: Wannier centre on the reference line at k_y index " +
                                     std::to_string(j));
      const bool inside = arc > 0 ? (from_start > 0 && from_start < arc)
                                  : (from_start < 0 && from_start > arc);
      if (inside) ++crossings;
    }
    z_prev = z_cur;
  }
  return {InvariantKind::KaneMeleZ2, crossings % 2, 0.0};
}

// --------------------------------------------------------------------------
// Dispatch

enum class DispatchStatus { Computed, NoInvariant, Unsupported };

struct InvariantOutcome {
  DispatchStatus status = DispatchStatus::Unsupported;
  InvariantGroup expected = InvariantGroup::Zero;
  std::optional<InvariantResult> result;
};

struct InvariantOptions {
  int points = 0;  // points per axis; 0 picks the per-invariant default
  double tol = kSymmetryTol;
  double gap_tol = kDefaultGapTol;
};

inline constexpr int kKaneMeleDefaultPoints = 200;  // 101 Wilson lines over k_y in [0, pi]

/// Pick the invariant that realizes the table group for (class, d) and compute it.
inline InvariantOutcome invariant_for(const BlochModel& model, const Classification& cls, int d,
                                      const InvariantOptions& opt = {}) {
  InvariantOutcome out;
  out.expected = expected_group(cls.az, d);
  // Asking about another dimension than the model's own has nothing to compute.
  if (d != model.dim()) return out;
  if (out.expected == InvariantGroup::Zero) {
    out.status = DispatchStatus::NoInvariant;
    return out;
  }
  const auto points = [&](int fallback) { return opt.points > 0 ? opt.points : fallback; };
  if (out.expected == InvariantGroup::Z) {
    if (d == 0) {
      out.result = negative_count(eval(model, std::span<const double>{}));
    } else if (d == 1 && cls.az.chiral && cls.accepted.chiral) {
      out.result = winding(model, *cls.accepted.chiral, KGrid(1, points(default_points(1))),
                           opt.tol, opt.gap_tol);
    } else if (d == 2) {
      out.result = chern(flatten(model, KGrid(2, points(default_points(2))), opt.gap_tol));
    }
  } else {
    if (d == 1 && cls.az.label == "D" && cls.accepted.ph) {
      out.result = majorana_z2(model, *cls.accepted.ph, opt.tol, opt.gap_tol);
    } else if (d == 2 && cls.az.label == "AII" && cls.accepted.tr) {
      out.result = kane_mele_z2(flatten(model, KGrid(2, points(kKaneMeleDefaultPoints)), opt.gap_tol),
                                *cls.accepted.tr, opt.tol);
    }
  }
  out.status = out.result ? DispatchStatus::Computed : DispatchStatus::Unsupported;
  return out;
}

}  // namespace tenfold
