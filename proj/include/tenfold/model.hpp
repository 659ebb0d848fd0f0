#pragma once

#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace tenfold {

using Displacement = std::vector<int>;

/// Tight-binding Bloch Hamiltonian H(k) = sum_R exp(i k.R) H_R.
///
/// Construction validates Hermitian closure: every stored R has -R stored with
/// H_{-R} = H_R^dagger. A model that fails is rejected, never repaired.
class BlochModel {
 public:
  static constexpr double kClosureTol = 1e-13;

  BlochModel(int dim, int bands, std::map<Displacement, CMat> hoppings)
      : dim_(dim), bands_(bands), hoppings_(std::move(hoppings)) {
    validate();
  }

  /// Zero-dimensional model from a single Hermitian matrix.
  static BlochModel constant(const CMat& h) {
    return BlochModel(0, static_cast<int>(h.rows()), {{Displacement{}, h}});
  }

  int dim() const { return dim_; }
  int bands() const { return bands_; }
  const std::map<Displacement, CMat>& hoppings() const { return hoppings_; }

 private:
  void validate() const {
    if (dim_ < 0 || dim_ > 7) throw ModelError("dim must be in 0..7, got " + std::to_string(dim_));
    if (bands_ < 1) throw ModelError("bands must be >= 1");
    if (hoppings_.empty()) throw ModelError("model has no hopping terms");
    if (dim_ == 0 && hoppings_.size() != 1)
      throw ModelError("a 0-dimensional model has exactly one term");
    for (const auto& [r, h] : hoppings_) {
      if (static_cast<int>(r.size()) != dim_)
        throw ModelError("displacement length differs from dim", r);
      if (h.rows() != bands_ || h.cols() != bands_)
        throw ModelError("hopping matrix is not bands x bands", r);
      Displacement minus(r.size());
      std::transform(r.begin(), r.end(), minus.begin(), [](int x) { return -x; });
      auto it = hoppings_.find(minus);
      if (it == hoppings_.end()) throw ModelError("missing partner -R for displacement", r);
      const double dev = max_norm(it->second - h.adjoint());
      if (dev >= kClosureTol)
        throw ModelError("hermiticity violation: H_{-R} != H_R^dagger (deviation " +
                             std::to_string(dev) + ")",
                         r);
    }
  }

  int dim_;
  int bands_;
  std::map<Displacement, CMat> hoppings_;
};

/// Uniform torus sampling k = 2*pi*(j_1..j_d)/m; axis 0 varies fastest.
class KGrid {
 public:
  KGrid(int dim, int points_per_axis) : dim_(dim), m_(points_per_axis) {
    if (dim < 0) throw InvalidArgument("grid dim must be >= 0");
    if (dim > 0 && points_per_axis < 2) throw InvalidArgument("grid needs >= 2 points per axis");
    size_ = 1;
    for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(m_);
  }

  int dim() const { return dim_; }
  int points_per_axis() const { return m_; }
  std::size_t size() const { return size_; }

  std::vector<int> multi_index(std::size_t idx) const {
    std::vector<int> j(dim_);
    for (int a = 0; a < dim_; ++a) {
      j[a] = static_cast<int>(idx % m_);
      idx /= m_;
    }
    return j;
  }

  std::size_t linear_index(std::span<const int> j) const {
    std::size_t idx = 0;
    for (int a = dim_ - 1; a >= 0; --a) {
      const int wrapped = ((j[a] % m_) + m_) % m_;
      idx = idx * m_ + static_cast<std::size_t>(wrapped);
    }
    return idx;
  }

  double coordinate(int j) const { return kTwoPi * j / m_; }

  std::vector<double> point(std::size_t idx) const {
    auto j = multi_index(idx);
    std::vector<double> k(dim_);
    for (int a = 0; a < dim_; ++a) k[a] = coordinate(j[a]);
    return k;
  }

  std::size_t shifted(std::size_t idx, int axis, int step) const {
    auto j = multi_index(idx);
    j[axis] += step;
    return linear_index(j);
  }

  /// Index of -k.
  std::size_t negated(std::size_t idx) const {
    auto j = multi_index(idx);
    for (auto& x : j) x = -x;
    return linear_index(j);
  }

 private:
  int dim_;
  int m_;
  std::size_t size_;
};

inline CMat eval(const BlochModel& model, std::span<const double> k) {
  if (static_cast<int>(k.size()) != model.dim())
    throw InvalidArgument("eval: k has length " + std::to_string(k.size()) + ", model dim is " +
                          std::to_string(model.dim()));
  CMat h = CMat::Zero(model.bands(), model.bands());
  for (const auto& [r, hr] : model.hoppings()) {
    double phase = 0.0;
    for (std::size_t a = 0; a < k.size(); ++a) phase += k[a] * r[a];
    h += std::polar(1.0, phase) * hr;
  }
  return h;
}

inline CMat eval(const BlochModel& model, std::initializer_list<double> k) {
  return eval(model, std::span<const double>(k.begin(), k.size()));
}

/// Smallest |eigenvalue| of a Hermitian matrix (Fermi level at zero).
inline double spectral_gap(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().minCoeff();
}

inline double min_gap(const BlochModel& model, const KGrid& grid) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto k = grid.point(i);
    gap = std::min(gap, spectral_gap(eval(model, k)));
  }
  return gap;
}

struct FlatMatrix {
  CMat q;
  int filled = 0;
  double gap = 0.0;
};

/// Q = I - 2P with P the projector onto negative-energy states. The gap is
/// returned, not checked; callers decide what counts as closed.
inline FlatMatrix flatten_matrix(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& ev = es.eigenvalues();
  FlatMatrix out;
  out.gap = ev.cwiseAbs().minCoeff();
  while (out.filled < ev.size() && ev[out.filled] < 0.0) ++out.filled;
  const auto filled_vecs = es.eigenvectors().leftCols(out.filled);
  out.q = CMat::Identity(h.rows(), h.cols()) - 2.0 * filled_vecs * filled_vecs.adjoint();
  return out;
}

/// Spectrally flattened model on a grid.
struct FlattenedSample {
  KGrid grid;
  std::vector<CMat> q;
  int filled = 0;

  int bands() const { return q.empty() ? 0 : static_cast<int>(q.front().rows()); }

  /// Orthonormal basis of the filled (Q = -1) subspace at sample idx.
  CMat filled_frame(std::size_t idx) const {
    Eigen::SelfAdjointEigenSolver<CMat> es(q[idx]);
    return es.eigenvectors().leftCols(filled);
  }
};

inline constexpr double kDefaultGapTol = 1e-6;

inline int default_points(int dim) { return dim == 1 ? 201 : 61; }

inline FlattenedSample flatten(const BlochModel& model, const KGrid& grid,
                               double gap_tol = kDefaultGapTol) {
  if (grid.dim() != model.dim())
    throw InvalidArgument("flatten: grid dim differs from model dim");
  FlattenedSample out{grid, {}, 0};
  out.q.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto k = grid.point(i);
    FlatMatrix f = flatten_matrix(eval(model, k));
    if (f.gap <= gap_tol) throw GapClosed(k, f.gap);
    if (i == 0) {
      out.filled = f.filled;
    } else if (f.filled != out.filled) {
      throw InconsistentFilling("negative-band count changes from " + std::to_string(out.filled) +
                                " to " + std::to_string(f.filled) + " across the grid");
    }
    out.q.push_back(std::move(f.q));
  }
  return out;
}

}  // namespace tenfold
