#pragma once

#include <map>
#include <random>
#include <vector>

#include "../oracles.hpp"
#include "tenfold/model.hpp"
#include "tenfold/symmetry.hpp"

namespace testutil {

using tenfold::BlochModel;
using tenfold::CMat;
using tenfold::Displacement;

/// Random Hermitian-closed model with nearest-neighbour hoppings along each axis.
/// `onsite` adds a fixed +-onsite splitting so the spectrum stays gapped.
inline BlochModel random_model(std::mt19937& rng, int dim, int bands, double hop_scale = 0.3,
                               double onsite = 0.0) {
  std::map<Displacement, CMat> hop;
  CMat h0 = oracle::random_hermitian(rng, bands) * hop_scale;
  for (int b = 0; b < bands; ++b) h0(b, b) += (b < bands / 2 ? -onsite : onsite);
  hop.emplace(Displacement(dim, 0), h0);
  for (int a = 0; a < dim; ++a) {
    Displacement r(dim, 0);
    r[a] = 1;
    const CMat h = oracle::random_complex(rng, bands) * hop_scale;
    hop.emplace(r, h);
    r[a] = -1;
    hop.emplace(r, h.adjoint());
  }
  return BlochModel(dim, bands, std::move(hop));
}

struct SymOp {
  CMat u;
  bool antiunitary;
  double sign;  // +1 commuting (T), -1 anticommuting (C, S)
};

/// Alternating projections onto the models respecting every operation.
/// Antiunitary images keep R (k -> -k and conjugation cancel on the phase).
inline BlochModel symmetrize(const BlochModel& model, const std::vector<SymOp>& ops, int rounds = 60) {
  auto hop = model.hoppings();
  for (int it = 0; it < rounds; ++it) {
    for (const auto& op : ops) {
      for (auto& [r, h] : hop) {
        const CMat src = op.antiunitary ? CMat(h.conjugate()) : h;
        const CMat image = op.sign * op.u * src * op.u.adjoint();
        h = (h + image) / 2.0;
      }
    }
  }
  return BlochModel(model.dim(), model.bands(), std::move(hop));
}

/// H -> V H V^dagger on every hopping.
inline BlochModel rotate(const BlochModel& model, const CMat& v) {
  auto hop = model.hoppings();
  for (auto& [r, h] : hop) h = v * h * v.adjoint();
  return BlochModel(model.dim(), model.bands(), std::move(hop));
}

}  // namespace testutil
