#pragma once

#include <map>
#include <string>
#include <vector>

#include "model.hpp"
#include "symmetry.hpp"

namespace tenfold::builtin {

/// A model from the built-in corpus with its canonical symmetry representations.
struct BuiltinModel {
  std::string name;
  std::map<std::string, double> params;
  BlochModel model;
  SymmetrySpec symmetries;
};

using Params = std::map<std::string, double>;

namespace detail {
inline CMat mat2(cplx a, cplx b, cplx c, cplx d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace detail

/// SSH chain: H(k) = [[0, v + w e^{ik}], [v + w e^{-ik}, 0]]. Winding +1 for |v| < |w|.
inline BlochModel ssh(double v, double w) {
  using detail::mat2;
  return BlochModel(1, 2,
                    {{{0}, mat2(0, v, v, 0)}, {{1}, mat2(0, w, 0, 0)}, {{-1}, mat2(0, 0, w, 0)}});
}

/// Qi-Wu-Zhang: sin kx sx + sin ky sy + (m + cos kx + cos ky) sz.
inline BlochModel qwz(double m) {
  const CMat sx = pauli::x(), sy = pauli::y(), sz = pauli::z();
  const cplx half_i(0, 0.5);
  // sin k = (e^{ik} - e^{-ik}) / 2i,  cos k = (e^{ik} + e^{-ik}) / 2
  return BlochModel(2, 2,
                    {{{0, 0}, m * sz},
                     {{1, 0}, -half_i * sx + 0.5 * sz},
                     {{-1, 0}, half_i * sx + 0.5 * sz},
                     {{0, 1}, -half_i * sy + 0.5 * sz},
                     {{0, -1}, half_i * sy + 0.5 * sz}});
}

/// Kitaev chain in the Nambu basis: (-2t cos k - mu) tz + 2 delta sin k ty.
inline BlochModel kitaev(double t, double delta, double mu) {
  const CMat tz = pauli::z(), ty = pauli::y();
  const cplx i(0, 1);
  return BlochModel(1, 2,
                    {{{0}, -mu * tz},
                     {{1}, -t * tz - i * delta * ty},
                     {{-1}, -t * tz + i * delta * ty}});
}

/// BHZ: h(k) (+) conj(h(-k)) with h the QWZ block; `coupling` adds a
/// time-reversal-preserving spin mixing c * sy in the off-diagonal blocks.
inline BlochModel bhz(double m, double coupling = 0.0) {
  const BlochModel block = qwz(m);
  std::map<Displacement, CMat> hop;
  for (const auto& [r, h] : block.hoppings()) {
    CMat big = CMat::Zero(4, 4);
    big.topLeftCorner(2, 2) = h;
    big.bottomRightCorner(2, 2) = h.conjugate();
    hop.emplace(r, big);
  }
  hop.at({0, 0}).topRightCorner(2, 2) = coupling * pauli::y();
  hop.at({0, 0}).bottomLeftCorner(2, 2) = coupling * pauli::y();
  return BlochModel(2, 4, std::move(hop));
}

/// Rice-Mele snapshot on the pump cycle v = w + dv cos(theta), staggering = delta sin(theta):
/// H(k) = [[stag, v + w e^{ik}], [v + w e^{-ik}, -stag]].
inline BlochModel rice_mele(double w, double dv, double delta, double theta) {
  using detail::mat2;
  const double v = w + dv * std::cos(theta);
  const double stag = delta * std::sin(theta);
  return BlochModel(1, 2, {{{0}, mat2(stag, v, v, -stag)},
                           {{1}, mat2(0, w, 0, 0)},
                           {{-1}, mat2(0, 0, w, 0)}});
}

inline const std::map<std::string, Params>& defaults() {
  static const std::map<std::string, Params> d{
      {"ssh", {{"v", 0.5}, {"w", 1.0}}},
      {"qwz", {{"m", 1.0}}},
      {"kitaev", {{"t", 1.0}, {"delta", 1.0}, {"mu", 1.0}}},
      {"bhz", {{"m", 1.0}, {"coupling", 0.0}}},
      {"rice-mele", {{"w", 1.0}, {"dv", 0.5}, {"delta", 0.5}, {"theta", 0.0}}},
  };
  return d;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [n, p] : defaults()) out.push_back(n);
  return out;
}

/// Build a named model; `overrides` replaces defaults and must name known parameters.
inline BuiltinModel make(const std::string& name, const Params& overrides = {}) {
  auto it = defaults().find(name);
  if (it == defaults().end()) throw InvalidArgument("unknown builtin model '" + name + "'");
  Params p = it->second;
  for (const auto& [key, value] : overrides) {
    if (!p.contains(key))
      throw InvalidArgument("builtin '" + name + "' has no parameter '" + key + "'");
    p[key] = value;
  }
  const CMat id2 = CMat::Identity(2, 2);
  if (name == "ssh")
    return {name, p, ssh(p["v"], p["w"]), {id2, pauli::z(), pauli::z()}};
  if (name == "qwz") return {name, p, qwz(p["m"]), {}};
  if (name == "kitaev")
    return {name, p, kitaev(p["t"], p["delta"], p["mu"]), {std::nullopt, pauli::x(), std::nullopt}};
  if (name == "bhz")
    return {name, p, bhz(p["m"], p["coupling"]), {kron(pauli::eps(), id2), std::nullopt, std::nullopt}};
  return {name, p, rice_mele(p["w"], p["dv"], p["delta"], p["theta"]), {id2, std::nullopt, std::nullopt}};
}

}  // namespace tenfold::builtin
