#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "model.hpp"
#include "symmetry.hpp"

namespace tenfold::io {

using json = nlohmann::json;

/// Matrix as {"re": [[..]], "im": [[..]]}, row-major.
inline json matrix_to_json(const CMat& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ir = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

inline CMat matrix_from_json(const json& j, Eigen::Index n, const std::string& where) {
  if (!j.is_object() || !j.contains("re"))
    throw InvalidArgument(where + ": matrix needs a \"re\" field");
  const json& re = j.at("re");
  const json im = j.contains("im") ? j.at("im") : json();
  auto rows_ok = [n](const json& a) {
    if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != n) return false;
    for (const auto& row : a)
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) return false;
    return true;
  };
  if (!rows_ok(re) || (!im.is_null() && !rows_ok(im)))
    throw InvalidArgument(where + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                          " re/im arrays");
  CMat m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const double x = re[r][c].get<double>();
      const double y = im.is_null() ? 0.0 : im[r][c].get<double>();
      m(r, c) = cplx(x, y);
    }
  return m;
}

struct LoadedModel {
  BlochModel model;
  SymmetrySpec symmetries;
};

inline json to_json(const BlochModel& model, const SymmetrySpec& sym = {}) {
  json hop = json::array();
  for (const auto& [r, h] : model.hoppings()) {
    json entry = matrix_to_json(h);
    entry["R"] = r;
    hop.push_back(std::move(entry));
  }
  json out{{"dim", model.dim()}, {"bands", model.bands()}, {"hoppings", std::move(hop)}};
  json syms = json::object();
  if (sym.tr) syms["T"] = matrix_to_json(*sym.tr);
  if (sym.ph) syms["C"] = matrix_to_json(*sym.ph);
  if (sym.chiral) syms["S"] = matrix_to_json(*sym.chiral);
  if (!syms.empty()) out["symmetries"] = std::move(syms);
  return out;
}

/// Parse a model document. Structural problems raise InvalidArgument; Hermitian
/// closure failures raise ModelError carrying the offending displacement.
inline LoadedModel from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InvalidArgument("model document must be a JSON object");
    const int dim = doc.at("dim").get<int>();
    const int bands = doc.at("bands").get<int>();
    if (bands < 1) throw InvalidArgument("bands must be >= 1");
    const json& hop = doc.at("hoppings");
    if (!hop.is_array()) throw InvalidArgument("hoppings must be an array");
    std::map<Displacement, CMat> terms;
    for (const auto& entry : hop) {
      Displacement r = entry.at("R").get<Displacement>();
      std::ostringstream where;
      where << "hopping R=" << json(r).dump();
      CMat h = matrix_from_json(entry, bands, where.str());
      if (!terms.emplace(r, std::move(h)).second)
        throw ModelError("duplicate displacement", r);
    }
    LoadedModel out{BlochModel(dim, bands, std::move(terms)), {}};
    if (doc.contains("symmetries")) {
      const json& s = doc.at("symmetries");
      if (s.contains("T")) out.symmetries.tr = matrix_from_json(s.at("T"), bands, "symmetry T");
      if (s.contains("C")) out.symmetries.ph = matrix_from_json(s.at("C"), bands, "symmetry C");
      if (s.contains("S")) out.symmetries.chiral = matrix_from_json(s.at("S"), bands, "symmetry S");
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed model document: ") + e.what());
  }
}

inline LoadedModel load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open model file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(doc);
}

}  // namespace tenfold::io
