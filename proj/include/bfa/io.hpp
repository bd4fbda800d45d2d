#pragma once
// JSON schemas: character tables, weight descriptors, group functions,
// Fourier coefficients, and report payloads.  All emitted numbers are
// rounded to 12 significant digits so reports reproduce byte-for-byte.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfa/diagnostics.hpp"
#include "bfa/dual.hpp"
#include "bfa/fourier.hpp"
#include "bfa/line_weight.hpp"
#include "bfa/weight.hpp"

namespace bfa {

using Json = nlohmann::ordered_json;

inline double round12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline Json num(double v) { return Json(round12(v)); }

inline Json complex_to_json(const Complex& z) {
  return Json::array({num(z.real()), num(z.imag())});
}

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

// ---- character tables -----------------------------------------------------
// {"order": n, "classes": [{"size": s, "name": str}],
//  "irreps": [{"dim": d, "char": [[re,im], ...]}], "conj": [int]}

inline Json table_to_json(const CharacterTable& t) {
  Json j;
  j["order"] = t.order();
  j["classes"] = Json::array();
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    j["classes"].push_back({{"size", t.cls(c).size}, {"name", t.cls(c).name}});
  j["irreps"] = Json::array();
  for (std::size_t i = 0; i < t.num_irreps(); ++i) {
    Json row;
    row["dim"] = t.irrep(i).dim;
    row["char"] = Json::array();
    for (const auto& z : t.irrep(i).chars) row["char"].push_back(complex_to_json(z));
    j["irreps"].push_back(std::move(row));
  }
  j["conj"] = Json::array();
  for (std::size_t i = 0; i < t.num_irreps(); ++i) j["conj"].push_back(t.conj_index(i));
  return j;
}

inline CharacterTable table_from_json(const Json& j) {
  try {
    long long order = j.at("order").get<long long>();
    std::vector<ConjClass> classes;
    for (const auto& c : j.at("classes"))
      classes.push_back({c.at("size").get<long long>(),
                         c.contains("name") ? c.at("name").get<std::string>() : ""});
    std::vector<IrrepRow> irreps;
    for (const auto& r : j.at("irreps")) {
      IrrepRow row;
      row.dim = r.at("dim").get<int>();
      for (const auto& z : r.at("char")) row.chars.push_back(complex_from_json(z));
      if (r.contains("name")) row.name = r.at("name").get<std::string>();
      irreps.push_back(std::move(row));
    }
    std::vector<int> conj;
    for (const auto& c : j.at("conj")) conj.push_back(c.get<int>());
    return CharacterTable(order, std::move(classes), std::move(irreps), std::move(conj));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed character table: ") + e.what());
  }
}

// ---- weights ----------------------------------------------------------------
// {"family": str, "params": {...}, "table": {...}, "default": x|null,
//  "delta": x, "factors": [...]}

inline Json weight_to_json(const Weight& w) {
  Json j;
  j["family"] = family_name(w.family());
  switch (w.family()) {
    case WeightFamily::Trivial:
      break;
    case WeightFamily::OmegaA:
    case WeightFamily::SigmaA:
      j["params"] = {{"a", num(w.param())}};
      break;
    case WeightFamily::RhoB:
    case WeightFamily::ExpDimB:
      j["params"] = {{"b", num(w.param())}};
      break;
    case WeightFamily::PointwiseProduct:
    case WeightFamily::Cross: {
      j["factors"] = Json::array();
      for (const auto& c : w.children()) j["factors"].push_back(weight_to_json(c));
      break;
    }
    case WeightFamily::Table: {
      Json table = Json::object();
      for (const auto& [label, v] : w.table_values())
        table[w.dual().label_name(label)] = num(v);
      j["table"] = std::move(table);
      j["default"] = w.table_default() ? Json(num(*w.table_default())) : Json(nullptr);
      j["delta"] = num(w.table_delta());
      break;
    }
    case WeightFamily::Symmetrized:
      j["base"] = weight_to_json(w.children()[0]);
      break;
  }
  return j;
}

inline Weight weight_from_json(const DualPtr& dual, const Json& j) {
  try {
    std::string family = j.at("family").get<std::string>();
    auto param = [&](const char* key, double fallback) {
      if (j.contains("params") && j["params"].contains(key))
        return j["params"][key].get<double>();
      return fallback;
    };
    if (family == "trivial") return Weight::trivial(dual);
    if (family == "omega_a") return Weight::omega_a(dual, param("a", 1.0));
    if (family == "sigma_a") return Weight::sigma_a(dual, param("a", 1.0));
    if (family == "rho_b") return Weight::rho_b(dual, param("b", 1.0));
    if (family == "exp_dim_b") return Weight::exp_dim_b(dual, param("b", 1.0));
    if (family == "product") {
      const auto& f = j.at("factors");
      if (f.size() != 2) throw InputError("pointwise product takes exactly two factors");
      return Weight::pointwise_product(weight_from_json(dual, f[0]),
                                       weight_from_json(dual, f[1]));
    }
    if (family == "cross") {
      if (dual->kind() != DualTable::Kind::Product)
        throw InputError("cross weight needs a product group");
      const auto& f = j.at("factors");
      std::vector<Weight> children;
      if (f.size() != dual->factors().size())
        throw InputError("cross weight factor count does not match the group");
      for (std::size_t i = 0; i < f.size(); ++i)
        children.push_back(weight_from_json(dual->factors()[i], f[i]));
      return Weight::cross(dual, std::move(children));
    }
    if (family == "symmetrized") return weight_from_json(dual, j.at("base")).symmetrized();
    if (family == "table") {
      std::map<IrrepLabel, double> values;
      for (const auto& [key, v] : j.at("table").items())
        values[dual->parse_label(key)] = v.get<double>();
      std::optional<double> fallback;
      if (j.contains("default") && !j["default"].is_null())
        fallback = j["default"].get<double>();
      double delta = j.at("delta").get<double>();
      return Weight::table(dual, std::move(values), fallback, delta);
    }
    throw InputError("unknown weight family '" + family + "'");
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed weight descriptor: ") + e.what());
  }
}

// ---- line weights -----------------------------------------------------------

inline Json line_weight_to_json(const LineWeight& w) {
  Json j;
  if (w.is_tau()) {
    j["family"] = "tau_a";
    j["a"] = num(w.a());
  } else {
    j["grid"] = Json::array();
    for (double x : w.grid()) j["grid"].push_back(num(x));
    j["values"] = Json::array();
    for (double v : w.values()) j["values"].push_back(num(v));
    j["delta"] = num(w.delta());
  }
  return j;
}

inline LineWeight line_weight_from_json(const Json& j) {
  try {
    if (j.contains("family")) {
      if (j["family"].get<std::string>() != "tau_a")
        throw InputError("unknown line weight family");
      return LineWeight::tau_a(j.at("a").get<double>());
    }
    std::vector<double> grid, values;
    for (const auto& x : j.at("grid")) grid.push_back(x.get<double>());
    for (const auto& v : j.at("values")) values.push_back(v.get<double>());
    return LineWeight::sampled(std::move(grid), std::move(values), j.at("delta").get<double>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed line weight: ") + e.what());
  }
}

// ---- group functions and coefficients ----------------------------------------

inline Json function_to_json(const std::string& group, const GroupFunction& f) {
  Json j;
  j["group"] = group;
  j["values"] = Json::array();
  for (const auto& z : f.values) j["values"].push_back(complex_to_json(z));
  return j;
}

inline GroupFunction function_from_json(const Json& j) {
  try {
    GroupFunction f;
    for (const auto& z : j.at("values")) f.values.push_back(complex_from_json(z));
    return f;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group function: ") + e.what());
  }
}

inline Json coefficients_to_json(const FourierCoefficients& c) {
  Json j;
  j["irreps"] = Json::array();
  for (const auto& m : c.mats) {
    Json block;
    block["dim"] = m.rows();
    block["matrix"] = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index cidx = 0; cidx < m.cols(); ++cidx)
        row.push_back(complex_to_json(m(r, cidx)));
      block["matrix"].push_back(std::move(row));
    }
    j["irreps"].push_back(std::move(block));
  }
  return j;
}

inline FourierCoefficients coefficients_from_json(const Json& j) {
  try {
    FourierCoefficients c;
    for (const auto& block : j.at("irreps")) {
      long long d = block.at("dim").get<long long>();
      Matrix m(d, d);
      const auto& rows = block.at("matrix");
      if (static_cast<long long>(rows.size()) != d)
        throw InputError("coefficient block row count does not match dim");
      for (long long r = 0; r < d; ++r) {
        if (static_cast<long long>(rows[r].size()) != d)
          throw InputError("coefficient block is not square");
        for (long long cidx = 0; cidx < d; ++cidx)
          m(r, cidx) = complex_from_json(rows[r][cidx]);
      }
      c.mats.push_back(std::move(m));
    }
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed coefficients: ") + e.what());
  }
}

// ---- reports -----------------------------------------------------------------

inline Json violations_to_json(const DualTable& dual, const ViolationReport& r) {
  Json j;
  j["truncation"] = r.truncation;
  j["checked_pairs"] = r.checked_pairs;
  j["violations"] = Json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"pi", dual.label_name(v.pi)},
                               {"rho", dual.label_name(v.rho)},
                               {"sigma", dual.label_name(v.sigma)},
                               {"ratio", num(v.ratio)}});
  return j;
}

inline Json scan_to_json(const DualTable& dual, const ScanReport& r) {
  Json j;
  j["labels"] = Json::array();
  for (const auto& l : r.labels) j["labels"].push_back(dual.label_name(l));
  j["theta"] = Json::array();
  for (const auto& row : r.theta) {
    Json jr = Json::array();
    for (double v : row) jr.push_back(num(v));
    j["theta"].push_back(std::move(jr));
  }
  j["tail_start"] = r.tail_start;
  j["threshold"] = num(r.threshold);
  j["row_tail_sup"] = Json::array();
  for (double v : r.row_tail_sup) j["row_tail_sup"].push_back(num(v));
  j["col_tail_sup"] = Json::array();
  for (double v : r.col_tail_sup) j["col_tail_sup"].push_back(num(v));
  j["closed_form_limits"] = Json::object();
  if (r.has_closed_form) {
    j["closed_form_limits"]["rows"] = Json::array();
    j["closed_form_limits"]["cols"] = Json::array();
    for (double v : r.closed_form_row) j["closed_form_limits"]["rows"].push_back(num(v));
    for (double v : r.closed_form_col) j["closed_form_limits"]["cols"].push_back(num(v));
  }
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

inline Json fusion_to_json(const DualTable& dual, const FusionVector& v) {
  Json j = Json::object();
  for (const auto& [label, m] : v.entries) j[dual.label_name(label)] = m;
  return j;
}

inline Json line_report_to_json(const LineReport& r) {
  Json j;
  j["grid"] = r.grid;
  j["checked_pairs"] = r.checked_pairs;
  j["extrapolated_sums"] = r.extrapolated_sums;
  j["violations"] = Json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"x", num(v.x)}, {"y", num(v.y)}, {"ratio", num(v.ratio)}});
  return j;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace bfa
