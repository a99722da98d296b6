// Copyright 2026 The pcartan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcartan/circuit.hpp"

#include <cmath>
#include <optional>

#include <json.hpp>

namespace pcartan {

std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::kPbs: return "pbs";
    case ElementKind::kHwp: return "hwp";
    case ElementKind::kQwp: return "qwp";
    case ElementKind::kPs: return "ps";
  }
  return "?";
}

ElementKind parse_element_kind(std::string_view text) {
  if (text == "pbs") return ElementKind::kPbs;
  if (text == "hwp") return ElementKind::kHwp;
  if (text == "qwp") return ElementKind::kQwp;
  if (text == "ps") return ElementKind::kPs;
  throw InvalidInput("unsupported element kind '" + std::string(text) +
                     "' (expected pbs, hwp, qwp or ps)");
}

Matrix2c local_matrix(const OpticalElement& e) {
  switch (e.kind) {
    case ElementKind::kHwp: return hwp_matrix(e.angle);
    case ElementKind::kQwp: return qwp_matrix(e.angle);
    case ElementKind::kPs: return ps_matrix(e.angle);
    case ElementKind::kPbs: break;
  }
  throw InvalidInput("local_matrix: a PBS has no single-mode matrix");
}

void OpticalCircuit::validate() const {
  if (num_spatial_modes != 2 && num_spatial_modes != 4) {
    throw InvalidInput("circuit: spatial_modes must be 2 or 4, got " +
                       std::to_string(num_spatial_modes));
  }
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const OpticalElement& e = elements[k];
    const std::string where = "circuit element " + std::to_string(k) + ": ";
    auto in_range = [&](int m) { return m >= 0 && m < num_spatial_modes; };
    if (!in_range(e.mode)) {
      throw InvalidInput(where + "mode " + std::to_string(e.mode) + " out of range");
    }
    if (e.is_pbs()) {
      if (!in_range(e.partner)) {
        throw InvalidInput(where + "mode " + std::to_string(e.partner) + " out of range");
      }
      if (e.partner == e.mode) throw InvalidInput(where + "PBS needs two distinct modes");
    } else if (!std::isfinite(e.angle)) {
      throw InvalidInput(where + "angle is not finite");
    }
  }
}

void OpticalCircuit::append_chain(int mode, const WaveplateChain& chain) {
  if (chain.ps_angle) elements.push_back(OpticalElement::ps(mode, *chain.ps_angle));
  if (chain.qwp1_angle) elements.push_back(OpticalElement::qwp(mode, *chain.qwp1_angle));
  if (chain.hwp_angle) elements.push_back(OpticalElement::hwp(mode, *chain.hwp_angle));
  if (chain.qwp2_angle) elements.push_back(OpticalElement::qwp(mode, *chain.qwp2_angle));
}

CountReport element_count(const OpticalCircuit& c) {
  CountReport r;
  for (ElementKind k : {ElementKind::kPbs, ElementKind::kHwp, ElementKind::kQwp, ElementKind::kPs}) {
    r.by_kind[k] = 0;
  }
  for (const auto& e : c.elements) ++r.by_kind[e.kind];
  r.total = static_cast<int>(c.elements.size());
  if (c.num_spatial_modes == 4) {
    r.bound = kBoundFourModes;
    r.baseline_comparisons["m4_csd"] = kBaselineM4Csd - r.total;
  } else {
    r.bound = kBoundTwoModes;
    if (c.convention == DofConvention::kPolarizationSpatial) {
      r.baseline_comparisons["ps_csd_swap"] = kBaselinePsCsdSwap - r.total;
    } else {
      r.baseline_comparisons["sp_csd"] = kBaselineSpCsd - r.total;
    }
  }
  return r;
}

namespace {

using Elements = std::vector<OpticalElement>;

// Index of the next element after `k` touching mode `m`, or size().
std::size_t next_on_mode(const Elements& es, std::size_t k, int m) {
  for (std::size_t n = k + 1; n < es.size(); ++n) {
    if (es[n].touches(m)) return n;
  }
  return es.size();
}

bool drop_identities(Elements& es, const ToleranceConfig& tol) {
  const auto before = es.size();
  std::erase_if(es, [&](const OpticalElement& e) {
    return !e.is_pbs() && max_abs(local_matrix(e) - Matrix2c::Identity()) <= tol.angle_tol;
  });
  return es.size() != before;
}

bool merge_phase_shifters(Elements& es) {
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (es[k].kind != ElementKind::kPs) continue;
    const std::size_t n = next_on_mode(es, k, es[k].mode);
    if (n < es.size() && es[n].kind == ElementKind::kPs) {
      es[k].angle = wrap_angle(es[k].angle + es[n].angle);
      es.erase(es.begin() + static_cast<std::ptrdiff_t>(n));
      return true;
    }
  }
  return false;
}

bool cancel_pbs_pairs(Elements& es) {
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (!es[k].is_pbs()) continue;
    const int a = es[k].mode, b = es[k].partner;
    const std::size_t n = std::min(next_on_mode(es, k, a), next_on_mode(es, k, b));
    if (n == es.size() || !es[n].is_pbs()) continue;
    if ((es[n].mode == a && es[n].partner == b) || (es[n].mode == b && es[n].partner == a)) {
      es.erase(es.begin() + static_cast<std::ptrdiff_t>(n));
      es.erase(es.begin() + static_cast<std::ptrdiff_t>(k));
      return true;
    }
  }
  return false;
}

bool resynthesize_runs(Elements& es, const ToleranceConfig& tol) {
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (es[k].is_pbs()) continue;
    const int m = es[k].mode;
    std::vector<std::size_t> run{k};
    Matrix2c product = local_matrix(es[k]);
    for (std::size_t n = next_on_mode(es, k, m); n < es.size() && !es[n].is_pbs();
         n = next_on_mode(es, n, m)) {
      run.push_back(n);
      product = local_matrix(es[n]) * product;
    }
    if (run.size() < 2) continue;
    const WaveplateChain chain = synthesize_u2(product, tol);
    if (static_cast<std::size_t>(chain.element_count()) >= run.size()) continue;

    OpticalCircuit replacement;
    replacement.append_chain(m, chain);
    for (auto it = run.rbegin(); it != run.rend(); ++it) {
      es.erase(es.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    es.insert(es.begin() + static_cast<std::ptrdiff_t>(k), replacement.elements.begin(),
              replacement.elements.end());
    return true;
  }
  return false;
}

}  // namespace

OpticalCircuit optimize(const OpticalCircuit& c, const ToleranceConfig& tol) {
  c.validate();
  OpticalCircuit out = c;
  Elements& es = out.elements;
  bool changed = true;
  while (changed) {
    changed = drop_identities(es, tol);
    while (merge_phase_shifters(es)) changed = true;
    while (cancel_pbs_pairs(es)) changed = true;
    while (resynthesize_runs(es, tol)) changed = true;
  }
  return out;
}

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) {
  throw InvalidInput("circuit JSON: " + what);
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) schema_error(where + "unexpected key \"" + key + "\"");
  }
}

}  // namespace

std::string serialize(const OpticalCircuit& c, int indent) {
  json doc;
  doc["version"] = 1;
  doc["convention"] = std::string(to_string(c.convention));
  doc["spatial_modes"] = c.num_spatial_modes;
  json elements = json::array();
  for (const auto& e : c.elements) {
    json el;
    el["kind"] = std::string(to_string(e.kind));
    el["modes"] = e.is_pbs() ? json::array({e.mode, e.partner}) : json::array({e.mode});
    if (!e.is_pbs()) el["angle_rad"] = e.angle;
    elements.push_back(std::move(el));
  }
  doc["elements"] = std::move(elements);
  json meta = json::object();
  for (const auto& [k, v] : c.metadata) meta[k] = v;
  doc["metadata"] = std::move(meta);
  return doc.dump(indent);
}

OpticalCircuit deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  reject_unknown_keys(doc, {"version", "convention", "spatial_modes", "elements", "metadata"}, "");

  if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"] != 1) {
    schema_error("\"version\" must be 1");
  }
  OpticalCircuit c;
  if (!doc.contains("convention") || !doc["convention"].is_string()) {
    schema_error("missing string \"convention\"");
  }
  c.convention = parse_convention(doc["convention"].get<std::string>());
  if (!doc.contains("spatial_modes") || !doc["spatial_modes"].is_number_integer()) {
    schema_error("missing integer \"spatial_modes\"");
  }
  c.num_spatial_modes = doc["spatial_modes"].get<int>();
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    schema_error("missing array \"elements\"");
  }

  std::size_t index = 0;
  for (const json& el : doc["elements"]) {
    const std::string where = "element " + std::to_string(index++) + ": ";
    if (!el.is_object()) schema_error(where + "must be an object");
    reject_unknown_keys(el, {"kind", "modes", "angle_rad"}, where);
    if (!el.contains("kind") || !el["kind"].is_string()) schema_error(where + "missing \"kind\"");
    OpticalElement e;
    try {
      e.kind = parse_element_kind(el["kind"].get<std::string>());
    } catch (const InvalidInput& err) {
      schema_error(where + err.what());
    }
    const std::size_t arity = e.is_pbs() ? 2 : 1;
    if (!el.contains("modes") || !el["modes"].is_array() || el["modes"].size() != arity) {
      schema_error(where + "\"modes\" must list " + std::to_string(arity) + " mode index(es)");
    }
    for (const json& m : el["modes"]) {
      if (!m.is_number_integer()) schema_error(where + "mode indices must be integers");
    }
    e.mode = el["modes"][0].get<int>();
    if (e.is_pbs()) {
      e.partner = el["modes"][1].get<int>();
      if (el.contains("angle_rad")) schema_error(where + "a pbs takes no \"angle_rad\"");
    } else {
      if (!el.contains("angle_rad") || !el["angle_rad"].is_number()) {
        schema_error(where + "missing numeric \"angle_rad\"");
      }
      e.angle = el["angle_rad"].get<double>();
    }
    c.elements.push_back(e);
  }

  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) schema_error("\"metadata\" must be an object");
    for (const auto& [k, v] : doc["metadata"].items()) {
      if (!v.is_string()) schema_error("metadata value for \"" + k + "\" must be a string");
      c.metadata[k] = v.get<std::string>();
    }
  }
  c.validate();
  return c;
}

}  // namespace pcartan
