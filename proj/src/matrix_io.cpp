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

#include "pcartan/matrix_io.hpp"

#include <json.hpp>

namespace pcartan {

using json = nlohmann::ordered_json;

std::string matrix_to_json(const ComplexMatrix& m, int indent) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc;
  doc["dim"] = m.rows();
  doc["entries"] = std::move(rows);
  return doc.dump(indent);
}

namespace {

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidInput("matrix JSON: " + where + " is not a number");
  return v.get<double>();
}

}  // namespace

ComplexMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("matrix JSON: parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("matrix JSON: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw InvalidInput("matrix JSON: missing integer \"dim\"");
  }
  const long long dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > 64) throw InvalidInput("matrix JSON: dim out of range: " + std::to_string(dim));
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw InvalidInput("matrix JSON: missing array \"entries\"");
  }
  const json& rows = doc["entries"];
  if (static_cast<long long>(rows.size()) != dim) {
    throw InvalidInput("matrix JSON: expected " + std::to_string(dim) + " rows, got " +
                       std::to_string(rows.size()));
  }
  ComplexMatrix m(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != dim) {
      throw InvalidInput("matrix JSON: row " + std::to_string(i) + " does not have " +
                         std::to_string(dim) + " entries");
    }
    for (long long j = 0; j < dim; ++j) {
      const json& z = row[static_cast<std::size_t>(j)];
      const std::string where = "entry [" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!z.is_array() || z.size() != 2) throw InvalidInput("matrix JSON: " + where + " must be [re, im]");
      m(i, j) = Complex(number_at(z[0], where), number_at(z[1], where));
    }
  }
  return m;
}

}  // namespace pcartan
