// Copyright 2026 The Zeno Gate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zeno/gate_table.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/errors.hpp"

namespace zeno {

double GateColumn::retained_mass() const {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::norm(logical[i]) + std::norm(mismatch[i]);
  return acc;
}

double GateTable::completeness_error() const {
  double worst = 0.0;
  for (const auto& col : columns)
    worst = std::max(worst, std::abs(col.retained_mass() + col.failure - 1.0));
  return worst;
}

bool GateTable::is_diagonal(double tol) const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && (std::abs(columns[i].logical[j]) > tol || std::abs(columns[i].mismatch[j]) > tol))
        return false;
  return true;
}

GateTable ideal_cz_table() {
  GateTable t;
  t.label = "ideal-cz";
  for (int i = 0; i < 4; ++i) t.columns[i].logical[i] = (i == 3) ? -1.0 : 1.0;
  return t;
}

namespace {

nlohmann::json amps_to_json(const std::array<cplx, 4>& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& z : a) arr.push_back({z.real(), z.imag()});
  return arr;
}

std::array<cplx, 4> amps_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("gate table: expected four amplitudes");
  std::array<cplx, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const auto& p = j[i];
    if (!p.is_array() || p.size() != 2) throw ConfigError("gate table: amplitude must be [re, im]");
    out[i] = {p[0].get<double>(), p[1].get<double>()};
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const GateTable& table) {
  nlohmann::json j;
  j["label"] = table.label;
  j["ancilla_filter"] = table.ancilla_filter;
  j["distillation_transmissions"] = table.distillation_transmissions;
  nlohmann::json inputs = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    const GateColumn& c = table.columns[i];
    inputs.push_back({{"input", kLogicalLabels[i]},
                      {"logical", amps_to_json(c.logical)},
                      {"mismatch", amps_to_json(c.mismatch)},
                      {"failure", c.failure}});
  }
  j["inputs"] = inputs;
  return j;
}

GateTable gate_table_from_json(const nlohmann::json& j) {
  try {
    GateTable t;
    t.label = j.value("label", std::string{});
    if (j.contains("ancilla_filter")) t.ancilla_filter = j.at("ancilla_filter").get<std::array<double, 2>>();
    if (j.contains("distillation_transmissions"))
      t.distillation_transmissions = j.at("distillation_transmissions").get<std::array<double, 3>>();
    const auto& inputs = j.at("inputs");
    if (!inputs.is_array() || inputs.size() != 4) throw ConfigError("gate table: expected four inputs");
    for (int i = 0; i < 4; ++i) {
      const auto& c = inputs[i];
      if (c.at("input").get<std::string>() != kLogicalLabels[i])
        throw ConfigError("gate table: inputs must be ordered 00, 01, 10, 11");
      t.columns[i].logical = amps_from_json(c.at("logical"));
      t.columns[i].mismatch = amps_from_json(c.at("mismatch"));
      t.columns[i].failure = c.at("failure").get<double>();
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("gate table: ") + e.what());
  }
}

}  // namespace zeno
