// Copyright 2026 The robsched authors
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

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "robsched/errors.hpp"
#include "robsched/instance.hpp"

// Versioned JSON instance format, described in docs/instance-format.md.
// Activities are 1-based in files and reports, 0-based in memory; since the
// format stores plain arrays the difference only shows up in field names and
// diagnostics.

namespace robsched {

inline constexpr int kInstanceFormatVersion = 1;

namespace detail {

inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError("field '" + field + "' must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw ValidationError("field '" + field + "' has ragged rows");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = row.at(c).get<double>();
  }
  return m;
}

}  // namespace detail

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["version"] = kInstanceFormatVersion;
  j["n"] = inst.n;
  j["T"] = inst.horizon;
  j["durations"] = inst.durations;
  j["c_lower"] = detail::matrix_to_json(inst.cost_lower);
  j["c_hat"] = detail::matrix_to_json(inst.cost_dev);
  if (inst.exec_costs) j["w"] = detail::matrix_to_json(inst.exec_costs->w);
  if (inst.meta) {
    nlohmann::json meta;
    if (inst.meta->seed) meta["seed"] = *inst.meta->seed;
    if (!inst.meta->generator.empty()) meta["generator"] = inst.meta->generator;
    if (inst.meta->u_level) meta["u_level"] = *inst.meta->u_level;
    j["meta"] = std::move(meta);
  }
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  if (!j.contains("version")) throw ValidationError("instance file is missing 'version'");
  const int version = j.at("version").get<int>();
  if (version != kInstanceFormatVersion) {
    throw ValidationError("unsupported instance format version " + std::to_string(version));
  }
  Instance inst;
  inst.n = j.at("n").get<int>();
  inst.horizon = j.at("T").get<int>();
  inst.durations = j.at("durations").get<std::vector<int>>();
  inst.cost_lower = detail::matrix_from_json(j.at("c_lower"), "c_lower");
  inst.cost_dev = detail::matrix_from_json(j.at("c_hat"), "c_hat");
  if (j.contains("w")) inst.exec_costs = ExecutionCostMatrix{detail::matrix_from_json(j.at("w"), "w")};
  if (j.contains("meta")) {
    const auto& meta = j.at("meta");
    InstanceMeta m;
    if (meta.contains("seed")) m.seed = meta.at("seed").get<std::uint64_t>();
    if (meta.contains("generator")) m.generator = meta.at("generator").get<std::string>();
    if (meta.contains("u_level")) m.u_level = meta.at("u_level").get<int>();
    inst.meta = std::move(m);
  }
  return inst;
}

inline void save_instance(const Instance& inst, std::ostream& out) {
  out << instance_to_json(inst).dump(2) << '\n';
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  save_instance(inst, out);
}

inline Instance load_instance(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance file is not valid JSON: ") + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed instance file: ") + e.what());
  }
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return load_instance(in);
}

}  // namespace robsched
