// Copyright 2026 The clapmatch Authors
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

#include "clapmatch/pair_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "clapmatch/errors.h"
#include "json.hpp"

namespace clapmatch {

using nlohmann::json;

namespace {

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

Eigen::MatrixXd ReadRows(const json& rows, Eigen::Index expected_cols,
                         const std::string& where) {
  if (!rows.is_array()) throw ParseError(where + " must be an array");
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Eigen::Index cols = expected_cols;
  if (cols < 0) {
    if (n == 0 || !rows[0].is_array()) {
      throw ParseError(where + " must be a non-empty array of arrays");
    }
    cols = static_cast<Eigen::Index>(rows[0].size());
  }
  Eigen::MatrixXd out(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(where + "[" + std::to_string(i) + "] must have " +
                       std::to_string(cols) + " numbers");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& v = row[static_cast<size_t>(k)];
      if (!v.is_number()) {
        throw ParseError(where + "[" + std::to_string(i) + "] has a non-number");
      }
      out(i, k) = v.get<double>();
    }
  }
  return out;
}

GraphSide ReadSide(const json& obj, const std::string& where) {
  Points points = ReadRows(Field(obj, "points", where), 2, where + ".points");
  Eigen::MatrixXd desc =
      ReadRows(Field(obj, "descriptors", where), -1, where + ".descriptors");
  try {
    return GraphSide(std::move(points), std::move(desc));
  } catch (const InvalidInputError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

HardAssignment ReadTruth(const json& arr, int rows, int cols) {
  if (!arr.is_array()) throw ParseError("truth must be an array of [i, j] pairs");
  std::vector<int> column_of_row(static_cast<size_t>(rows), -1);
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("truth entries must be [i, j] integer pairs");
    }
    const int i = pair[0].get<int>();
    const int j = pair[1].get<int>();
    if (i < 0 || i >= rows || j < 0 || j >= cols) {
      throw ParseError("truth pair [" + std::to_string(i) + ", " +
                       std::to_string(j) + "] out of range");
    }
    if (column_of_row[i] != -1) {
      throw ParseError("truth lists A node " + std::to_string(i) + " twice");
    }
    column_of_row[i] = j;
  }
  for (int i = 0; i < rows; ++i) {
    if (column_of_row[i] == -1) {
      throw ParseError("truth does not cover A node " + std::to_string(i));
    }
  }
  try {
    return HardAssignment(std::move(column_of_row), cols);
  } catch (const InvalidInputError& e) {
    throw ParseError(std::string("truth: ") + e.what());
  }
}

json SideToJson(const GraphSide& side) {
  json points = json::array();
  json desc = json::array();
  for (Eigen::Index i = 0; i < side.size(); ++i) {
    points.push_back({side.points()(i, 0), side.points()(i, 1)});
    json row = json::array();
    for (Eigen::Index k = 0; k < side.descriptor_dim(); ++k) {
      row.push_back(side.descriptors()(i, k));
    }
    desc.push_back(std::move(row));
  }
  return json{{"points", std::move(points)}, {"descriptors", std::move(desc)}};
}

}  // namespace

GraphPair ParseGraphPair(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph pair must be a JSON object");
  GraphSide a = ReadSide(Field(doc, "a", "pair"), "a");
  GraphSide b = ReadSide(Field(doc, "b", "pair"), "b");
  std::optional<HardAssignment> truth;
  if (doc.contains("truth") && !doc.at("truth").is_null()) {
    truth = ReadTruth(doc.at("truth"), static_cast<int>(a.size()),
                      static_cast<int>(b.size()));
  }
  return GraphPair{std::move(a), std::move(b), std::move(truth)};
}

GraphPair ReadGraphPair(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  try {
    return ParseGraphPair(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string SerializeGraphPair(const GraphSide& a, const GraphSide& b,
                               const HardAssignment* truth) {
  json doc{{"a", SideToJson(a)}, {"b", SideToJson(b)}};
  if (truth != nullptr) {
    json pairs = json::array();
    for (int i = 0; i < truth->rows(); ++i) {
      pairs.push_back({i, truth->column_of(i)});
    }
    doc["truth"] = std::move(pairs);
  }
  return doc.dump(2) + "\n";
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace clapmatch
