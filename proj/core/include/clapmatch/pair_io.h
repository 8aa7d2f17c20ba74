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

// Graph-pair JSON:
//
//   {
//     "a": {"points": [[x, y], ...], "descriptors": [[...], ...]},
//     "b": {"points": [[x, y], ...], "descriptors": [[...], ...]},
//     "truth": [[i, j], ...]          // optional
//   }
//
// `truth` lists matched (A index, B index) pairs and must cover every A node
// exactly once.

#ifndef CLAPMATCH_PAIR_IO_H_
#define CLAPMATCH_PAIR_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "clapmatch/graph_model.h"

namespace clapmatch {

struct GraphPair {
  GraphSide a;
  GraphSide b;
  std::optional<HardAssignment> truth;
};

// Throws ParseError on malformed JSON or schema violations.
GraphPair ParseGraphPair(std::string_view json_text);

// Throws IoError when the file cannot be read, ParseError otherwise.
GraphPair ReadGraphPair(const std::filesystem::path& path);

// Serializes with shortest round-trip decimal doubles; output is a pure
// function of the input. Ends with a newline.
std::string SerializeGraphPair(const GraphSide& a, const GraphSide& b,
                               const HardAssignment* truth = nullptr);

// Throws IoError.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace clapmatch

#endif  // CLAPMATCH_PAIR_IO_H_
