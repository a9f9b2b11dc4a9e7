// Copyright 2026 The ibsplan Authors
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
//


#ifndef IBS_TOOLS_OUTPUT_RECORD_H_
#define IBS_TOOLS_OUTPUT_RECORD_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ibs::cli {

using Value = std::variant<bool, std::int64_t, double, std::string>;

// Insertion-ordered key/value list, so columns come out in a stable order.
class Fields {
 public:
  void Set(std::string key, Value value);
  const Value* Find(std::string_view key) const;
  const std::vector<std::pair<std::string, Value>>& items() const {
    return items_;
  }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<std::pair<std::string, Value>> items_;
};

// Result of one CLI invocation. Single-result commands fill `outputs`;
// curve and table commands put one entry per line in `rows`.
struct OutputRecord {
  std::string command;
  Fields inputs;
  Fields outputs;
  std::vector<Fields> rows;
};

// 12 significant digits.
std::string FormatNumber(double x);

// One JSON object: {"command", "inputs", "outputs"[, "rows"]}.
std::string ToJson(const OutputRecord& record);

// Header plus one line (command, inputs, outputs), or header plus one line
// per row when the record has rows. LF line endings.
std::string ToCsv(const OutputRecord& record);

}  // namespace ibs::cli

#endif  // IBS_TOOLS_OUTPUT_RECORD_H_
