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


#include "output_record.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace ibs::cli {
namespace {

using nlohmann::ordered_json;

ordered_json ToJsonValue(const Value& v) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return nullptr;
          return std::stod(FormatNumber(x));
        } else {
          return x;
        }
      },
      v);
}

ordered_json ToJsonObject(const Fields& fields) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : fields.items()) obj[key] = ToJsonValue(value);
  return obj;
}

std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string ToCsvCell(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatNumber(x);
        } else {
          return CsvEscape(x);
        }
      },
      v);
}

void AppendLine(const std::vector<std::string>& cells, std::string& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

void Fields::Set(std::string key, Value value) {
  for (auto& item : items_) {
    if (item.first == key) {
      item.second = std::move(value);
      return;
    }
  }
  items_.emplace_back(std::move(key), std::move(value));
}

const Value* Fields::Find(std::string_view key) const {
  for (const auto& item : items_) {
    if (item.first == key) return &item.second;
  }
  return nullptr;
}

std::string FormatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string ToJson(const OutputRecord& record) {
  ordered_json doc;
  doc["command"] = record.command;
  doc["inputs"] = ToJsonObject(record.inputs);
  doc["outputs"] = ToJsonObject(record.outputs);
  if (!record.rows.empty()) {
    ordered_json rows = ordered_json::array();
    for (const Fields& row : record.rows) rows.push_back(ToJsonObject(row));
    doc["rows"] = std::move(rows);
  }
  return doc.dump() + "\n";
}

std::string ToCsv(const OutputRecord& record) {
  std::string out;
  std::vector<std::string> header;
  std::vector<std::string> cells;
  if (!record.rows.empty()) {
    for (const auto& item : record.rows.front().items()) {
      header.push_back(CsvEscape(item.first));
    }
    AppendLine(header, out);
    for (const Fields& row : record.rows) {
      cells.clear();
      for (const auto& item : row.items()) cells.push_back(ToCsvCell(item.second));
      AppendLine(cells, out);
    }
    return out;
  }
  header.push_back("command");
  cells.push_back(CsvEscape(record.command));
  for (const Fields* fields : {&record.inputs, &record.outputs}) {
    for (const auto& [key, value] : fields->items()) {
      header.push_back(CsvEscape(key));
      cells.push_back(ToCsvCell(value));
    }
  }
  AppendLine(header, out);
  AppendLine(cells, out);
  return out;
}

}  // namespace ibs::cli
