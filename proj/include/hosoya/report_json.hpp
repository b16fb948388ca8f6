// Copyright 2026 the hosoya-tools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "hosoya/bigint.hpp"
#include "hosoya/search.hpp"

namespace hosoya {

/// JSON document for a SearchReport. Coefficients are decimal strings, never
/// JSON numbers, so arbitrarily large values survive any JSON reader.
/// per_diameter_counts is keyed by diameter in ascending order, and the
/// palindromic list keeps generation order, so serialization is byte-stable
/// across runs and job counts.
inline nlohmann::ordered_json search_report_json(const SearchReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["trees_examined"] = report.trees_examined;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [d, c] : report.per_diameter_counts)
    counts[std::to_string(d)] = c;
  doc["per_diameter_counts"] = std::move(counts);
  nlohmann::ordered_json palindromic = nlohmann::ordered_json::array();
  for (const auto& entry : report.palindromic) {
    nlohmann::ordered_json item;
    item["levels"] = entry.code.levels();
    nlohmann::ordered_json alpha = nlohmann::ordered_json::array();
    for (const auto& a : entry.alpha.alpha()) alpha.push_back(to_decimal(a));
    item["alpha"] = std::move(alpha);
    palindromic.push_back(std::move(item));
  }
  doc["palindromic"] = std::move(palindromic);
  if (report.min_margin_odd_diameter)
    doc["min_margin_odd_diameter"] = *report.min_margin_odd_diameter;
  else
    doc["min_margin_odd_diameter"] = nullptr;
  return doc;
}

inline std::string search_report_json_string(const SearchReport& report) {
  return search_report_json(report).dump(2);
}

}  // namespace hosoya
