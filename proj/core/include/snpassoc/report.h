// Copyright 2026 The snpassoc Authors.
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

#ifndef SNPASSOC_REPORT_H_
#define SNPASSOC_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/metrics.h"

namespace snpassoc {

enum class ReportFormat { kJson, kTsv };

std::optional<ReportFormat> parse_report_format(std::string_view text);

// What is needed to rerun an experiment and get the same numbers.
struct Provenance {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> lexicon_fingerprints;
  std::map<std::string, std::string> hyperparameters;
  std::string tree_source;  // "none", "sidecar", "heuristic" or "mixed"
  std::vector<std::string> notes;
};

struct ReportRow {
  std::string method;
  ClassMetrics metrics;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;
  Provenance provenance;

  void add(const std::string &method, const Metrics &metrics);
};

// TSV: "#" provenance lines, then method, class, precision, recall, f1,
// support. JSON: {"title", "rows": [...], "provenance": {...}}.
void write_report(const Report &report, ReportFormat format, std::ostream &out);

}  // namespace snpassoc

#endif  // SNPASSOC_REPORT_H_
