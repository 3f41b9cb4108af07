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

#include "snpassoc/report.h"

#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "strings.h"

namespace snpassoc {

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  const std::string t = strings::to_lower(text);
  if (t == "json") return ReportFormat::kJson;
  if (t == "tsv") return ReportFormat::kTsv;
  return std::nullopt;
}

void Report::add(const std::string &method, const Metrics &metrics) {
  for (const ClassMetrics &c : metrics.classes) rows.push_back({method, c});
}

namespace {

void write_tsv(const Report &r, std::ostream &out) {
  const Provenance &p = r.provenance;
  out << "# " << r.title << '\n';
  out << "# seed\t" << p.seed << '\n';
  for (const auto &[k, v] : p.lexicon_fingerprints) {
    out << "# lexicon." << k << '\t' << v << '\n';
  }
  for (const auto &[k, v] : p.hyperparameters) {
    out << "# param." << k << '\t' << v << '\n';
  }
  out << "# trees\t" << p.tree_source << '\n';
  for (const std::string &n : p.notes) out << "# note\t" << n << '\n';
  out << "method\tclass\tprecision\trecall\tf1\tsupport\n";
  for (const ReportRow &row : r.rows) {
    const ClassMetrics &c = row.metrics;
    out << fmt::format("{}\t{}\t{:.6f}\t{:.6f}\t{:.6f}\t{}\n", row.method,
                       c.label, c.precision, c.recall, c.f1, c.support);
  }
}

void write_json(const Report &r, std::ostream &out) {
  using nlohmann::json;
  json rows = json::array();
  for (const ReportRow &row : r.rows) {
    const ClassMetrics &c = row.metrics;
    rows.push_back({{"method", row.method},
                    {"class", c.label},
                    {"precision", c.precision},
                    {"recall", c.recall},
                    {"f1", c.f1},
                    {"support", c.support},
                    {"tp", c.tp},
                    {"fp", c.fp},
                    {"fn", c.fn},
                    {"precision_undefined", c.precision_undefined},
                    {"recall_undefined", c.recall_undefined}});
  }
  const Provenance &p = r.provenance;
  const json provenance = {{"seed", p.seed},
                           {"lexicons", p.lexicon_fingerprints},
                           {"hyperparameters", p.hyperparameters},
                           {"trees", p.tree_source},
                           {"notes", p.notes}};
  const json doc = {
      {"title", r.title}, {"rows", rows}, {"provenance", provenance}};
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_report(const Report &report, ReportFormat format, std::ostream &out) {
  if (format == ReportFormat::kTsv) {
    write_tsv(report, out);
  } else {
    write_json(report, out);
  }
}

}  // namespace snpassoc
