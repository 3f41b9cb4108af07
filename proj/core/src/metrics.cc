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

#include "snpassoc/metrics.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "rng.h"
#include "snpassoc/error.h"

namespace snpassoc {

const ClassMetrics &Metrics::at(const std::string &label) const {
  for (const ClassMetrics &c : classes) {
    if (c.label == label) return c;
  }
  throw std::out_of_range("no metrics for class '" + label + "'");
}

namespace {

std::map<std::string, std::string> by_id(std::span<const LabeledItem> items,
                                         const char *what) {
  std::map<std::string, std::string> out;
  for (const LabeledItem &item : items) {
    if (!out.emplace(item.id, item.label).second) {
      throw AlignmentError(std::string("duplicate ") + what + " id " + item.id);
    }
  }
  return out;
}

}  // namespace

Metrics score(std::span<const LabeledItem> predictions,
              std::span<const LabeledItem> gold,
              std::span<const std::string> classes) {
  const auto pred = by_id(predictions, "prediction");
  const auto truth = by_id(gold, "gold");
  for (const auto &[id, label] : truth) {
    if (!pred.contains(id)) throw AlignmentError("no prediction for " + id);
  }
  for (const auto &[id, label] : pred) {
    if (!truth.contains(id)) throw AlignmentError("no gold label for " + id);
  }

  Metrics m;
  double f1_sum = 0.0;
  for (const std::string &cls : classes) {
    ClassMetrics c;
    c.label = cls;
    for (const auto &[id, g] : truth) {
      const std::string &p = pred.at(id);
      if (g == cls) ++c.support;
      if (p == cls && g == cls) ++c.tp;
      if (p == cls && g != cls) ++c.fp;
      if (p != cls && g == cls) ++c.fn;
    }
    if (c.tp + c.fp == 0) {
      c.precision_undefined = true;
    } else {
      c.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    }
    if (c.tp + c.fn == 0) {
      c.recall_undefined = true;
    } else {
      c.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    }
    if (c.precision + c.recall > 0.0) {
      c.f1 = 2.0 * c.precision * c.recall / (c.precision + c.recall);
    }
    f1_sum += c.f1;
    m.classes.push_back(std::move(c));
  }
  if (!classes.empty()) m.macro_f1 = f1_sum / static_cast<double>(classes.size());
  return m;
}

std::vector<std::size_t> FoldPlan::test_documents(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < fold_of.size(); ++d) {
    if (fold_of[d] == fold) out.push_back(d);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_documents(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < fold_of.size(); ++d) {
    if (fold_of[d] != fold) out.push_back(d);
  }
  return out;
}

FoldPlan make_fold_plan(const Corpus &corpus, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::size_t n = corpus.documents.size();
  if (n < static_cast<std::size_t>(k)) {
    throw TooSmall("need at least " + std::to_string(k) + " documents, have " +
                   std::to_string(n));
  }
  std::vector<std::size_t> positives(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    for (const Sentence &s : corpus.documents[d].sentences) {
      for (const CandidatePair &c : s.candidates) {
        if (c.gold_label == GoldLabel::kPositive) ++positives[d];
      }
    }
  }
  Rng rng(seed);
  std::vector<std::size_t> order = rng.permutation(n);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return positives[a] > positives[b];
                   });

  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.fold_of.assign(n, -1);
  std::vector<std::size_t> size(k, 0);
  std::vector<std::size_t> pos(k, 0);
  for (std::size_t d : order) {
    int best = 0;
    for (int f = 1; f < k; ++f) {
      if (size[f] < size[best] || (size[f] == size[best] && pos[f] < pos[best])) {
        best = f;
      }
    }
    plan.fold_of[d] = best;
    ++size[best];
    pos[best] += positives[d];
  }
  return plan;
}

}  // namespace snpassoc
