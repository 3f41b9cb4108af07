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

#ifndef SNPASSOC_METRICS_H_
#define SNPASSOC_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "snpassoc/corpus.h"

namespace snpassoc {

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold items of this class
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  // Set when the denominator was zero and the value was reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;

  friend bool operator==(const ClassMetrics &, const ClassMetrics &) = default;
};

struct Metrics {
  std::vector<ClassMetrics> classes;
  double macro_f1 = 0.0;

  const ClassMetrics &at(const std::string &label) const;

  friend bool operator==(const Metrics &, const Metrics &) = default;
};

struct LabeledItem {
  std::string id;
  std::string label;
};

// Aligns by id; order does not matter. Throws AlignmentError when the id
// sets differ or an id repeats.
Metrics score(std::span<const LabeledItem> predictions,
              std::span<const LabeledItem> gold,
              std::span<const std::string> classes);

struct FoldPlan {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<int> fold_of;  // per document

  std::vector<std::size_t> test_documents(int fold) const;
  std::vector<std::size_t> train_documents(int fold) const;
};

// Document-level folds of near-equal size. Documents are shuffled by seed,
// then placed largest-positive-count first into the smallest fold, breaking
// ties by fewest positives. Throws TooSmall when k exceeds the document
// count and std::invalid_argument for k < 2.
FoldPlan make_fold_plan(const Corpus &corpus, int k, std::uint64_t seed);

}  // namespace snpassoc

#endif  // SNPASSOC_METRICS_H_
