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

#ifndef SNPASSOC_EVALUATION_H_
#define SNPASSOC_EVALUATION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/analysis.h"
#include "snpassoc/confidence.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/metrics.h"
#include "snpassoc/nnb.h"
#include "snpassoc/report.h"
#include "snpassoc/svm.h"
#include "snpassoc/tree.h"

namespace snpassoc {

enum class Method { kNnb, kLck, kGck, kSubtree };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

struct ExperimentConfig {
  std::uint64_t seed = 0;  // also seeds every SMO run
  SmoOptions smo;
  int n_max = 3;
  int window = 2;
  double lambda = 0.4;
  // Three-way NNB scoring with a separate neutral class.
  bool emit_neutral = false;
  PValueBuckets buckets;
  bool merge_high_medium = false;
  std::shared_ptr<const TreeSidecar> trees;
  std::map<std::string, std::string> lexicon_fingerprints;

  SmoOptions smo_options() const;
  NeutralDetectorConfig neutral_config() const;
  MmsConfig mms_config() const;
  Provenance provenance() const;
};

std::map<std::string, std::string> lexicon_fingerprints(const Lexicons &lexicons);

inline constexpr const char *kPositiveClass = "positive";
inline constexpr const char *kNegativeClass = "negative";
inline constexpr const char *kNeutralClass = "neutral";

// Gold class of a labeled candidate under the scoring regime.
std::string gold_class(GoldLabel label, bool three_way);
std::vector<std::string> association_classes(bool three_way);

struct MethodRun {
  Method method = Method::kNnb;
  std::vector<LabeledItem> predictions;
  std::vector<LabeledItem> gold;
  Metrics metrics;
  std::string tree_source = "none";
  std::vector<std::string> notes;
};

// Trains what the method needs on `train` and scores the labeled
// candidates of `test`. Three-way scoring applies to NNB only.
MethodRun run_method(Method method, const AnalyzedCorpus &train,
                     const AnalyzedCorpus &test, const ExperimentConfig &config);

// The NNB pipeline on `test` with a neutral detector trained on `train`.
// Falls back to no detector, with a note, when `train` lacks either class.
std::vector<Prediction> nnb_predict(const AnalyzedCorpus &train,
                                    const AnalyzedCorpus &test,
                                    const ExperimentConfig &config,
                                    std::vector<std::string> *notes = nullptr);

struct FoldResult {
  int fold = 0;
  std::size_t test_documents = 0;
  Metrics metrics;
};

struct CvReport {
  Method method = Method::kNnb;
  FoldPlan plan;
  std::vector<FoldResult> folds;
  // Scored over the concatenation of every fold's predictions.
  Metrics aggregate;
  std::vector<LabeledItem> predictions;
  std::vector<LabeledItem> gold;
  std::string tree_source = "none";
  std::vector<std::string> notes;
};

// Throws TooSmall with fewer than k documents.
CvReport cross_validate(const AnalyzedCorpus &corpus, int k, Method method,
                        const ExperimentConfig &config);

// Adds aggregate rows under the method name, then per-fold rows named
// "<method>/fold<i>".
void add_cv_rows(Report &report, const CvReport &cv);

// NNB, LCK and Subtree trained on Train documents, scored on Test.
// Throws Error when either part is empty.
Report run_table1(const AnalyzedCorpus &corpus, const ExperimentConfig &config);
Report run_table2(const AnalyzedCorpus &corpus, int k,
                  const ExperimentConfig &config);

struct ConfidenceRun {
  Metrics bow;
  Metrics mms;
};

// BOW and MMS confidence on the gold-positive candidates of `test`.
ConfidenceRun run_confidence(const AnalyzedCorpus &train,
                             const AnalyzedCorpus &test,
                             const ExperimentConfig &config);
Report run_table3(const AnalyzedCorpus &corpus, const ExperimentConfig &config);

std::vector<std::string> confidence_classes(bool merge_high_medium);

}  // namespace snpassoc

#endif  // SNPASSOC_EVALUATION_H_
