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

#ifndef SNPASSOC_NNB_H_
#define SNPASSOC_NNB_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snpassoc/analysis.h"
#include "snpassoc/featurize.h"
#include "snpassoc/svm.h"
#include "snpassoc/types.h"

namespace snpassoc {

struct NeutralDetectorConfig {
  int n_max = 3;
  SmoOptions smo;
};

struct NeutralModel {
  SvmModel svm;  // global-context kernel, +1 = Neutral
  int n_max = 3;
};

// Trains on every labeled candidate: +1 for Neutral, -1 otherwise.
// Throws DegenerateTrainingSet when either side is missing.
NeutralModel train_neutral_detector(const AnalyzedCorpus &train,
                                    const NeutralDetectorConfig &config);

struct NeutralVerdict {
  bool neutral = false;
  double score = 0.0;
};

// neutral = score >= 0. Throws KernelError for a non global-context model.
NeutralVerdict predict_neutral(const NeutralModel &model,
                               const CandidateContext &candidate);

// Not associated when negation covers the pair in one of the three
// "inside" configurations, or when the candidate is neutral.
bool nnb_classify(const PositionalFeatures &features);

struct Prediction {
  std::string candidate_id;
  std::string document_id;
  std::string sentence_id;
  std::string snp;
  std::string phenotype;
  bool associated = false;
  std::optional<ConfidenceLevel> confidence;  // set only when associated
  std::optional<double> neutral_score;        // absent without a model
  PositionalFeatures features;
  std::vector<std::string> rationale;  // names of the features that fired

  // Three-way reading: Neutral, else Positive / Negative.
  GoldLabel verdict() const;
};

Prediction classify_candidate(const CandidateContext &candidate,
                              const NeutralModel *neutral_model);

// One prediction per candidate, in candidate order. A null model leaves
// IsNeutralCand false. Errors are rethrown with the candidate id attached.
std::vector<Prediction> extract_associations(
    const Document &document, std::span<const SentenceAnalysis> analyses,
    const NeutralModel *neutral_model);
std::vector<Prediction> extract_associations(const Document &document,
                                             const NeutralModel *neutral_model,
                                             const Lexicons &lexicons);

// Associated first, then confidence high to low, then ascending neutral
// score (missing last), then input order. Stable and total.
void rank_predictions(std::vector<Prediction> &predictions);

}  // namespace snpassoc

#endif  // SNPASSOC_NNB_H_
