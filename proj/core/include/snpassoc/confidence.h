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

#ifndef SNPASSOC_CONFIDENCE_H_
#define SNPASSOC_CONFIDENCE_H_

#include <span>
#include <vector>

#include "snpassoc/analysis.h"
#include "snpassoc/markers.h"
#include "snpassoc/sparse.h"
#include "snpassoc/svm.h"
#include "snpassoc/types.h"

namespace snpassoc {

// True iff some marker's clause holds at least one token of each entity.
bool entities_in_modal_clause(EntityPair entities,
                              std::span<const ClauseSpan> clauses,
                              std::span<const ModalMarker> markers);

// Keys: marker:<phrase>, tier:<Hedge|Neutral|Booster> (counts),
// pbucket:<name> for the strongest p-value or pbucket:none,
// in_clause:true|false.
FeatureBag mms_bag(std::span<const ModalMarker> markers,
                   std::span<const PValueMention> pvalues, bool in_clause,
                   const PValueBuckets &buckets = {});

SparseVector mms_featurize(std::span<const ModalMarker> markers,
                           std::span<const PValueMention> pvalues,
                           bool in_clause, const Vocabulary &vocabulary,
                           const PValueBuckets &buckets = {});

struct MmsConfig {
  SmoOptions smo;
  PValueBuckets buckets;
  // Folds Medium into High, giving a two-level scheme.
  bool merge_high_medium = false;
};

struct MmsModel {
  OvrModel ovr;  // class ids are ConfidenceLevel values
  Vocabulary vocabulary;
  PValueBuckets buckets;
  bool merge_high_medium = false;
};

ConfidenceLevel merge_level(ConfidenceLevel level, bool merge_high_medium);

// One-vs-rest linear SVM over mms features of gold-positive candidates with
// a gold confidence. Throws DegenerateTrainingSet with fewer than two levels.
MmsModel mms_train(const AnalyzedCorpus &train, const MmsConfig &config);

// Medium (or High under merging) when the sentence has no marker or no
// marker shares a clause with both entities; otherwise the classifier.
ConfidenceLevel mms_predict(const MmsModel &model,
                            const CandidateContext &candidate);

// Binary bag-of-words over the whole sentence, same training population.
struct BowModel {
  OvrModel ovr;
  Vocabulary vocabulary;
  bool merge_high_medium = false;
};

BowModel bow_train(const AnalyzedCorpus &train, const MmsConfig &config);
ConfidenceLevel bow_predict(const BowModel &model,
                            const CandidateContext &candidate);

// Candidates that take part in confidence training and scoring.
bool has_confidence_target(const CandidatePair &pair);

}  // namespace snpassoc

#endif  // SNPASSOC_CONFIDENCE_H_
