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

#include "snpassoc/confidence.h"

#include <algorithm>
#include <limits>
#include <string>

#include "snpassoc/error.h"

namespace snpassoc {

bool entities_in_modal_clause(EntityPair entities,
                              std::span<const ClauseSpan> clauses,
                              std::span<const ModalMarker> markers) {
  for (const ModalMarker &m : markers) {
    for (const ClauseSpan &c : clauses) {
      if (!c.tokens.contains(m.tokens.begin)) continue;
      if (c.tokens.overlaps(entities.snp) &&
          c.tokens.overlaps(entities.phenotype)) {
        return true;
      }
    }
  }
  return false;
}

FeatureBag mms_bag(std::span<const ModalMarker> markers,
                   std::span<const PValueMention> pvalues, bool in_clause,
                   const PValueBuckets &buckets) {
  FeatureBag bag;
  for (const ModalMarker &m : markers) {
    bag["marker:" + m.phrase] = 1.0;
    bag["tier:" + std::string(to_string(m.tier))] += 1.0;
  }
  if (pvalues.empty()) {
    bag["pbucket:none"] = 1.0;
  } else {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const PValueMention &p : pvalues) {
      best = std::min(best, buckets.bucket_of(p));
    }
    bag["pbucket:" + buckets.bucket_name(best)] = 1.0;
  }
  bag[in_clause ? "in_clause:true" : "in_clause:false"] = 1.0;
  return bag;
}

SparseVector mms_featurize(std::span<const ModalMarker> markers,
                           std::span<const PValueMention> pvalues,
                           bool in_clause, const Vocabulary &vocabulary,
                           const PValueBuckets &buckets) {
  return encode(mms_bag(markers, pvalues, in_clause, buckets), vocabulary);
}

ConfidenceLevel merge_level(ConfidenceLevel level, bool merge_high_medium) {
  if (merge_high_medium && level == ConfidenceLevel::kMedium) {
    return ConfidenceLevel::kHigh;
  }
  return level;
}

bool has_confidence_target(const CandidatePair &pair) {
  return pair.gold_label == GoldLabel::kPositive &&
         pair.gold_confidence.has_value();
}

namespace {

FeatureBag candidate_mms_bag(const CandidateContext &c,
                             const PValueBuckets &buckets) {
  const SentenceAnalysis &a = c.analysis;
  const bool in_clause =
      entities_in_modal_clause(c.entities(), a.clauses, a.markers);
  return mms_bag(a.markers, a.pvalues, in_clause, buckets);
}

template <typename BagFn>
OvrModel train_levels(const AnalyzedCorpus &train, const MmsConfig &config,
                      BagFn bag_of, Vocabulary &vocabulary) {
  std::vector<FeatureBag> bags;
  std::vector<int> levels;
  for (const CandidateRef &ref : train.candidates()) {
    const CandidateContext c = train.context(ref);
    if (!has_confidence_target(c.pair)) continue;
    bags.push_back(bag_of(c));
    levels.push_back(static_cast<int>(
        merge_level(*c.pair.gold_confidence, config.merge_high_medium)));
  }
  vocabulary = Vocabulary::from_bags(bags);
  std::vector<Payload> payloads;
  payloads.reserve(bags.size());
  for (const FeatureBag &b : bags) payloads.emplace_back(encode(b, vocabulary));
  return ovr_train(payloads, levels, KernelSpec{KernelKind::kLinear},
                   config.smo, vocabulary);
}

}  // namespace

MmsModel mms_train(const AnalyzedCorpus &train, const MmsConfig &config) {
  MmsModel model;
  model.buckets = config.buckets;
  model.merge_high_medium = config.merge_high_medium;
  model.ovr = train_levels(
      train, config,
      [&](const CandidateContext &c) {
        return candidate_mms_bag(c, config.buckets);
      },
      model.vocabulary);
  return model;
}

ConfidenceLevel mms_predict(const MmsModel &model,
                            const CandidateContext &candidate) {
  const SentenceAnalysis &a = candidate.analysis;
  const ConfidenceLevel fallback =
      merge_level(ConfidenceLevel::kMedium, model.merge_high_medium);
  if (a.markers.empty()) return fallback;
  if (!entities_in_modal_clause(candidate.entities(), a.clauses, a.markers)) {
    return fallback;
  }
  const SparseVector x =
      encode(candidate_mms_bag(candidate, model.buckets), model.vocabulary);
  return static_cast<ConfidenceLevel>(model.ovr.predict(x));
}

BowModel bow_train(const AnalyzedCorpus &train, const MmsConfig &config) {
  BowModel model;
  model.merge_high_medium = config.merge_high_medium;
  model.ovr = train_levels(
      train, config,
      [](const CandidateContext &c) { return bow_bag(c.analysis.tokens); },
      model.vocabulary);
  return model;
}

ConfidenceLevel bow_predict(const BowModel &model,
                            const CandidateContext &candidate) {
  const SparseVector x =
      bow_vectorize(candidate.analysis.tokens, model.vocabulary);
  return static_cast<ConfidenceLevel>(model.ovr.predict(x));
}

}  // namespace snpassoc
