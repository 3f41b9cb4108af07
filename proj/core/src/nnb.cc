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

#include "snpassoc/nnb.h"

#include <algorithm>
#include <tuple>

#include "snpassoc/error.h"

namespace snpassoc {
namespace {

SparseVector neutral_features(const CandidateContext &c, int n_max,
                              const Vocabulary &vocabulary) {
  return context_ngram_features(c.analysis.tokens, c.entities(), vocabulary,
                                n_max);
}

}  // namespace

NeutralModel train_neutral_detector(const AnalyzedCorpus &train,
                                    const NeutralDetectorConfig &config) {
  std::vector<FeatureBag> bags;
  TrainingSet data;
  for (const CandidateRef &ref : train.candidates()) {
    const CandidateContext c = train.context(ref);
    if (!c.pair.gold_label) continue;
    bags.push_back(
        context_ngram_bag(c.analysis.tokens, c.entities(), config.n_max));
    data.labels.push_back(*c.pair.gold_label == GoldLabel::kNeutral ? 1 : -1);
  }
  const Vocabulary vocabulary = Vocabulary::from_bags(bags);
  for (const FeatureBag &b : bags) {
    data.payloads.emplace_back(encode(b, vocabulary));
  }
  NeutralModel model;
  model.n_max = config.n_max;
  model.svm = smo_train(data, KernelSpec{KernelKind::kGlobalContext},
                        config.smo, vocabulary);
  return model;
}

NeutralVerdict predict_neutral(const NeutralModel &model,
                               const CandidateContext &candidate) {
  if (model.svm.kernel.kind != KernelKind::kGlobalContext) {
    throw KernelError("neutral detector needs a global-context kernel");
  }
  const double score = model.svm.decision(
      neutral_features(candidate, model.n_max, model.svm.vocabulary));
  return {score >= 0.0, score};
}

bool nnb_classify(const PositionalFeatures &f) {
  const bool negated =
      f.both_inside || f.one_left_one_inside || f.one_right_one_inside;
  return !negated && !f.is_neutral_cand;
}

GoldLabel Prediction::verdict() const {
  if (features.is_neutral_cand) return GoldLabel::kNeutral;
  return associated ? GoldLabel::kPositive : GoldLabel::kNegative;
}

Prediction classify_candidate(const CandidateContext &c,
                              const NeutralModel *neutral_model) {
  Prediction p;
  p.candidate_id = c.pair.id;
  p.document_id = c.document.id;
  p.sentence_id = c.sentence.id;
  p.snp = c.sentence.snp_of(c.pair).surface;
  p.phenotype = c.sentence.phenotype_of(c.pair).surface;
  p.features = positional_features(c.entities(), c.analysis.negations);
  if (neutral_model != nullptr) {
    const NeutralVerdict v = predict_neutral(*neutral_model, c);
    p.features.is_neutral_cand = v.neutral;
    p.neutral_score = v.score;
  }
  p.associated = nnb_classify(p.features);
  p.rationale = p.features.fired();
  return p;
}

std::vector<Prediction> extract_associations(
    const Document &document, std::span<const SentenceAnalysis> analyses,
    const NeutralModel *neutral_model) {
  if (analyses.size() != document.sentences.size()) {
    throw std::invalid_argument("one analysis per sentence expected");
  }
  std::vector<Prediction> out;
  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    const Sentence &sentence = document.sentences[s];
    for (const CandidatePair &pair : sentence.candidates) {
      try {
        out.push_back(classify_candidate(
            {document, sentence, pair, analyses[s]}, neutral_model));
      } catch (const KernelError &e) {
        throw KernelError("candidate " + pair.id + ": " + e.what());
      } catch (const AlignmentError &e) {
        throw AlignmentError("candidate " + pair.id + ": " + e.what());
      }
    }
  }
  return out;
}

std::vector<Prediction> extract_associations(const Document &document,
                                             const NeutralModel *neutral_model,
                                             const Lexicons &lexicons) {
  std::vector<SentenceAnalysis> analyses;
  for (const Sentence &s : document.sentences) {
    analyses.push_back(analyze_sentence(s, lexicons));
  }
  return extract_associations(document, analyses, neutral_model);
}

void rank_predictions(std::vector<Prediction> &predictions) {
  auto key = [](const Prediction &p) {
    const int confidence = p.confidence ? static_cast<int>(*p.confidence) : -1;
    const bool has_score = p.neutral_score.has_value();
    return std::make_tuple(!p.associated, -confidence, !has_score,
                           has_score ? *p.neutral_score : 0.0);
  };
  std::stable_sort(predictions.begin(), predictions.end(),
                   [&](const Prediction &a, const Prediction &b) {
                     return key(a) < key(b);
                   });
}

}  // namespace snpassoc
