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

#include "snpassoc/evaluation.h"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "snpassoc/error.h"
#include "snpassoc/kernels.h"
#include "strings.h"

namespace snpassoc {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kNnb:
      return "nnb";
    case Method::kLck:
      return "lck";
    case Method::kGck:
      return "gck";
    case Method::kSubtree:
      return "subtree";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  const std::string t = strings::to_lower(text);
  for (Method m : {Method::kNnb, Method::kLck, Method::kGck, Method::kSubtree}) {
    if (t == to_string(m)) return m;
  }
  return std::nullopt;
}

SmoOptions ExperimentConfig::smo_options() const {
  SmoOptions o = smo;
  o.seed = seed;
  return o;
}

NeutralDetectorConfig ExperimentConfig::neutral_config() const {
  return {n_max, smo_options()};
}

MmsConfig ExperimentConfig::mms_config() const {
  return {smo_options(), buckets, merge_high_medium};
}

Provenance ExperimentConfig::provenance() const {
  Provenance p;
  p.seed = seed;
  p.lexicon_fingerprints = lexicon_fingerprints;
  p.hyperparameters = {
      {"C", fmt::format("{}", smo.C)},
      {"tol", fmt::format("{}", smo.tol)},
      {"max_passes", std::to_string(smo.max_passes)},
      {"max_iterations", std::to_string(smo.max_iterations)},
      {"n_max", std::to_string(n_max)},
      {"window", std::to_string(window)},
      {"lambda", fmt::format("{}", lambda)},
      {"emit_neutral", emit_neutral ? "true" : "false"},
      {"merge_high_medium", merge_high_medium ? "true" : "false"},
  };
  std::string thresholds;
  for (double t : buckets.thresholds()) {
    if (!thresholds.empty()) thresholds += ",";
    thresholds += fmt::format("{}", t);
  }
  p.hyperparameters["pvalue_buckets"] = thresholds;
  p.tree_source = "none";
  return p;
}

std::map<std::string, std::string> lexicon_fingerprints(const Lexicons &lex) {
  return {{"cues", strings::hex64(lex.cues.fingerprint())},
          {"connectors", strings::hex64(lex.connectors.fingerprint())},
          {"modality", strings::hex64(lex.modality.fingerprint())},
          {"triggers", strings::hex64(lex.triggers.fingerprint())},
          {"gazetteer", strings::hex64(lex.gazetteer.fingerprint())}};
}

std::string gold_class(GoldLabel label, bool three_way) {
  switch (label) {
    case GoldLabel::kPositive:
      return kPositiveClass;
    case GoldLabel::kNegative:
      return kNegativeClass;
    case GoldLabel::kNeutral:
      return three_way ? kNeutralClass : kNegativeClass;
  }
  return kNegativeClass;
}

std::vector<std::string> association_classes(bool three_way) {
  if (three_way) return {kPositiveClass, kNegativeClass, kNeutralClass};
  return {kPositiveClass, kNegativeClass};
}

std::vector<std::string> confidence_classes(bool merge_high_medium) {
  if (merge_high_medium) return {"low", "high"};
  return {"low", "medium", "high"};
}

namespace {

std::string merge_tree_source(const std::string &a, const std::string &b) {
  if (a == "none") return b;
  if (b == "none" || a == b) return a;
  return "mixed";
}

// Payload builder for the kernel baselines.
class BaselineFeatures {
 public:
  BaselineFeatures(Method method, const ExperimentConfig &config)
      : method_(method), config_(config) {}

  KernelSpec kernel() const {
    switch (method_) {
      case Method::kLck:
        return {KernelKind::kLocalContext, config_.lambda};
      case Method::kGck:
        return {KernelKind::kGlobalContext, config_.lambda};
      default:
        return {KernelKind::kSubtree, config_.lambda};
    }
  }

  FeatureBag bag(const CandidateContext &c) const {
    if (method_ == Method::kLck) {
      return local_context_bag(c.analysis.tokens, c.entities(), config_.window);
    }
    return context_ngram_bag(c.analysis.tokens, c.entities(), config_.n_max);
  }

  ParseTree tree(const CandidateContext &c) {
    if (config_.trees) {
      const auto it = config_.trees->find(c.pair.id);
      if (it != config_.trees->end()) {
        used_sidecar_ = true;
        return it->second;
      }
    }
    used_heuristic_ = true;
    return heuristic_tree(c.analysis.tokens, c.analysis.clauses, c.entities());
  }

  bool sparse() const { return method_ != Method::kSubtree; }

  std::string tree_source() const {
    if (used_sidecar_ && used_heuristic_) return "mixed";
    if (used_sidecar_) return "sidecar";
    if (used_heuristic_) return "heuristic";
    return "none";
  }

 private:
  Method method_;
  const ExperimentConfig &config_;
  bool used_sidecar_ = false;
  bool used_heuristic_ = false;
};

std::vector<CandidateContext> labeled(const AnalyzedCorpus &corpus) {
  std::vector<CandidateContext> out;
  for (const CandidateRef &ref : corpus.candidates()) {
    CandidateContext c = corpus.context(ref);
    if (c.pair.gold_label) out.push_back(c);
  }
  return out;
}

void run_baseline(Method method, const AnalyzedCorpus &train,
                  const AnalyzedCorpus &test, const ExperimentConfig &config,
                  MethodRun &run) {
  BaselineFeatures features(method, config);
  const std::vector<CandidateContext> train_items = labeled(train);
  const std::vector<CandidateContext> test_items = labeled(test);

  TrainingSet data;
  Vocabulary vocabulary;
  std::vector<Payload> test_payloads;
  for (const CandidateContext &c : train_items) {
    data.labels.push_back(*c.pair.gold_label == GoldLabel::kPositive ? 1 : -1);
  }
  if (features.sparse()) {
    std::vector<FeatureBag> bags;
    for (const CandidateContext &c : train_items) bags.push_back(features.bag(c));
    vocabulary = Vocabulary::from_bags(bags);
    for (const FeatureBag &b : bags) data.payloads.emplace_back(encode(b, vocabulary));
    for (const CandidateContext &c : test_items) {
      test_payloads.emplace_back(encode(features.bag(c), vocabulary));
    }
  } else {
    for (const CandidateContext &c : train_items) {
      data.payloads.emplace_back(features.tree(c));
    }
    for (const CandidateContext &c : test_items) {
      test_payloads.emplace_back(features.tree(c));
    }
  }
  const SvmModel model =
      smo_train(data, features.kernel(), config.smo_options(), vocabulary);
  for (std::size_t i = 0; i < test_items.size(); ++i) {
    const CandidateContext &c = test_items[i];
    const bool positive = model.predict(test_payloads[i]) > 0;
    run.predictions.push_back(
        {c.pair.id, positive ? kPositiveClass : kNegativeClass});
    run.gold.push_back({c.pair.id, gold_class(*c.pair.gold_label, false)});
  }
  run.metrics = score(run.predictions, run.gold, association_classes(false));
  run.tree_source = features.tree_source();
}

}  // namespace

std::vector<Prediction> nnb_predict(const AnalyzedCorpus &train,
                                    const AnalyzedCorpus &test,
                                    const ExperimentConfig &config,
                                    std::vector<std::string> *notes) {
  std::optional<NeutralModel> model;
  try {
    model = train_neutral_detector(train, config.neutral_config());
  } catch (const DegenerateTrainingSet &e) {
    const std::string note =
        std::string("neutral detector not trained: ") + e.what();
    spdlog::warn("{}", note);
    if (notes != nullptr) notes->push_back(note);
  }
  std::vector<Prediction> out;
  const Corpus &corpus = test.corpus();
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    std::vector<Prediction> doc = extract_associations(
        corpus.documents[d], test.analyses(d), model ? &*model : nullptr);
    out.insert(out.end(), std::make_move_iterator(doc.begin()),
               std::make_move_iterator(doc.end()));
  }
  return out;
}

MethodRun run_method(Method method, const AnalyzedCorpus &train,
                     const AnalyzedCorpus &test, const ExperimentConfig &config) {
  MethodRun run;
  run.method = method;
  if (method != Method::kNnb) {
    run_baseline(method, train, test, config, run);
    return run;
  }
  const bool three_way = config.emit_neutral;
  std::map<std::string, GoldLabel> gold;
  for (const CandidateContext &c : labeled(test)) gold[c.pair.id] = *c.pair.gold_label;
  for (const Prediction &p : nnb_predict(train, test, config, &run.notes)) {
    const auto it = gold.find(p.candidate_id);
    if (it == gold.end()) continue;
    const std::string label =
        three_way ? gold_class(p.verdict(), true)
                  : (p.associated ? kPositiveClass : kNegativeClass);
    run.predictions.push_back({p.candidate_id, label});
    run.gold.push_back({p.candidate_id, gold_class(it->second, three_way)});
  }
  run.metrics = score(run.predictions, run.gold, association_classes(three_way));
  return run;
}

CvReport cross_validate(const AnalyzedCorpus &corpus, int k, Method method,
                        const ExperimentConfig &config) {
  CvReport cv;
  cv.method = method;
  cv.plan = make_fold_plan(corpus.corpus(), k, config.seed);
  const bool three_way = method == Method::kNnb && config.emit_neutral;
  for (int f = 0; f < k; ++f) {
    const AnalyzedCorpus train = corpus.select(cv.plan.train_documents(f));
    const AnalyzedCorpus test = corpus.select(cv.plan.test_documents(f));
    MethodRun run = run_method(method, train, test, config);
    cv.folds.push_back({f, cv.plan.test_documents(f).size(), run.metrics});
    cv.predictions.insert(cv.predictions.end(), run.predictions.begin(),
                          run.predictions.end());
    cv.gold.insert(cv.gold.end(), run.gold.begin(), run.gold.end());
    cv.tree_source = merge_tree_source(cv.tree_source, run.tree_source);
    for (std::string &n : run.notes) {
      cv.notes.push_back(fmt::format("fold {}: {}", f, n));
    }
  }
  cv.aggregate = score(cv.predictions, cv.gold, association_classes(three_way));
  return cv;
}

void add_cv_rows(Report &report, const CvReport &cv) {
  const std::string name(to_string(cv.method));
  report.add(name, cv.aggregate);
  for (const FoldResult &f : cv.folds) {
    report.add(fmt::format("{}/fold{}", name, f.fold), f.metrics);
  }
  report.provenance.tree_source =
      merge_tree_source(report.provenance.tree_source, cv.tree_source);
  report.provenance.notes.insert(report.provenance.notes.end(),
                                 cv.notes.begin(), cv.notes.end());
}

namespace {

std::pair<AnalyzedCorpus, AnalyzedCorpus> train_test(
    const AnalyzedCorpus &corpus) {
  AnalyzedCorpus train = corpus.subset(SplitTag::kTrain);
  AnalyzedCorpus test = corpus.subset(SplitTag::kTest);
  if (train.corpus().documents.empty()) {
    throw Error("corpus has no documents tagged train");
  }
  if (test.corpus().documents.empty()) {
    throw Error("corpus has no documents tagged test");
  }
  return {std::move(train), std::move(test)};
}

}  // namespace

Report run_table1(const AnalyzedCorpus &corpus, const ExperimentConfig &config) {
  const auto [train, test] = train_test(corpus);
  Report report;
  report.title = "association classification, train/test";
  report.provenance = config.provenance();
  for (Method m : {Method::kNnb, Method::kLck, Method::kSubtree}) {
    const MethodRun run = run_method(m, train, test, config);
    report.add(std::string(to_string(m)), run.metrics);
    report.provenance.tree_source =
        merge_tree_source(report.provenance.tree_source, run.tree_source);
    for (const std::string &n : run.notes) {
      report.provenance.notes.push_back(fmt::format("{}: {}", to_string(m), n));
    }
  }
  return report;
}

Report run_table2(const AnalyzedCorpus &corpus, int k,
                  const ExperimentConfig &config) {
  Report report;
  report.title = fmt::format("association classification, {}-fold cv", k);
  report.provenance = config.provenance();
  report.provenance.hyperparameters["k"] = std::to_string(k);
  for (Method m : {Method::kNnb, Method::kLck, Method::kSubtree}) {
    add_cv_rows(report, cross_validate(corpus, k, m, config));
  }
  return report;
}

ConfidenceRun run_confidence(const AnalyzedCorpus &train,
                             const AnalyzedCorpus &test,
                             const ExperimentConfig &config) {
  const MmsConfig mms_config = config.mms_config();
  const MmsModel mms = mms_train(train, mms_config);
  const BowModel bow = bow_train(train, mms_config);
  std::vector<LabeledItem> gold, mms_pred, bow_pred;
  for (const CandidateRef &ref : test.candidates()) {
    const CandidateContext c = test.context(ref);
    if (!has_confidence_target(c.pair)) continue;
    const std::string id = c.pair.id;
    auto name = [](ConfidenceLevel l) {
      return strings::to_lower(to_string(l));
    };
    gold.push_back(
        {id, name(merge_level(*c.pair.gold_confidence, config.merge_high_medium))});
    mms_pred.push_back({id, name(mms_predict(mms, c))});
    bow_pred.push_back({id, name(bow_predict(bow, c))});
  }
  if (gold.empty()) {
    throw Error("no gold-positive candidates with a confidence label to score");
  }
  const std::vector<std::string> classes =
      confidence_classes(config.merge_high_medium);
  return {score(bow_pred, gold, classes), score(mms_pred, gold, classes)};
}

Report run_table3(const AnalyzedCorpus &corpus, const ExperimentConfig &config) {
  const auto [train, test] = train_test(corpus);
  const ConfidenceRun run = run_confidence(train, test, config);
  Report report;
  report.title = "confidence level of positive associations, train/test";
  report.provenance = config.provenance();
  report.add("bow", run.bow);
  report.add("mms", run.mms);
  return report;
}

}  // namespace snpassoc
