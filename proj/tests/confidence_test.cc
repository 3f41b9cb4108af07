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

#include <gtest/gtest.h>

#include <random>

#include "snpassoc/analysis.h"
#include "snpassoc/confidence.h"
#include "snpassoc/error.h"
#include "snpassoc/markers.h"
#include "support.h"

namespace snpassoc {
namespace {

using testing::make_sentence;

class MarkerTest : public ::testing::Test {
 protected:
  std::vector<ModalMarker> markers(std::string_view text) {
    return detect_modal_markers(tokenize(text), lex.modality);
  }
  Lexicons lex = Lexicons::defaults();
};

TEST_F(MarkerTest, MayIsHedge) {
  const auto m = markers("the rs1051730 variant may not merely operate");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].phrase, "may");
  EXPECT_EQ(m[0].tier, ModalTier::kHedge);
  EXPECT_EQ(m[0].span, (Span{22, 25}));
}

TEST_F(MarkerTest, SignificantlyIsBooster) {
  const auto m = markers("significantly associated with an increased risk");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].phrase, "significantly");
  EXPECT_EQ(m[0].tier, ModalTier::kBooster);
}

TEST_F(MarkerTest, MarkerFreeSentence) {
  EXPECT_TRUE(markers("rs12 raised the risk of asthma.").empty());
}

TEST_F(MarkerTest, EntryWithoutTierThrows) {
  const PhraseLexicon bad = PhraseLexicon::parse("may\n");
  EXPECT_THROW(detect_modal_markers(tokenize("it may"), bad), ParseError);
  EXPECT_FALSE(parse_modal_tier("Maybe").has_value());
  EXPECT_EQ(parse_modal_tier("booster"), ModalTier::kBooster);
}

TEST(PValues, HaplotypeExample) {
  const std::string text = "(OR=3.2 [CI 1.04-9.8], p=0.043)";
  const auto p = extract_pvalues(text);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].comparator, Comparator::kEq);
  EXPECT_DOUBLE_EQ(p[0].value, 0.043);
  EXPECT_EQ(text.substr(p[0].span.start, 1), "p");
}

TEST(PValues, Forms) {
  struct Case {
    std::string text;
    Comparator cmp;
    double value;
  };
  const std::vector<Case> cases = {
      {"P < 0.001", Comparator::kLt, 0.001},
      {"p \xE2\x89\xA4 5e-8", Comparator::kLe, 5e-8},
      {"p-value = 0.05", Comparator::kEq, 0.05},
      {"P = 3 x 10^-6", Comparator::kEq, 3e-6},
      {"p>0.5", Comparator::kGt, 0.5},
      {"p >= .05", Comparator::kGe, 0.05},
      {"p=2.1E-5", Comparator::kEq, 2.1e-5},
  };
  for (const Case &c : cases) {
    const auto p = extract_pvalues(c.text);
    ASSERT_EQ(p.size(), 1u) << c.text;
    EXPECT_EQ(p[0].comparator, c.cmp) << c.text;
    EXPECT_NEAR(p[0].value, c.value, 1e-15) << c.text;
  }
}

TEST(PValues, OutOfRangeDropped) {
  EXPECT_TRUE(extract_pvalues("p=43").empty());
  EXPECT_TRUE(extract_pvalues("p = 0").empty());
  EXPECT_TRUE(extract_pvalues("no p-values here").empty());
}

TEST(PValues, UpperBound) {
  PValueMention m;
  m.value = 0.01;
  m.comparator = Comparator::kLt;
  EXPECT_EQ(m.upper_bound(), 0.01);
  m.comparator = Comparator::kGe;
  EXPECT_EQ(m.upper_bound(), 1.0);
}

TEST(Buckets, DefaultNamesAndEdges) {
  const PValueBuckets b;
  EXPECT_EQ(b.bucket_count(), 3u);
  PValueMention m;
  m.value = 0.001;
  m.comparator = Comparator::kLt;
  EXPECT_EQ(b.bucket_of(m), 0u);
  m.comparator = Comparator::kEq;
  EXPECT_EQ(b.bucket_of(m), 1u);
  m.value = 0.043;
  EXPECT_EQ(b.bucket_name(b.bucket_of(m)), "0.001<=p<0.05");
  m.value = 0.05;
  EXPECT_EQ(b.bucket_name(b.bucket_of(m)), "p>=0.05");
  EXPECT_EQ(b.bucket_name(0), "p<0.001");
  EXPECT_EQ(PValueBuckets::parse("0.001,0.05"), b);
  EXPECT_THROW(PValueBuckets::parse("0.05,0.001"), std::invalid_argument);
  EXPECT_THROW(PValueBuckets::parse("2"), std::invalid_argument);
}

TEST(Buckets, MonotoneInUpperBound) {
  const PValueBuckets b;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> exponent(-10.0, 0.0);
  const Comparator cmps[] = {Comparator::kEq, Comparator::kLt, Comparator::kLe,
                             Comparator::kGt, Comparator::kGe};
  for (int i = 0; i < 5000; ++i) {
    PValueMention x, y;
    x.value = std::pow(10.0, exponent(rng));
    y.value = std::pow(10.0, exponent(rng));
    x.comparator = cmps[rng() % 3];  // bounded comparators
    y.comparator = cmps[rng() % 3];
    if (x.comparator == Comparator::kLt || y.comparator == Comparator::kLt) {
      // A strict bound sits just below its value; compare like with like.
      y.comparator = x.comparator;
    }
    if (x.upper_bound() < y.upper_bound()) std::swap(x, y);
    EXPECT_GE(b.bucket_of(x), b.bucket_of(y));
    x.comparator = cmps[3 + rng() % 2];
    EXPECT_EQ(b.bucket_of(x), b.bucket_count() - 1);
  }
}

TEST(ModalClause, Cases) {
  const Lexicons lex = Lexicons::defaults();
  const auto check = [&](const std::string &text, TokenRange snp,
                         TokenRange phen) {
    const auto tokens = tokenize(text);
    const auto clauses = segment_clauses(tokens, lex.connectors);
    const auto markers = detect_modal_markers(tokens, lex.modality);
    return entities_in_modal_clause({snp, phen}, clauses, markers);
  };
  // rs1 may affect asthma
  EXPECT_TRUE(check("rs1 may affect asthma", {0, 1}, {3, 4}));
  // clause 1: "it may vary" | clause 2: "but rs1 raised asthma"
  EXPECT_FALSE(check("it may vary but rs1 raised asthma", {4, 5}, {6, 7}));
  // clause 1: "rs1 may vary" | clause 2: "but asthma rose"
  EXPECT_FALSE(check("rs1 may vary but asthma rose", {0, 1}, {4, 5}));
  EXPECT_FALSE(check("rs1 raised asthma", {0, 1}, {2, 3}));
}

TEST(MmsFeatures, EmptyGivesNoneAndOutOfClause) {
  const FeatureBag bag = mms_bag({}, {}, false);
  EXPECT_EQ(bag, (FeatureBag{{"pbucket:none", 1.0}, {"in_clause:false", 1.0}}));
}

TEST(MmsFeatures, BoosterWithMidPValue) {
  const std::string text =
      "rs7 was significantly associated with asthma (p=0.043).";
  const Lexicons lex = Lexicons::defaults();
  const auto markers = detect_modal_markers(tokenize(text), lex.modality);
  const FeatureBag bag = mms_bag(markers, extract_pvalues(text), true);
  EXPECT_EQ(bag.at("tier:Booster"), 1.0);
  EXPECT_EQ(bag.at("marker:significantly"), 1.0);
  EXPECT_EQ(bag.at("pbucket:0.001<=p<0.05"), 1.0);
  EXPECT_EQ(bag.at("in_clause:true"), 1.0);
  EXPECT_FALSE(bag.contains("pbucket:none"));
}

TEST(MmsFeatures, TwoHedges) {
  const Lexicons lex = Lexicons::defaults();
  const auto markers = detect_modal_markers(
      tokenize("rs7 may possibly affect asthma"), lex.modality);
  const FeatureBag bag = mms_bag(markers, {}, true);
  EXPECT_EQ(bag.at("tier:Hedge"), 2.0);
}

TEST(MmsFeatures, StrongestPValueWins) {
  const auto p = extract_pvalues("p = 0.2 overall and p < 0.001 in cases");
  ASSERT_EQ(p.size(), 2u);
  const FeatureBag bag = mms_bag({}, p, false);
  EXPECT_TRUE(bag.contains("pbucket:p<0.001"));
  EXPECT_FALSE(bag.contains("pbucket:p>=0.05"));
}

class MmsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    train = std::make_unique<AnalyzedCorpus>(
        ingest_corpus(testing::data_path("mms30.jsonl")), lex);
    model = mms_train(*train, config);
  }
  ConfidenceLevel predict_on(const std::string &text, const std::string &snp,
                             const std::string &phen) {
    const AnalyzedCorpus one(
        testing::one_sentence_corpus(make_sentence(
            "q", text, {snp}, {phen}, GoldLabel::kPositive)),
        lex);
    return mms_predict(model, one.context(one.candidates().at(0)));
  }
  Lexicons lex = Lexicons::defaults();
  MmsConfig config;
  std::unique_ptr<AnalyzedCorpus> train;
  MmsModel model;
};

TEST_F(MmsTest, FitsSeparableFixture) {
  const auto refs = train->candidates();
  ASSERT_EQ(refs.size(), 30u);
  for (const CandidateRef &r : refs) {
    const CandidateContext ctx = train->context(r);
    EXPECT_EQ(mms_predict(model, ctx), *ctx.pair.gold_confidence)
        << ctx.sentence.text;
  }
}

TEST_F(MmsTest, BoosterWithMidPValueIsHigh) {
  EXPECT_EQ(predict_on("rs9 was significantly associated with obesity (p=0.043).",
                       "rs9", "obesity"),
            ConfidenceLevel::kHigh);
}

TEST_F(MmsTest, FallbackToMedium) {
  EXPECT_EQ(predict_on("rs9 is linked to obesity.", "rs9", "obesity"),
            ConfidenceLevel::kMedium);
  EXPECT_EQ(predict_on("This may vary, but rs9 is linked to obesity.", "rs9",
                       "obesity"),
            ConfidenceLevel::kMedium);
}

TEST_F(MmsTest, MarkerFreeSentencesNeverReachClassifier) {
  // Whatever the weights, a marker-free sentence maps to Medium.
  MmsModel rigged = model;
  for (SvmModel &m : rigged.ovr.models) m.bias = 0.0;
  rigged.ovr.models[0].bias = 100.0;
  EXPECT_EQ(mms_predict(rigged, train->context(train->candidates()[2])),
            ConfidenceLevel::kMedium);
}

TEST_F(MmsTest, MergeMapsMediumToHigh) {
  MmsConfig merged = config;
  merged.merge_high_medium = true;
  const MmsModel m = mms_train(*train, merged);
  EXPECT_EQ(m.ovr.classes.size(), 2u);
  EXPECT_EQ(mms_predict(m, train->context(train->candidates()[2])),
            ConfidenceLevel::kHigh);
  EXPECT_EQ(merge_level(ConfidenceLevel::kMedium, true), ConfidenceLevel::kHigh);
  EXPECT_EQ(merge_level(ConfidenceLevel::kLow, true), ConfidenceLevel::kLow);
  EXPECT_EQ(merge_level(ConfidenceLevel::kMedium, false),
            ConfidenceLevel::kMedium);
}

TEST_F(MmsTest, RetrainIsIdentical) {
  const MmsModel again = mms_train(*train, config);
  ASSERT_EQ(again.ovr.models.size(), model.ovr.models.size());
  for (std::size_t c = 0; c < model.ovr.models.size(); ++c) {
    EXPECT_EQ(again.ovr.models[c].alphas, model.ovr.models[c].alphas);
    EXPECT_EQ(again.ovr.models[c].bias, model.ovr.models[c].bias);
  }
  EXPECT_EQ(again.vocabulary, model.vocabulary);
}

TEST(Mms, SingleLevelThrows) {
  Corpus c = ingest_corpus(testing::data_path("mms30.jsonl"));
  for (Document &d : c.documents) {
    for (Sentence &s : d.sentences) {
      for (CandidatePair &p : s.candidates) {
        p.gold_confidence = ConfidenceLevel::kHigh;
      }
    }
  }
  const AnalyzedCorpus ac(std::move(c), Lexicons::defaults());
  EXPECT_THROW(mms_train(ac, {}), DegenerateTrainingSet);
  EXPECT_THROW(bow_train(ac, {}), DegenerateTrainingSet);
}

TEST(Bow, MemorizesTrainingSentences) {
  const AnalyzedCorpus ac(ingest_corpus(testing::data_path("mms30.jsonl")),
                          Lexicons::defaults());
  MmsConfig config;
  config.smo.C = 10.0;
  const BowModel m = bow_train(ac, config);
  for (const CandidateRef &r : ac.candidates()) {
    const CandidateContext ctx = ac.context(r);
    EXPECT_EQ(bow_predict(m, ctx), *ctx.pair.gold_confidence);
  }
}

TEST(Bow, BinaryIndicators) {
  const Vocabulary v({"associated", "significantly", "the"});
  const SparseVector x =
      bow_vectorize(tokenize("Significantly associated, significantly."), v);
  ASSERT_EQ(x.entries.size(), 2u);
  EXPECT_EQ(x.entries[0].second, 1.0);
  EXPECT_EQ(x.entries[1].second, 1.0);
  EXPECT_TRUE(bow_vectorize(tokenize(""), v).empty());
}

TEST(Confidence, TargetFilter) {
  CandidatePair p;
  EXPECT_FALSE(has_confidence_target(p));
  p.gold_label = GoldLabel::kPositive;
  EXPECT_FALSE(has_confidence_target(p));
  p.gold_confidence = ConfidenceLevel::kLow;
  EXPECT_TRUE(has_confidence_target(p));
  p.gold_label = GoldLabel::kNegative;
  EXPECT_FALSE(has_confidence_target(p));
}

}  // namespace
}  // namespace snpassoc
