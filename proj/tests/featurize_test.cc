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

#include <cmath>
#include <random>
#include <set>

#include "snpassoc/featurize.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/negation.h"
#include "snpassoc/textproc.h"
#include "support.h"

namespace snpassoc {
namespace {

TokenRange range_of(const std::vector<Token> &tokens, const std::string &text,
                    std::string_view surface) {
  const std::size_t at = text.find(surface);
  return token_range_for(tokens, {at, at + surface.size()});
}

int count_true(const PositionalFeatures &f) {
  return f.both_inside + f.one_left_one_inside + f.one_right_one_inside +
         f.both_left + f.both_right + f.one_left_one_right;
}

class PositionalTest : public ::testing::Test {
 protected:
  PositionalFeatures features_for(const std::string &text, std::string_view snp,
                                  std::string_view phen) {
    const auto tokens = tokenize(text);
    const auto clauses = segment_clauses(tokens, lex.connectors);
    const auto anns = annotate_negation(tokens, clauses, lex.cues);
    return positional_features(
        {range_of(tokens, text, snp), range_of(tokens, text, phen)}, anns);
  }
  Lexicons lex = Lexicons::defaults();
};

TEST_F(PositionalTest, ApoeBothInside) {
  const auto f = features_for(std::string(testing::kApoeSentence),
                              "APOE polymorphisms", "serum HDL-C");
  EXPECT_TRUE(f.both_inside);
  EXPECT_EQ(count_true(f), 1);
  EXPECT_EQ(f.fired(), (std::vector<std::string>{"BothInsNegSc"}));
}

TEST_F(PositionalTest, MarkerOneLeftOneInside) {
  const auto f = features_for(std::string(testing::kMarkerSentence),
                              "rs1051730", "dependence");
  EXPECT_TRUE(f.one_left_one_inside);
  EXPECT_EQ(count_true(f), 1);
}

TEST_F(PositionalTest, CueFreeAllFalse) {
  const auto f = features_for("rs12 raised the risk of asthma.", "rs12", "asthma");
  EXPECT_EQ(f, PositionalFeatures{});
}

TEST_F(PositionalTest, PartialOverlapCountsAsInside) {
  NegationAnnotation ann;
  ann.scope = {3, 6};
  EXPECT_EQ(position_relative_to({2, 4}, ann.scope), ScopePosition::kInside);
  EXPECT_EQ(position_relative_to({5, 8}, ann.scope), ScopePosition::kInside);
  EXPECT_EQ(position_relative_to({1, 3}, ann.scope), ScopePosition::kLeft);
  EXPECT_EQ(position_relative_to({6, 7}, ann.scope), ScopePosition::kRight);
}

TEST(PositionalProperty, OneHotAndSwapInvariance) {
  std::mt19937 rng(17);
  const auto random_range = [&](std::size_t n) {
    const std::size_t b = rng() % n;
    const std::size_t e = b + 1 + rng() % (n - b);
    return TokenRange{b, e};
  };
  for (int round = 0; round < 5000; ++round) {
    const std::size_t n = 2 + rng() % 12;
    NegationAnnotation ann;
    ann.scope = random_range(n);
    const EntityPair pair{random_range(n), random_range(n)};
    const std::vector<NegationAnnotation> one{ann};
    const PositionalFeatures f = positional_features(pair, one);
    ASSERT_EQ(count_true(f), 1);
    const PositionalFeatures g =
        positional_features({pair.phenotype, pair.snp}, one);
    EXPECT_EQ(f.both_inside, g.both_inside);
    EXPECT_EQ(f.both_left, g.both_left);
    EXPECT_EQ(f.both_right, g.both_right);
    EXPECT_EQ(f.one_left_one_right, g.one_left_one_right);
  }
}

TEST(PositionalProperty, OrAggregation) {
  NegationAnnotation left;
  left.scope = {0, 2};
  NegationAnnotation right;
  right.scope = {8, 10};
  const std::vector<NegationAnnotation> anns{left, right};
  const PositionalFeatures f = positional_features({{4, 5}, {6, 7}}, anns);
  EXPECT_TRUE(f.both_right);
  EXPECT_TRUE(f.both_left);
  EXPECT_EQ(count_true(f), 2);
}

// Brute-force n-gram enumeration over a plain word list.
std::set<std::string> ngram_keys(std::string_view pattern,
                                 const std::vector<std::string> &words,
                                 int n_max) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string gram;
    for (int n = 1; n <= n_max && i + n <= words.size(); ++n) {
      if (n > 1) gram += " ";
      gram += words[i + n - 1];
      out.insert(std::string(pattern) + ":" + gram);
    }
  }
  return out;
}

std::set<std::string> keys_with_prefix(const FeatureBag &bag,
                                       std::string_view prefix) {
  std::set<std::string> out;
  for (const auto &[k, v] : bag) {
    if (k.starts_with(prefix)) out.insert(k);
  }
  return out;
}

FeatureBag bag_for(const std::string &text, std::string_view snp,
                   std::string_view phen, int n_max = 3) {
  const auto tokens = tokenize(text);
  return context_ngram_bag(
      tokens, {range_of(tokens, text, snp), range_of(tokens, text, phen)},
      n_max);
}

TEST(ContextNgrams, SharedBetweenKey) {
  const FeatureBag a =
      bag_for("rs4680 in anorexia nervosa patients", "rs4680", "anorexia nervosa");
  const FeatureBag b = bag_for("rs4680 in bulimia patients", "rs4680", "bulimia");
  const auto between_a = keys_with_prefix(a, "between:");
  const auto between_b = keys_with_prefix(b, "between:");
  EXPECT_EQ(between_a, ngram_keys("between", {"in"}, 3));
  std::set<std::string> shared;
  std::set_intersection(between_a.begin(), between_a.end(), between_b.begin(),
                        between_b.end(), std::inserter(shared, shared.end()));
  EXPECT_EQ(shared, (std::set<std::string>{"between:in"}));
}

TEST(ContextNgrams, MatchesBruteForceEnumeration) {
  const FeatureBag bag =
      bag_for("Carriers of rs4680 had higher asthma risk", "rs4680", "asthma");
  EXPECT_EQ(keys_with_prefix(bag, "fore_between:"),
            ngram_keys("fore_between",
                       {"carriers", "of", "SNP_ENT", "had", "higher"}, 3));
  EXPECT_EQ(keys_with_prefix(bag, "between:"),
            ngram_keys("between", {"had", "higher"}, 3));
  EXPECT_EQ(keys_with_prefix(bag, "between_after:"),
            ngram_keys("between_after", {"had", "higher", "PHEN_ENT", "risk"}, 3));
}

TEST(ContextNgrams, AdjacentEntitiesHaveEmptyBetween) {
  const FeatureBag bag = bag_for("asthma rs12 carriers", "rs12", "asthma");
  EXPECT_TRUE(keys_with_prefix(bag, "between:").empty());
}

TEST(ContextNgrams, Deterministic) {
  const std::string text = "rs1 and rs2 raise COPD risk";
  EXPECT_EQ(bag_for(text, "rs1", "COPD"), bag_for(text, "rs1", "COPD"));
}

TEST(ContextNgrams, RejectsZeroN) {
  EXPECT_THROW(bag_for("rs1 COPD", "rs1", "COPD", 0), std::invalid_argument);
}

TEST(ContextNgrams, InvariantToEntitySurfaces) {
  std::mt19937 rng(4);
  const std::vector<std::string> fillers = {"was", "not", "linked", "to", "in",
                                            ",", "risk", "but"};
  const std::vector<std::string> snps = {"rs1", "rs4680", "RS999"};
  const std::vector<std::string> phens = {"asthma", "lung cancer",
                                          "serum HDL-C levels"};
  for (int round = 0; round < 300; ++round) {
    std::vector<std::string> frame;
    const int len = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) frame.push_back(fillers[rng() % fillers.size()]);
    const std::size_t s_at = rng() % (frame.size() + 1);
    std::size_t p_at = rng() % (frame.size() + 1);
    if (p_at == s_at) p_at = s_at + 1 > frame.size() ? 0 : s_at + 1;
    const auto render = [&](const std::string &snp, const std::string &phen) {
      std::string text;
      for (std::size_t i = 0; i <= frame.size(); ++i) {
        if (i == s_at) text += "@" + snp + "@ ";
        if (i == p_at) text += "#" + phen + "# ";
        if (i < frame.size()) text += frame[i] + " ";
      }
      // Markers locate the entities, then are blanked out.
      const std::size_t s0 = text.find('@');
      const std::size_t s1 = text.find('@', s0 + 1);
      const std::size_t p0 = text.find('#');
      const std::size_t p1 = text.find('#', p0 + 1);
      for (std::size_t at : {s0, s1, p0, p1}) text[at] = ' ';
      const auto tokens = tokenize(text);
      return context_ngram_bag(tokens,
                               {token_range_for(tokens, {s0 + 1, s1}),
                                token_range_for(tokens, {p0 + 1, p1})},
                               3);
    };
    const FeatureBag base = render(snps[0], phens[0]);
    for (const auto &[k, v] : base) {
      ASSERT_TRUE(std::isfinite(v));
      ASSERT_GT(v, 0.0);
    }
    EXPECT_EQ(render(snps[1], phens[1]), base);
    EXPECT_EQ(render(snps[2], phens[2]), base);
  }
}

FeatureBag local_for(const std::string &text, std::string_view snp,
                     std::string_view phen, int window = 2) {
  const auto tokens = tokenize(text);
  return local_context_bag(
      tokens, {range_of(tokens, text, snp), range_of(tokens, text, phen)},
      window);
}

TEST(LocalContext, SentenceStartEmitsPad) {
  const FeatureBag bag = local_for("rs12 raised asthma risk", "rs12", "asthma");
  EXPECT_TRUE(bag.contains("snp:-1:PAD"));
  EXPECT_TRUE(bag.contains("snp:-2:PAD"));
  EXPECT_TRUE(bag.contains("snp:+1:w=raised"));
  EXPECT_TRUE(bag.contains("snp:+2:w=PHEN_ENT"));
  EXPECT_TRUE(bag.contains("phen:+2:PAD"));
}

TEST(LocalContext, RejectsZeroWindow) {
  EXPECT_THROW(local_for("rs12 asthma", "rs12", "asthma", 0),
               std::invalid_argument);
}

TEST(LocalContext, ClosingParenthesisAfterSnp) {
  const std::string text =
      "a variant (rs1051730) on chromosome 15q25 increases lung cancer risk";
  const FeatureBag bag = local_for(text, "rs1051730", "lung cancer");
  EXPECT_TRUE(bag.contains("snp:+1:w=)"));
  EXPECT_TRUE(bag.contains("snp:+1:punct=1"));
  EXPECT_TRUE(bag.contains("snp:+1:shape=other"));
  EXPECT_TRUE(bag.contains("snp:-1:w=("));
  EXPECT_TRUE(bag.contains("snp:+2:shape=lower"));
}

TEST(LocalContext, WordShapes) {
  EXPECT_EQ(word_shape("asthma"), "lower");
  EXPECT_EQ(word_shape("Asthma"), "capitalized");
  EXPECT_EQ(word_shape("COPD"), "allcaps");
  EXPECT_EQ(word_shape("HDL-C"), "allcaps");
  EXPECT_EQ(word_shape("mRNA"), "mixed");
  EXPECT_EQ(word_shape("rs12"), "mixed");
  EXPECT_EQ(word_shape("0.043"), "digit");
  EXPECT_EQ(word_shape(")"), "other");
}

TEST(Sparse, EncodeDropsUnknownKeysAndSortsIndices) {
  const std::vector<FeatureBag> bags = {{{"b", 1}, {"a", 2}}, {{"c", 1}}};
  const Vocabulary vocab = Vocabulary::from_bags(bags);
  EXPECT_EQ(vocab.keys(), (std::vector<std::string>{"a", "b", "c"}));
  const SparseVector v = encode({{"c", 3}, {"zz", 1}, {"a", 1}}, vocab);
  ASSERT_EQ(v.entries.size(), 2u);
  EXPECT_EQ(v.entries[0], (std::pair<std::uint32_t, double>{0, 1}));
  EXPECT_EQ(v.entries[1], (std::pair<std::uint32_t, double>{2, 3}));
  EXPECT_EQ(v.vocabulary_id, vocab.id());
  EXPECT_NE(Vocabulary({"a"}).id(), Vocabulary({"b"}).id());
}

}  // namespace
}  // namespace snpassoc
