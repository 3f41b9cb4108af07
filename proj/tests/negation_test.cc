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

#include "snpassoc/error.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/negation.h"
#include "snpassoc/textproc.h"
#include "support.h"

namespace snpassoc {
namespace {

std::size_t index_of(const std::vector<Token> &tokens, std::string_view surface) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].surface == surface) return i;
  }
  ADD_FAILURE() << "no token " << surface;
  return tokens.size();
}

class NegationTest : public ::testing::Test {
 protected:
  Lexicons lex = Lexicons::defaults();
};

TEST_F(NegationTest, DetectsNoInApoeSentence) {
  const auto tokens = tokenize(testing::kApoeSentence);
  const auto cues = detect_cues(tokens, lex.cues);
  ASSERT_EQ(cues.size(), 1u);
  EXPECT_EQ(cues[0].phrase, "no");
  EXPECT_EQ(cues[0].tokens.begin, index_of(tokens, "no"));
}

TEST_F(NegationTest, DetectsNotInMarkerSentence) {
  const auto tokens = tokenize("may not merely operate");
  const auto cues = detect_cues(tokens, lex.cues);
  ASSERT_EQ(cues.size(), 1u);
  EXPECT_EQ(cues[0].phrase, "not");
}

TEST_F(NegationTest, ExactPhraseMatching) {
  EXPECT_TRUE(detect_cues(tokenize("nothing"), lex.cues).empty());
}

TEST_F(NegationTest, LongestCueWins) {
  const auto cues = detect_cues(tokenize("it was not observed"), lex.cues);
  ASSERT_EQ(cues.size(), 1u);
  EXPECT_EQ(cues[0].phrase, "was not");
  EXPECT_TRUE(cues[0].backward);
}

TEST_F(NegationTest, PseudoCueSuppressesInnerCue) {
  EXPECT_TRUE(
      detect_cues(tokenize("not only asthma but also COPD"), lex.cues).empty());
}

TEST_F(NegationTest, ApoeScopeRunsToSentenceEnd) {
  const auto tokens = tokenize(testing::kApoeSentence);
  const auto anns = annotate_negation(tokens,
                                      segment_clauses(tokens, lex.connectors),
                                      lex.cues);
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].scope.begin, index_of(tokens, "associations"));
  EXPECT_EQ(anns[0].scope.end, tokens.size());
  EXPECT_FALSE(anns[0].clause_bounded);
}

TEST_F(NegationTest, MarkerScopeLeavesSnpOnTheLeft) {
  const auto tokens = tokenize(testing::kMarkerSentence);
  const auto anns = annotate_negation(tokens,
                                      segment_clauses(tokens, lex.connectors),
                                      lex.cues);
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].scope.begin, index_of(tokens, "merely"));
  EXPECT_TRUE(anns[0].scope.contains(index_of(tokens, "smoking")));
  EXPECT_LT(index_of(tokens, "rs1051730"), anns[0].scope.begin);
}

TEST_F(NegationTest, ConnectorEndsScope) {
  const auto tokens = tokenize("no effect, but X increased");
  const auto anns = annotate_negation(tokens,
                                      segment_clauses(tokens, lex.connectors),
                                      lex.cues);
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].scope.end, index_of(tokens, "but"));
  EXPECT_TRUE(anns[0].clause_bounded);
}

TEST_F(NegationTest, BackwardCueCoversClause) {
  const auto tokens = tokenize("an effect of rs1 was not observed.");
  const auto anns = annotate_negation(tokens,
                                      segment_clauses(tokens, lex.connectors),
                                      lex.cues);
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_TRUE(anns[0].backward);
  EXPECT_EQ(anns[0].scope, (TokenRange{0, tokens.size()}));
}

TEST_F(NegationTest, CueAtClauseEndScopesBackToClauseStart) {
  const auto tokens = tokenize("rs1 did not");
  const auto anns = annotate_negation(tokens,
                                      segment_clauses(tokens, lex.connectors),
                                      lex.cues);
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].scope, (TokenRange{0, 2}));
}

TEST_F(NegationTest, MisalignedCueThrows) {
  const std::string text = "there were no associations";
  const auto tokens = tokenize(text);
  const auto clauses = segment_clauses(tokens, lex.connectors);
  EXPECT_THROW(resolve_scope(Span{11, 12}, tokens, clauses), AlignmentError);
  EXPECT_THROW(resolve_scope(Span{12, 15}, tokens, clauses), AlignmentError);
  EXPECT_NO_THROW(resolve_scope(Span{11, 13}, tokens, clauses));
}

TEST_F(NegationTest, CueFreeSentenceHasNoAnnotations) {
  EXPECT_TRUE(
      annotate_negation("rs12 raised the risk of asthma.", lex.cues, lex.connectors)
          .empty());
}

TEST_F(NegationTest, TwoClausesGiveDisjointScopes) {
  const std::string text = "rs1 had no effect on asthma but rs2 did not alter COPD";
  const auto tokens = tokenize(text);
  const auto anns = annotate_negation(text, lex.cues, lex.connectors);
  ASSERT_EQ(anns.size(), 2u);
  // Checked by hand: "effect on asthma" and "alter COPD".
  EXPECT_EQ(anns[0].scope, (TokenRange{3, 6}));
  EXPECT_EQ(anns[1].scope, (TokenRange{10, 12}));
  EXPECT_FALSE(anns[0].scope.overlaps(anns[1].scope));
}

TEST_F(NegationTest, ScopePropertiesOnRandomSentences) {
  const std::vector<std::string> words = {
      "rs1",  "asthma", "no",  "not", "without", "but", "after", ",",
      "was",  "were",   "lack", "of", "although", ";", "risk", "."};
  std::mt19937 rng(21);
  for (int round = 0; round < 2000; ++round) {
    std::string text;
    const int len = 1 + static_cast<int>(rng() % 16);
    for (int i = 0; i < len; ++i) text += words[rng() % words.size()] + " ";
    const auto tokens = tokenize(text);
    const auto clauses = segment_clauses(tokens, lex.connectors);
    const auto anns = annotate_negation(tokens, clauses, lex.cues);
    ASSERT_EQ(anns.size(), detect_cues(tokens, lex.cues).size());
    for (const NegationAnnotation &a : anns) {
      ASSERT_FALSE(a.scope.empty()) << text;
      const ClauseSpan &c = clauses[clause_of(clauses, a.cue.begin)];
      EXPECT_TRUE(c.tokens.contains(a.scope)) << text;
      EXPECT_LE(a.scope.end, tokens.size());
    }
    for (std::size_t i = 0; i < anns.size(); ++i) {
      for (std::size_t j = i + 1; j < anns.size(); ++j) {
        if (clause_of(clauses, anns[i].cue.begin) !=
            clause_of(clauses, anns[j].cue.begin)) {
          EXPECT_FALSE(anns[i].scope.overlaps(anns[j].scope)) << text;
        }
      }
    }
  }
}

}  // namespace
}  // namespace snpassoc
