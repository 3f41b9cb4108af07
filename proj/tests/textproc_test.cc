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

#include "snpassoc/lexicon.h"
#include "snpassoc/textproc.h"
#include "snpassoc/token.h"
#include "support.h"

namespace snpassoc {
namespace {

std::vector<std::string> surfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

TEST(Tokenize, ExampleFragment) {
  EXPECT_EQ(surfaces(tokenize("rs1051730 variant may not")),
            (std::vector<std::string>{"rs1051730", "variant", "may", "not"}));
}

TEST(Tokenize, EmptyText) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, PValueFragment) {
  const std::vector<Token> t = tokenize("p=0.043).");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"p", "=", "0.043", ")", "."}));
  EXPECT_EQ(t[2].kind, TokenKind::kNumber);
  EXPECT_EQ(t[1].kind, TokenKind::kSymbol);
  EXPECT_EQ(t[3].kind, TokenKind::kPunct);
  // Spans index the original text.
  EXPECT_EQ(t[2].span.start, 2u);
  EXPECT_EQ(t[2].span.end, 7u);
}

TEST(Tokenize, HyphenatedTermsStayWhole) {
  EXPECT_EQ(surfaces(tokenize("major tobacco-related diseases")),
            (std::vector<std::string>{"major", "tobacco-related", "diseases"}));
}

TEST(Tokenize, ContractionSplitsNegation) {
  EXPECT_EQ(surfaces(tokenize("It didn't")),
            (std::vector<std::string>{"It", "did", "n't"}));
}

// Concatenating surfaces with the original gaps gives back the text, and
// no non-space character is left out.
void expect_reconstructs(const std::string &text) {
  const std::vector<Token> tokens = tokenize(text);
  std::string rebuilt;
  std::size_t pos = 0;
  for (const Token &t : tokens) {
    ASSERT_GE(t.span.start, pos) << text;
    for (std::size_t i = pos; i < t.span.start; ++i) {
      ASSERT_TRUE(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                  text[i] == '\r')
          << "uncovered character in: " << text;
    }
    rebuilt += text.substr(pos, t.span.start - pos);
    ASSERT_EQ(text.substr(t.span.start, t.span.length()), t.surface);
    rebuilt += t.surface;
    pos = t.span.end;
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    ASSERT_TRUE(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                text[i] == '\r');
  }
  rebuilt += text.substr(pos);
  EXPECT_EQ(rebuilt, text);
}

TEST(Tokenize, SpansReconstructRandomText) {
  const std::string alphabet =
      "abcXYZ019 -.,;:()[]=<>%/'\t\xCE\xB1\xE2\x89\xA4";  // also α and ≤
  std::mt19937 rng(3);
  for (int round = 0; round < 2000; ++round) {
    std::string text;
    const int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) {
      const std::size_t k = rng() % (alphabet.size() - 5 + 2);
      if (k < alphabet.size() - 5) {
        text += alphabet[k];
      } else if (k == alphabet.size() - 5) {
        text += "\xCE\xB1";
      } else {
        text += "\xE2\x89\xA4";
      }
    }
    expect_reconstructs(text);
  }
  expect_reconstructs(testing::kApoeSentence.data());
  expect_reconstructs(testing::kMarkerSentence.data());
}

std::vector<std::string> openers(const std::vector<ClauseSpan> &clauses) {
  std::vector<std::string> out;
  for (const ClauseSpan &c : clauses) out.push_back(c.opened_by.value_or(""));
  return out;
}

TEST(Clauses, SingleConnector) {
  const Lexicons lex = Lexicons::defaults();
  const auto tokens = tokenize("X increased Y but Z was unchanged");
  const auto clauses = segment_clauses(tokens, lex.connectors);
  ASSERT_EQ(clauses.size(), 2u);
  EXPECT_EQ(openers(clauses), (std::vector<std::string>{"", "but"}));
  EXPECT_EQ(clauses[1].tokens.begin, 3u);
}

TEST(Clauses, NoConnectorIsOneClause) {
  const Lexicons lex = Lexicons::defaults();
  const auto tokens = tokenize("rs12 raised the risk of asthma.");
  const auto clauses = segment_clauses(tokens, lex.connectors);
  ASSERT_EQ(clauses.size(), 1u);
  EXPECT_EQ(clauses[0].tokens, (TokenRange{0, tokens.size()}));
  EXPECT_FALSE(clauses[0].opened_by.has_value());
}

// Independent segmentation for the fronted-clause example: every lexicon
// phrase is tried at every position, longest first, and the clause count
// follows the documented rules.
std::vector<std::pair<std::size_t, std::string>> brute_force_connectors(
    const std::vector<Token> &tokens, const PhraseLexicon &lexicon) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best = 0;
    std::string phrase;
    for (const LexiconEntry &e : lexicon.entries()) {
      if (e.tokens.size() <= best || i + e.tokens.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < e.tokens.size() && ok; ++k) {
        ok = tokens[i + k].lower == e.tokens[k];
      }
      if (ok) {
        best = e.tokens.size();
        phrase = e.phrase;
      }
    }
    if (best > 0) {
      out.push_back({i, phrase});
      i += best;
    } else {
      ++i;
    }
  }
  return out;
}

TEST(Clauses, FrontedConcessiveClauseClosesAtComma) {
  const Lexicons lex = Lexicons::defaults();
  const auto tokens = tokenize("although X, Y after Z");
  const auto matches = brute_force_connectors(tokens, lex.connectors);
  ASSERT_EQ(matches.size(), 2u);
  EXPECT_EQ(matches[0].second, "although");
  EXPECT_EQ(matches[1].second, "after");
  // Fronted connector: its clause closes at the first comma, which opens a
  // plain clause; the second connector opens the third.
  const auto clauses = segment_clauses(tokens, lex.connectors);
  ASSERT_EQ(clauses.size(), 3u);
  EXPECT_EQ(openers(clauses), (std::vector<std::string>{"although", "", "after"}));
  EXPECT_TRUE(clauses[0].concessive);
}

TEST(Clauses, PartitionTokensOnRandomSentences) {
  const Lexicons lex = Lexicons::defaults();
  const std::vector<std::string> words = {
      "rs1", "asthma", "but", "after", "although", ",", ";", "which",
      "even", "though", "no", "in", "spite", "of", "that", "."};
  std::mt19937 rng(9);
  for (int round = 0; round < 1000; ++round) {
    std::string text;
    const int len = 1 + static_cast<int>(rng() % 14);
    for (int i = 0; i < len; ++i) text += words[rng() % words.size()] + " ";
    const auto tokens = tokenize(text);
    const auto clauses = segment_clauses(tokens, lex.connectors);
    std::size_t next = 0;
    for (const ClauseSpan &c : clauses) {
      ASSERT_EQ(c.tokens.begin, next) << text;
      ASSERT_FALSE(c.tokens.empty()) << text;
      next = c.tokens.end;
    }
    ASSERT_EQ(next, tokens.size()) << text;
    if (!clauses.empty()) {
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        EXPECT_TRUE(clauses[clause_of(clauses, t)].tokens.contains(t));
      }
    }
  }
}

TEST(Snps, RecognizesRsIds) {
  for (const std::string text : {"(rs1051730) on chromosome 15q25", "rs4680"}) {
    const auto tokens = tokenize(text);
    const auto m = recognize_snps(tokens, text);
    ASSERT_EQ(m.size(), 1u) << text;
    EXPECT_EQ(m[0].kind, EntityKind::kSnp);
  }
}

TEST(Snps, RejectsNonIds) {
  for (const std::string text : {"rsX123", "risk", "rs", "rs12345678901"}) {
    EXPECT_TRUE(recognize_snps(tokenize(text), text).empty()) << text;
  }
}

TEST(Snps, PrefixCaseDoesNotMatter) {
  for (const std::string prefix : {"rs", "RS", "Rs", "rS"}) {
    const std::string text = "variant " + prefix + "4680 in cases";
    const auto m = recognize_snps(tokenize(text), text);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0].normalized, "rs4680");
    EXPECT_EQ(m[0].span, (Span{8, 14}));
  }
}

TEST(Phenotypes, GazetteerMatch) {
  const PhraseLexicon g = PhraseLexicon::parse("preterm birth\n");
  const std::string text = "increased risk of preterm birth (OR=3.2";
  const auto m = recognize_phenotypes(tokenize(text), text, g);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].surface, "preterm birth");
}

TEST(Phenotypes, LongestMatchWins) {
  const PhraseLexicon g = PhraseLexicon::parse("lung cancer\ncancer\n");
  const std::string text = "Lung Cancer risk";
  const auto m = recognize_phenotypes(tokenize(text), text, g);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].surface, "Lung Cancer");
  EXPECT_EQ(m[0].normalized, "lung cancer");
}

TEST(Phenotypes, EmptyGazetteer) {
  const std::string text = "lung cancer";
  EXPECT_TRUE(recognize_phenotypes(tokenize(text), text, PhraseLexicon{}).empty());
}

TEST(Phenotypes, NeverOverlapOnRandomText) {
  const PhraseLexicon g = PhraseLexicon::parse(
      "a b\nb c\na\nc\nb c d\nd\n");
  std::mt19937 rng(5);
  const char *words[] = {"a", "b", "c", "d", "e"};
  for (int round = 0; round < 500; ++round) {
    std::string text;
    for (int i = 0; i < 10; ++i) text += std::string(words[rng() % 5]) + " ";
    const auto m = recognize_phenotypes(tokenize(text), text, g);
    for (std::size_t i = 1; i < m.size(); ++i) {
      EXPECT_LE(m[i - 1].span.end, m[i].span.start) << text;
    }
  }
}

TEST(Candidates, CrossProductInDocumentedOrder) {
  Sentence s = testing::make_sentence(
      "s", "P1 and rs2 then P2 and rs1 then P3", {"rs1", "rs2"},
      {"P1", "P2", "P3"});
  s.candidates.clear();
  const auto c = enumerate_candidates(s);
  ASSERT_EQ(c.size(), 6u);
  // Brute force: all pairs sorted by (snp start, phenotype start).
  std::vector<std::pair<std::size_t, std::size_t>> expected;
  for (std::size_t i = 0; i < s.mentions.size(); ++i) {
    for (std::size_t j = 0; j < s.mentions.size(); ++j) {
      if (s.mentions[i].kind == EntityKind::kSnp &&
          s.mentions[j].kind == EntityKind::kPhenotype) {
        expected.push_back({i, j});
      }
    }
  }
  std::sort(expected.begin(), expected.end(), [&](auto a, auto b) {
    return std::make_pair(s.mentions[a.first].span.start,
                          s.mentions[a.second].span.start) <
           std::make_pair(s.mentions[b.first].span.start,
                          s.mentions[b.second].span.start);
  });
  for (std::size_t k = 0; k < c.size(); ++k) {
    EXPECT_EQ(c[k].snp, expected[k].first);
    EXPECT_EQ(c[k].phenotype, expected[k].second);
  }
}

TEST(Candidates, OneSnpTwoPhenotypesAndNoSnp) {
  Sentence s = testing::make_sentence("s", "rs1 with P1 and P2", {"rs1"},
                                      {"P1", "P2"});
  EXPECT_EQ(enumerate_candidates(s).size(), 2u);
  Sentence none = testing::make_sentence("t", "P1 only", {}, {"P1"});
  EXPECT_TRUE(enumerate_candidates(none).empty());
}

TEST(RawSentence, RecognizesAndPairs) {
  const Lexicons lex = Lexicons::defaults();
  const Sentence s = analyze_raw_sentence(
      "r1", "rs1051730 is associated with lung cancer and COPD.", lex.gazetteer);
  ASSERT_EQ(s.candidates.size(), 2u);
  EXPECT_EQ(s.phenotype_of(s.candidates[0]).normalized, "lung cancer");
  EXPECT_EQ(s.phenotype_of(s.candidates[1]).normalized, "copd");
}

}  // namespace
}  // namespace snpassoc
