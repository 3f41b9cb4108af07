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

#ifndef SNPASSOC_CORPUS_H_
#define SNPASSOC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/types.h"

namespace snpassoc {

struct EntityMention {
  EntityKind kind = EntityKind::kSnp;
  Span span;
  std::string surface;     // text sliced by span
  std::string normalized;  // lowercased, whitespace collapsed

  friend bool operator==(const EntityMention &, const EntityMention &) = default;
};

// One (SNP, phenotype) mention pair in a sentence. `snp` and `phenotype`
// index into the owning Sentence::mentions.
struct CandidatePair {
  std::string id;
  std::size_t snp = 0;
  std::size_t phenotype = 0;
  std::optional<GoldLabel> gold_label;
  std::optional<ConfidenceLevel> gold_confidence;

  friend bool operator==(const CandidatePair &, const CandidatePair &) = default;
};

struct Sentence {
  std::string id;
  std::string text;
  std::vector<EntityMention> mentions;
  std::vector<CandidatePair> candidates;

  const EntityMention &snp_of(const CandidatePair &c) const {
    return mentions.at(c.snp);
  }
  const EntityMention &phenotype_of(const CandidatePair &c) const {
    return mentions.at(c.phenotype);
  }
  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  SplitTag split = SplitTag::kUnsplit;

  friend bool operator==(const Document &, const Document &) = default;
};

struct Corpus {
  std::vector<Document> documents;

  std::size_t sentence_count() const;
  std::size_t candidate_count() const;
  // Documents whose tag equals `tag`, in corpus order.
  Corpus subset(SplitTag tag) const;

  friend bool operator==(const Corpus &, const Corpus &) = default;
};

// Builds a mention, checking the span against `text`. Throws
// InvalidSpan(owner_id) when the span is empty or runs past the text.
EntityMention make_mention(std::string_view text, EntityKind kind, Span span,
                           const std::string &owner_id);

// Checks every corpus invariant: spans inside their sentence, candidate
// kinds, unique candidate ids. Throws InvalidSpan / ParseError.
void validate(const Corpus &corpus);

// Ingestion settings. The label tables map corpus-specific strings
// (compared lowercased) onto the fixed label vocabularies; the canonical
// names ("positive", "low", ...) are always accepted.
//
// The XML fields describe an adapter for SNPPhenA-style standoff XML:
//   <document id>
//     <sentence id text>
//       <entity id type charOffset="start-end"/>
//       <pair id e1 e2 type confidence/>
// Every element and attribute name is configurable.
struct IngestionConfig {
  enum class Format { kAuto, kJsonLines, kXml };
  Format format = Format::kAuto;

  std::string document_element = "document";
  std::string document_id_attr = "id";
  std::string sentence_element = "sentence";
  std::string sentence_id_attr = "id";
  std::string sentence_text_attr = "text";
  std::string entity_element = "entity";
  std::string entity_id_attr = "id";
  std::string entity_kind_attr = "type";
  std::string entity_offset_attr = "charOffset";
  bool offset_end_inclusive = true;
  std::string pair_element = "pair";
  std::string pair_id_attr = "id";
  std::string pair_e1_attr = "e1";
  std::string pair_e2_attr = "e2";
  std::string label_attr = "type";
  std::string confidence_attr = "confidence";

  std::map<std::string, GoldLabel> label_map;
  std::map<std::string, ConfidenceLevel> confidence_map;
  std::map<std::string, EntityKind> kind_map;

  // INI file with an [ingest] section holding the scalar keys above and
  // optional [label_map], [confidence_map], [kind_map] sections of
  // "corpus_value = canonical_value" lines. Throws ParseError.
  static IngestionConfig load(const std::filesystem::path &path);

  GoldLabel map_label(std::string_view value) const;
  ConfidenceLevel map_confidence(std::string_view value) const;
  EntityKind map_kind(std::string_view value) const;
};

// Reads a corpus file. JSON-lines (one document per line) unless the
// config or a ".xml" extension selects the XML adapter. An empty file gives
// an empty corpus.
Corpus ingest_corpus(const std::filesystem::path &path,
                     const IngestionConfig &config = {});
Corpus read_jsonl(std::istream &in, const IngestionConfig &config = {},
                  std::string_view origin = "<stream>");
Corpus read_snpphena_xml(std::istream &in, const IngestionConfig &config = {},
                         std::string_view origin = "<stream>");

// Native JSON-lines serialization; read_jsonl(write_jsonl(c)) == c up to
// split tags, which the native format does not carry.
void write_jsonl(const Corpus &corpus, std::ostream &out);

// Document-level train/test split. With a ratio, documents are shuffled
// under `seed` and the first round(ratio * n) (clamped to [1, n-1]) become
// Train, the rest Test. Without a ratio the corpus passes through unchanged.
// Throws TooSmall when a ratio is given and there are fewer than 2 documents,
// std::invalid_argument for a ratio outside (0, 1).
Corpus split_corpus(Corpus corpus, std::optional<double> ratio,
                    std::uint64_t seed);

}  // namespace snpassoc

#endif  // SNPASSOC_CORPUS_H_
