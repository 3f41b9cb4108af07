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

#include "snpassoc/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>

#include "rng.h"
#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {
namespace {

using nlohmann::json;

std::string line_locator(std::string_view origin, std::size_t line) {
  return std::string(origin) + ":line " + std::to_string(line);
}

template <typename Enum, typename Parser>
void load_map(const boost::property_tree::ptree &tree, const std::string &section,
              std::map<std::string, Enum> &out, Parser parse,
              const std::string &origin) {
  const auto child = tree.get_child_optional(section);
  if (!child) return;
  for (const auto &[key, value] : *child) {
    const std::string canonical = value.template get_value<std::string>();
    const std::optional<Enum> parsed = parse(canonical);
    if (!parsed) {
      throw ParseError(origin + ":[" + section + "]",
                       "'" + key + "' maps to unknown value '" + canonical + "'");
    }
    out[strings::to_lower(strings::trim(key))] = *parsed;
  }
}

const json &require(const json &object, const char *field,
                    const std::string &locator) {
  const auto it = object.find(field);
  if (it == object.end()) {
    throw ParseError(locator, std::string("missing field '") + field + "'");
  }
  return *it;
}

std::size_t require_index(const json &object, const char *field,
                          const std::string &locator) {
  const json &value = require(object, field, locator);
  if (!value.is_number_unsigned()) {
    throw ParseError(locator,
                     std::string("field '") + field + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string require_string(const json &object, const char *field,
                           const std::string &locator) {
  const json &value = require(object, field, locator);
  if (!value.is_string()) {
    throw ParseError(locator, std::string("field '") + field + "' must be a string");
  }
  return value.get<std::string>();
}

std::optional<std::string> optional_string(const json &object,
                                           const char *field,
                                           const std::string &locator) {
  const auto it = object.find(field);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ParseError(locator, std::string("field '") + field + "' must be a string");
  }
  return it->get<std::string>();
}

Sentence parse_sentence(const json &js, const IngestionConfig &config,
                        const std::string &locator) {
  if (!js.is_object()) throw ParseError(locator, "sentence must be an object");
  Sentence sentence;
  sentence.id = require_string(js, "id", locator);
  sentence.text = require_string(js, "text", locator);

  const json &entities = require(js, "entities", locator);
  if (!entities.is_array()) throw ParseError(locator, "'entities' must be an array");
  for (std::size_t i = 0; i < entities.size(); ++i) {
    const json &e = entities[i];
    const std::string where = locator + " entity " + std::to_string(i);
    if (!e.is_object()) throw ParseError(where, "entity must be an object");
    const EntityKind kind = config.map_kind(require_string(e, "kind", where));
    const Span span{require_index(e, "start", where),
                    require_index(e, "end", where)};
    sentence.mentions.push_back(
        make_mention(sentence.text, kind, span,
                     sentence.id + " entity " + std::to_string(i)));
  }

  const json &pairs = require(js, "pairs", locator);
  if (!pairs.is_array()) throw ParseError(locator, "'pairs' must be an array");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const json &p = pairs[k];
    const std::string where = locator + " pair " + std::to_string(k);
    if (!p.is_object()) throw ParseError(where, "pair must be an object");
    CandidatePair pair;
    pair.id = optional_string(p, "id", where)
                  .value_or(sentence.id + ".p" + std::to_string(k));
    pair.snp = require_index(p, "snp", where);
    pair.phenotype = require_index(p, "phenotype", where);
    if (pair.snp >= sentence.mentions.size() ||
        pair.phenotype >= sentence.mentions.size()) {
      throw ParseError(where, "entity index out of range");
    }
    if (sentence.mentions[pair.snp].kind != EntityKind::kSnp ||
        sentence.mentions[pair.phenotype].kind != EntityKind::kPhenotype) {
      throw ParseError(where, "pair must reference one SNP and one Phenotype");
    }
    if (auto label = optional_string(p, "label", where)) {
      pair.gold_label = config.map_label(*label);
    }
    if (auto confidence = optional_string(p, "confidence", where)) {
      if (!strings::trim(*confidence).empty()) {
        pair.gold_confidence = config.map_confidence(*confidence);
      }
    }
    sentence.candidates.push_back(std::move(pair));
  }
  return sentence;
}

}  // namespace

std::size_t Corpus::sentence_count() const {
  std::size_t n = 0;
  for (const Document &d : documents) n += d.sentences.size();
  return n;
}

std::size_t Corpus::candidate_count() const {
  std::size_t n = 0;
  for (const Document &d : documents) {
    for (const Sentence &s : d.sentences) n += s.candidates.size();
  }
  return n;
}

Corpus Corpus::subset(SplitTag tag) const {
  Corpus out;
  for (const Document &d : documents) {
    if (d.split == tag) out.documents.push_back(d);
  }
  return out;
}

EntityMention make_mention(std::string_view text, EntityKind kind, Span span,
                           const std::string &owner_id) {
  if (span.start >= span.end || span.end > text.size()) {
    throw InvalidSpan(owner_id);
  }
  EntityMention mention;
  mention.kind = kind;
  mention.span = span;
  mention.surface = std::string(text.substr(span.start, span.length()));
  mention.normalized = strings::normalize(mention.surface);
  return mention;
}

void validate(const Corpus &corpus) {
  std::set<std::string> ids;
  for (const Document &doc : corpus.documents) {
    for (const Sentence &s : doc.sentences) {
      for (const EntityMention &m : s.mentions) {
        if (m.span.start >= m.span.end || m.span.end > s.text.size() ||
            s.text.compare(m.span.start, m.span.length(), m.surface) != 0) {
          throw InvalidSpan(s.id);
        }
      }
      for (const CandidatePair &c : s.candidates) {
        if (c.snp >= s.mentions.size() || c.phenotype >= s.mentions.size() ||
            s.mentions[c.snp].kind != EntityKind::kSnp ||
            s.mentions[c.phenotype].kind != EntityKind::kPhenotype) {
          throw ParseError(c.id, "candidate must reference one SNP and one Phenotype");
        }
        if (!ids.insert(c.id).second) {
          throw ParseError(c.id, "duplicate candidate id");
        }
      }
    }
  }
}

IngestionConfig IngestionConfig::load(const std::filesystem::path &path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error &e) {
    throw ParseError(path.string() + ":line " + std::to_string(e.line()),
                     e.message());
  }
  IngestionConfig config;
  const std::string origin = path.string();
  if (const auto ingest = tree.get_child_optional("ingest")) {
    const auto str = [&](const char *key, std::string &field) {
      field = ingest->get<std::string>(key, field);
    };
    const std::string format =
        strings::to_lower(ingest->get<std::string>("format", "auto"));
    if (format == "jsonl" || format == "json") {
      config.format = Format::kJsonLines;
    } else if (format == "xml") {
      config.format = Format::kXml;
    } else if (format != "auto") {
      throw ParseError(origin + ":[ingest]", "unknown format '" + format + "'");
    }
    str("document_element", config.document_element);
    str("document_id_attr", config.document_id_attr);
    str("sentence_element", config.sentence_element);
    str("sentence_id_attr", config.sentence_id_attr);
    str("sentence_text_attr", config.sentence_text_attr);
    str("entity_element", config.entity_element);
    str("entity_id_attr", config.entity_id_attr);
    str("entity_kind_attr", config.entity_kind_attr);
    str("entity_offset_attr", config.entity_offset_attr);
    str("pair_element", config.pair_element);
    str("pair_id_attr", config.pair_id_attr);
    str("pair_e1_attr", config.pair_e1_attr);
    str("pair_e2_attr", config.pair_e2_attr);
    str("label_attr", config.label_attr);
    str("confidence_attr", config.confidence_attr);
    try {
      config.offset_end_inclusive =
          ingest->get<bool>("offset_end_inclusive", config.offset_end_inclusive);
    } catch (const pt::ptree_bad_data &) {
      throw ParseError(origin + ":[ingest]",
                       "offset_end_inclusive must be true or false");
    }
  }
  load_map(tree, "label_map", config.label_map, parse_gold_label, origin);
  load_map(tree, "confidence_map", config.confidence_map, parse_confidence,
           origin);
  load_map(tree, "kind_map", config.kind_map, parse_entity_kind, origin);
  return config;
}

GoldLabel IngestionConfig::map_label(std::string_view value) const {
  const std::string key = strings::to_lower(strings::trim(value));
  if (const auto it = label_map.find(key); it != label_map.end()) {
    return it->second;
  }
  if (const auto parsed = parse_gold_label(key)) return *parsed;
  throw UnknownLabel(std::string(value));
}

ConfidenceLevel IngestionConfig::map_confidence(std::string_view value) const {
  const std::string key = strings::to_lower(strings::trim(value));
  if (const auto it = confidence_map.find(key); it != confidence_map.end()) {
    return it->second;
  }
  if (const auto parsed = parse_confidence(key)) return *parsed;
  throw UnknownLabel(std::string(value));
}

EntityKind IngestionConfig::map_kind(std::string_view value) const {
  const std::string key = strings::to_lower(strings::trim(value));
  if (const auto it = kind_map.find(key); it != kind_map.end()) {
    return it->second;
  }
  if (const auto parsed = parse_entity_kind(key)) return *parsed;
  throw UnknownLabel(std::string(value));
}

Corpus read_jsonl(std::istream &in, const IngestionConfig &config,
                  std::string_view origin) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (strings::trim(line).empty()) continue;
    const std::string locator = line_locator(origin, line_no);
    json js;
    try {
      js = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(locator, e.what());
    }
    if (!js.is_object()) throw ParseError(locator, "document must be an object");
    Document doc;
    doc.id = require_string(js, "id", locator);
    const json &sentences = require(js, "sentences", locator);
    if (!sentences.is_array()) {
      throw ParseError(locator, "'sentences' must be an array");
    }
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      doc.sentences.push_back(parse_sentence(
          sentences[i], config, locator + " sentence " + std::to_string(i)));
    }
    corpus.documents.push_back(std::move(doc));
  }
  validate(corpus);
  return corpus;
}

Corpus ingest_corpus(const std::filesystem::path &path,
                     const IngestionConfig &config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open corpus file");
  bool xml = config.format == IngestionConfig::Format::kXml;
  if (config.format == IngestionConfig::Format::kAuto) {
    xml = strings::to_lower(path.extension().string()) == ".xml";
  }
  return xml ? read_snpphena_xml(in, config, path.string())
             : read_jsonl(in, config, path.string());
}

void write_jsonl(const Corpus &corpus, std::ostream &out) {
  for (const Document &doc : corpus.documents) {
    json sentences = json::array();
    for (const Sentence &s : doc.sentences) {
      json entities = json::array();
      for (const EntityMention &m : s.mentions) {
        entities.push_back({{"kind", to_string(m.kind)},
                            {"start", m.span.start},
                            {"end", m.span.end}});
      }
      json pairs = json::array();
      for (const CandidatePair &c : s.candidates) {
        json pair = {{"id", c.id}, {"snp", c.snp}, {"phenotype", c.phenotype}};
        pair["label"] = c.gold_label
                            ? json(strings::to_lower(to_string(*c.gold_label)))
                            : json(nullptr);
        pair["confidence"] =
            c.gold_confidence
                ? json(strings::to_lower(to_string(*c.gold_confidence)))
                : json(nullptr);
        pairs.push_back(std::move(pair));
      }
      sentences.push_back({{"id", s.id},
                           {"text", s.text},
                           {"entities", std::move(entities)},
                           {"pairs", std::move(pairs)}});
    }
    const json line = {{"id", doc.id}, {"sentences", std::move(sentences)}};
    out << line.dump() << '\n';
  }
}

Corpus split_corpus(Corpus corpus, std::optional<double> ratio,
                    std::uint64_t seed) {
  if (!ratio) return corpus;
  if (!(*ratio > 0.0 && *ratio < 1.0)) {
    throw std::invalid_argument("split ratio must lie in (0, 1)");
  }
  const std::size_t n = corpus.documents.size();
  if (n < 2) {
    throw TooSmall("splitting needs at least 2 documents, got " +
                   std::to_string(n));
  }
  const auto wanted = static_cast<std::size_t>(
      std::llround(*ratio * static_cast<double>(n)));
  const std::size_t n_train = std::clamp<std::size_t>(wanted, 1, n - 1);
  Rng rng(seed);
  const std::vector<std::size_t> order = rng.permutation(n);
  for (std::size_t k = 0; k < n; ++k) {
    corpus.documents[order[k]].split =
        k < n_train ? SplitTag::kTrain : SplitTag::kTest;
  }
  return corpus;
}

}  // namespace snpassoc
