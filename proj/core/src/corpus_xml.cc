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

// SNPPhenA-style standoff XML adapter. Element and attribute names all come
// from IngestionConfig.

#include <algorithm>
#include <map>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "snpassoc/corpus.h"
#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {
namespace {

namespace pt = boost::property_tree;

std::optional<std::string> attribute(const pt::ptree &node,
                                     const std::string &name) {
  const auto attrs = node.get_child_optional("<xmlattr>");
  if (!attrs) return std::nullopt;
  const auto value = attrs->get_optional<std::string>(name);
  if (!value) return std::nullopt;
  return *value;
}

std::string require_attribute(const pt::ptree &node, const std::string &name,
                              const std::string &locator) {
  auto value = attribute(node, name);
  if (!value) throw ParseError(locator, "missing attribute '" + name + "'");
  return *value;
}

std::size_t parse_offset(std::string_view text, const std::string &locator) {
  text = strings::trim(text);
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(locator, "bad character offset '" + std::string(text) + "'");
  }
  return std::stoul(std::string(text));
}

// "start-end", possibly several joined by ';' for discontinuous mentions;
// the mention covers the outermost range.
Span parse_offsets(const std::string &value, bool end_inclusive,
                   const std::string &locator) {
  std::size_t start = SIZE_MAX;
  std::size_t end = 0;
  for (std::string_view piece : strings::split(value, ';')) {
    const std::size_t dash = piece.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError(locator, "bad charOffset '" + value + "'");
    }
    const std::size_t s = parse_offset(piece.substr(0, dash), locator);
    std::size_t e = parse_offset(piece.substr(dash + 1), locator);
    if (end_inclusive) ++e;
    start = std::min(start, s);
    end = std::max(end, e);
  }
  return {start, end};
}

void collect(const pt::ptree &node, const std::string &name,
             std::vector<const pt::ptree *> &out) {
  for (const auto &[tag, child] : node) {
    if (tag == name) {
      out.push_back(&child);
    } else if (tag != "<xmlattr>" && tag != "<xmlcomment>") {
      collect(child, name, out);
    }
  }
}

Sentence read_sentence(const pt::ptree &node, const IngestionConfig &config,
                       const std::string &locator) {
  Sentence sentence;
  sentence.id = require_attribute(node, config.sentence_id_attr, locator);
  sentence.text = require_attribute(node, config.sentence_text_attr, locator);

  std::map<std::string, std::size_t> by_id;
  std::size_t entity_no = 0;
  std::size_t pair_no = 0;
  for (const auto &[tag, child] : node) {
    if (tag == config.entity_element) {
      const std::string where =
          locator + "/" + tag + "[" + std::to_string(entity_no++) + "]";
      const std::string id = require_attribute(child, config.entity_id_attr, where);
      const EntityKind kind = config.map_kind(
          require_attribute(child, config.entity_kind_attr, where));
      const Span span = parse_offsets(
          require_attribute(child, config.entity_offset_attr, where),
          config.offset_end_inclusive, where);
      by_id[id] = sentence.mentions.size();
      sentence.mentions.push_back(make_mention(sentence.text, kind, span, id));
    }
  }
  for (const auto &[tag, child] : node) {
    if (tag != config.pair_element) continue;
    const std::string where =
        locator + "/" + tag + "[" + std::to_string(pair_no) + "]";
    CandidatePair pair;
    pair.id = attribute(child, config.pair_id_attr)
                  .value_or(sentence.id + ".p" + std::to_string(pair_no));
    ++pair_no;
    const auto lookup = [&](const std::string &attr) {
      const std::string ref = require_attribute(child, attr, where);
      const auto it = by_id.find(ref);
      if (it == by_id.end()) {
        throw ParseError(where, "unknown entity reference '" + ref + "'");
      }
      return it->second;
    };
    const std::size_t a = lookup(config.pair_e1_attr);
    const std::size_t b = lookup(config.pair_e2_attr);
    const EntityKind ka = sentence.mentions[a].kind;
    const EntityKind kb = sentence.mentions[b].kind;
    if (ka == kb) {
      throw ParseError(where, "pair must reference one SNP and one Phenotype");
    }
    pair.snp = ka == EntityKind::kSnp ? a : b;
    pair.phenotype = ka == EntityKind::kSnp ? b : a;
    if (auto label = attribute(child, config.label_attr)) {
      pair.gold_label = config.map_label(*label);
    }
    if (auto confidence = attribute(child, config.confidence_attr)) {
      if (!strings::trim(*confidence).empty()) {
        pair.gold_confidence = config.map_confidence(*confidence);
      }
    }
    sentence.candidates.push_back(std::move(pair));
  }
  return sentence;
}

}  // namespace

Corpus read_snpphena_xml(std::istream &in, const IngestionConfig &config,
                         std::string_view origin) {
  pt::ptree tree;
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error &e) {
    throw ParseError(std::string(origin) + ":line " + std::to_string(e.line()),
                     e.message());
  }
  Corpus corpus;
  std::vector<const pt::ptree *> documents;
  collect(tree, config.document_element, documents);
  if (documents.empty()) {
    // A file holding bare sentences is one document.
    std::vector<const pt::ptree *> sentences;
    collect(tree, config.sentence_element, sentences);
    if (sentences.empty()) return corpus;
    Document doc;
    doc.id = std::filesystem::path(std::string(origin)).stem().string();
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      doc.sentences.push_back(read_sentence(
          *sentences[i], config,
          std::string(origin) + ":" + config.sentence_element + "[" +
              std::to_string(i) + "]"));
    }
    corpus.documents.push_back(std::move(doc));
    validate(corpus);
    return corpus;
  }
  for (std::size_t d = 0; d < documents.size(); ++d) {
    const std::string where = std::string(origin) + ":" +
                              config.document_element + "[" +
                              std::to_string(d) + "]";
    Document doc;
    doc.id = require_attribute(*documents[d], config.document_id_attr, where);
    std::size_t s = 0;
    for (const auto &[tag, child] : *documents[d]) {
      if (tag != config.sentence_element) continue;
      doc.sentences.push_back(read_sentence(
          child, config, where + "/" + tag + "[" + std::to_string(s++) + "]"));
    }
    corpus.documents.push_back(std::move(doc));
  }
  validate(corpus);
  return corpus;
}

}  // namespace snpassoc
