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

#include "snpassoc/tree.h"

#include <cmath>
#include <fstream>
#include <unordered_map>

#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {
namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  ParseTree parse() {
    skip_space();
    ParseTree tree = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input after tree");
    return tree;
  }

 private:
  [[noreturn]] void fail(const std::string &message) const {
    throw ParseError("tree offset " + std::to_string(pos_), message);
  }

  void skip_space() {
    while (pos_ < text_.size() && strings::is_space(text_[pos_])) ++pos_;
  }

  std::string atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !strings::is_space(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (pos_ == start) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }

  ParseTree node() {
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    skip_space();
    ParseTree tree;
    tree.label = atom();
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced brackets");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] == '(') {
        tree.children.push_back(node());
      } else {
        tree.children.push_back(ParseTree{atom(), {}});
      }
    }
    return tree;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(const ParseTree &tree, std::string &out) {
  if (tree.is_leaf()) {
    out += tree.label;
    return;
  }
  out.push_back('(');
  out += tree.label;
  for (const ParseTree &child : tree.children) {
    out.push_back(' ');
    write(child, out);
  }
  out.push_back(')');
}

std::string leaf_text(const Token &t) {
  if (t.surface == "(") return "-LRB-";
  if (t.surface == ")") return "-RRB-";
  return t.lower;
}

ParseTree preterminal(const Token &t) {
  return ParseTree{"TOK", {ParseTree{leaf_text(t), {}}}};
}

// Internal nodes in post-order with their production keys and child links.
struct FlatTree {
  std::vector<std::string> production;
  std::vector<bool> preterminal;
  // Flat indices of internal children; -1 for leaf children.
  std::vector<std::vector<long>> children;
};

long flatten(const ParseTree &tree, FlatTree &flat) {
  if (tree.is_leaf()) return -1;
  std::vector<long> kids;
  std::string production = tree.label + " ->";
  for (const ParseTree &child : tree.children) {
    kids.push_back(flatten(child, flat));
    // Terminals are marked so a word never matches a same-named category.
    production += child.is_leaf() ? " '" : " ";
    production += child.label;
  }
  flat.production.push_back(std::move(production));
  flat.preterminal.push_back(tree.is_preterminal());
  flat.children.push_back(std::move(kids));
  return static_cast<long>(flat.production.size() - 1);
}

}  // namespace

bool ParseTree::is_preterminal() const {
  if (children.empty()) return false;
  for (const ParseTree &c : children) {
    if (!c.is_leaf()) return false;
  }
  return true;
}

std::size_t ParseTree::node_count() const {
  std::size_t n = 1;
  for (const ParseTree &c : children) n += c.node_count();
  return n;
}

ParseTree parse_bracketed(std::string_view text) {
  return BracketParser(text).parse();
}

std::string to_bracketed(const ParseTree &tree) {
  std::string out;
  write(tree, out);
  return out;
}

ParseTree heuristic_tree(std::span<const Token> tokens,
                         std::span<const ClauseSpan> clauses,
                         EntityPair entities) {
  ParseTree root{"S", {}};
  for (const ClauseSpan &clause : clauses) {
    ParseTree cl{"CL", {}};
    std::size_t i = clause.tokens.begin;
    while (i < clause.tokens.end) {
      const bool in_snp = entities.snp.contains(i);
      const bool in_phen = !in_snp && entities.phenotype.contains(i);
      if (!in_snp && !in_phen) {
        cl.children.push_back(preterminal(tokens[i]));
        ++i;
        continue;
      }
      const TokenRange group = in_snp ? entities.snp : entities.phenotype;
      ParseTree entity{in_snp ? "SNP" : "PHEN", {}};
      while (i < clause.tokens.end && group.contains(i)) {
        entity.children.push_back(preterminal(tokens[i]));
        ++i;
      }
      cl.children.push_back(std::move(entity));
    }
    root.children.push_back(std::move(cl));
  }
  return root;
}

double subtree_kernel_raw(const ParseTree &a, const ParseTree &b,
                          double lambda) {
  FlatTree fa;
  FlatTree fb;
  flatten(a, fa);
  flatten(b, fb);
  const std::size_t na = fa.production.size();
  const std::size_t nb = fb.production.size();
  if (na == 0 || nb == 0) return 0.0;

  std::unordered_map<std::string_view, std::vector<std::size_t>> by_production;
  for (std::size_t j = 0; j < nb; ++j) {
    by_production[fb.production[j]].push_back(j);
  }
  // Post-order guarantees children are filled before their parents.
  std::vector<double> delta(na * nb, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    const auto it = by_production.find(fa.production[i]);
    if (it == by_production.end()) continue;
    for (std::size_t j : it->second) {
      double d = lambda;
      if (!fa.preterminal[i]) {
        const std::vector<long> &ca = fa.children[i];
        const std::vector<long> &cb = fb.children[j];
        for (std::size_t c = 0; c < ca.size(); ++c) {
          if (ca[c] < 0 || cb[c] < 0) continue;
          d *= 1.0 + delta[static_cast<std::size_t>(ca[c]) * nb +
                           static_cast<std::size_t>(cb[c])];
        }
      }
      delta[i * nb + j] = d;
      total += d;
    }
  }
  return total;
}

double kernel_subtree(const ParseTree &a, const ParseTree &b, double lambda) {
  const double kaa = subtree_kernel_raw(a, a, lambda);
  const double kbb = subtree_kernel_raw(b, b, lambda);
  if (kaa <= 0.0 || kbb <= 0.0) return 0.0;
  return subtree_kernel_raw(a, b, lambda) / std::sqrt(kaa * kbb);
}

TreeSidecar load_tree_sidecar(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open tree sidecar");
  TreeSidecar trees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (strings::trim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    const std::string locator = path.string() + ":line " + std::to_string(line_no);
    if (tab == std::string::npos) throw ParseError(locator, "expected id<TAB>tree");
    try {
      trees[std::string(strings::trim(std::string_view(line).substr(0, tab)))] =
          parse_bracketed(std::string_view(line).substr(tab + 1));
    } catch (const ParseError &e) {
      throw ParseError(locator, e.what());
    }
  }
  return trees;
}

}  // namespace snpassoc
