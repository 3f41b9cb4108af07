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

#ifndef SNPASSOC_TREE_H_
#define SNPASSOC_TREE_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/featurize.h"
#include "snpassoc/textproc.h"
#include "snpassoc/token.h"

namespace snpassoc {

struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;

  bool is_leaf() const { return children.empty(); }
  // A node whose children are all leaves.
  bool is_preterminal() const;
  std::size_t node_count() const;

  friend bool operator==(const ParseTree &, const ParseTree &) = default;
};

// Penn-style bracketed form: "(S (CL (TOK word) (TOK word)))". Throws
// ParseError on unbalanced input.
ParseTree parse_bracketed(std::string_view text);
std::string to_bracketed(const ParseTree &tree);

// Fallback tree when no parser output is supplied:
//   S -> CL per clause; CL -> TOK preterminals, with the candidate's entity
//   tokens grouped under SNP / PHEN nodes.
// Leaves are lowercased tokens; "(" and ")" become -LRB- / -RRB-.
ParseTree heuristic_tree(std::span<const Token> tokens,
                         std::span<const ClauseSpan> clauses,
                         EntityPair entities);

// Collins-Duffy subtree kernel, summed over all node pairs:
//   delta = 0 when productions differ, lambda for matching preterminals,
//   lambda * prod_j (1 + delta(child_j)) for matching internal nodes.
double subtree_kernel_raw(const ParseTree &a, const ParseTree &b,
                          double lambda = 0.4);
// raw / sqrt(raw(a,a) * raw(b,b)); 0 when either self-kernel is 0.
double kernel_subtree(const ParseTree &a, const ParseTree &b,
                      double lambda = 0.4);

// Tree sidecar file: "<candidate id>\t<bracketed tree>" per line.
using TreeSidecar = std::map<std::string, ParseTree>;
TreeSidecar load_tree_sidecar(const std::filesystem::path &path);

}  // namespace snpassoc

#endif  // SNPASSOC_TREE_H_
