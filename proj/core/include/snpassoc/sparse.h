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

#ifndef SNPASSOC_SPARSE_H_
#define SNPASSOC_SPARSE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snpassoc/token.h"

namespace snpassoc {

// String-keyed feature counts, before a vocabulary fixes the indices.
using FeatureBag = std::map<std::string, double>;

// Frozen, sorted feature vocabulary. Index i is the i-th key in sorted
// order, so the serialized key list fully determines the mapping.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> keys);

  // Union of all bag keys; the training-time growth path.
  static Vocabulary from_bags(std::span<const FeatureBag> bags);

  std::optional<std::uint32_t> index(std::string_view key) const;
  const std::vector<std::string> &keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  // Content hash; two vocabularies with equal ids map keys identically.
  std::uint64_t id() const { return id_; }

  friend bool operator==(const Vocabulary &a, const Vocabulary &b) {
    return a.keys_ == b.keys_;
  }

 private:
  std::vector<std::string> keys_;
  std::uint64_t id_ = 0;
};

struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;  // sorted by index
  std::uint64_t vocabulary_id = 0;

  double dot(const SparseVector &other) const;
  double squared_norm() const { return dot(*this); }
  bool empty() const { return entries.empty(); }

  friend bool operator==(const SparseVector &, const SparseVector &) = default;
};

// Keys absent from the vocabulary are dropped.
SparseVector encode(const FeatureBag &bag, const Vocabulary &vocabulary);

// Binary bag of lowercased unigrams over the whole token sequence.
FeatureBag bow_bag(std::span<const Token> tokens);
SparseVector bow_vectorize(std::span<const Token> tokens,
                           const Vocabulary &vocabulary);

}  // namespace snpassoc

#endif  // SNPASSOC_SPARSE_H_
