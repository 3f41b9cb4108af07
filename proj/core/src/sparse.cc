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

#include "snpassoc/sparse.h"

#include <algorithm>

#include "strings.h"

namespace snpassoc {

Vocabulary::Vocabulary(std::vector<std::string> keys) : keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  strings::Fnv1a hash;
  for (const std::string &k : keys_) hash.update_field(k);
  id_ = hash.digest();
}

Vocabulary Vocabulary::from_bags(std::span<const FeatureBag> bags) {
  std::vector<std::string> keys;
  for (const FeatureBag &bag : bags) {
    for (const auto &[key, value] : bag) keys.push_back(key);
  }
  return Vocabulary(std::move(keys));
}

std::optional<std::uint32_t> Vocabulary::index(std::string_view key) const {
  const auto it = std::lower_bound(
      keys_.begin(), keys_.end(), key,
      [](const std::string &a, std::string_view b) { return a < b; });
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys_.begin());
}

double SparseVector::dot(const SparseVector &other) const {
  double sum = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

SparseVector encode(const FeatureBag &bag, const Vocabulary &vocabulary) {
  SparseVector v;
  v.vocabulary_id = vocabulary.id();
  for (const auto &[key, value] : bag) {
    if (value == 0.0) continue;
    if (const auto idx = vocabulary.index(key)) {
      v.entries.emplace_back(*idx, value);
    }
  }
  // Bag keys are sorted and the vocabulary is sorted, so indices ascend.
  return v;
}

FeatureBag bow_bag(std::span<const Token> tokens) {
  FeatureBag bag;
  for (const Token &t : tokens) bag[t.lower] = 1.0;
  return bag;
}

SparseVector bow_vectorize(std::span<const Token> tokens,
                           const Vocabulary &vocabulary) {
  return encode(bow_bag(tokens), vocabulary);
}

}  // namespace snpassoc
