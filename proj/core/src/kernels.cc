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

#include "snpassoc/kernels.h"

#include <cmath>

#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {
namespace {

double normalized_dot(const SparseVector &a, const SparseVector &b) {
  if (a.vocabulary_id != b.vocabulary_id) {
    throw KernelError("sparse vectors come from different vocabularies");
  }
  const double aa = a.squared_norm();
  const double bb = b.squared_norm();
  if (aa <= 0.0 || bb <= 0.0) return 0.0;
  return a.dot(b) / std::sqrt(aa * bb);
}

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kLinear: return "Linear";
    case KernelKind::kGlobalContext: return "GlobalContext";
    case KernelKind::kLocalContext: return "LocalContext";
    case KernelKind::kSubtree: return "Subtree";
  }
  return "?";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view text) {
  const std::string lower = strings::to_lower(text);
  if (lower == "linear") return KernelKind::kLinear;
  if (lower == "globalcontext") return KernelKind::kGlobalContext;
  if (lower == "localcontext") return KernelKind::kLocalContext;
  if (lower == "subtree") return KernelKind::kSubtree;
  return std::nullopt;
}

double kernel_global_context(const SparseVector &a, const SparseVector &b) {
  return normalized_dot(a, b);
}

double kernel_local_context(const SparseVector &a, const SparseVector &b) {
  return normalized_dot(a, b);
}

bool is_normalized(KernelKind kind) { return kind != KernelKind::kLinear; }

double raw_kernel(const KernelSpec &spec, const Payload &a, const Payload &b) {
  double value = 0.0;
  if (spec.kind == KernelKind::kSubtree) {
    const auto *ta = std::get_if<ParseTree>(&a);
    const auto *tb = std::get_if<ParseTree>(&b);
    if (ta == nullptr || tb == nullptr) {
      throw KernelError("subtree kernel needs tree payloads");
    }
    value = subtree_kernel_raw(*ta, *tb, spec.lambda);
  } else {
    const auto *va = std::get_if<SparseVector>(&a);
    const auto *vb = std::get_if<SparseVector>(&b);
    if (va == nullptr || vb == nullptr) {
      throw KernelError(std::string(to_string(spec.kind)) +
                        " kernel needs sparse-vector payloads");
    }
    if (va->vocabulary_id != vb->vocabulary_id) {
      throw KernelError("sparse vectors come from different vocabularies");
    }
    value = va->dot(*vb);
  }
  if (!std::isfinite(value)) throw KernelError("non-finite kernel value");
  return value;
}

double normalize_kernel(const KernelSpec &spec, double raw, double self_a,
                        double self_b) {
  if (!is_normalized(spec.kind)) return raw;
  if (self_a <= 0.0 || self_b <= 0.0) return 0.0;
  return raw / std::sqrt(self_a * self_b);
}

double evaluate_kernel(const KernelSpec &spec, const Payload &a,
                       const Payload &b) {
  const double raw = raw_kernel(spec, a, b);
  if (!is_normalized(spec.kind)) return raw;
  return normalize_kernel(spec, raw, raw_kernel(spec, a, a),
                          raw_kernel(spec, b, b));
}

}  // namespace snpassoc
