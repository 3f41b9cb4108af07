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

#ifndef SNPASSOC_KERNELS_H_
#define SNPASSOC_KERNELS_H_

#include <optional>
#include <string_view>
#include <variant>

#include "snpassoc/sparse.h"
#include "snpassoc/tree.h"

namespace snpassoc {

enum class KernelKind { kLinear, kGlobalContext, kLocalContext, kSubtree };

struct KernelSpec {
  KernelKind kind = KernelKind::kLinear;
  double lambda = 0.4;  // subtree decay

  friend bool operator==(const KernelSpec &, const KernelSpec &) = default;
};

std::string_view to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(std::string_view text);

// Sparse vectors feed the linear and context kernels; trees feed the
// subtree kernel.
using Payload = std::variant<SparseVector, ParseTree>;

// Global-context kernel: the sum over the three patterns of count dot
// products, normalized to k(a,b)/sqrt(k(a,a)k(b,b)). Pattern-tagged keys
// make the per-pattern sum equal to one dot product over the full vector.
// 0 when either vector has a zero self-kernel.
double kernel_global_context(const SparseVector &a, const SparseVector &b);
// Same normalization over local-context vectors.
double kernel_local_context(const SparseVector &a, const SparseVector &b);

// Unnormalized kernel value. Throws KernelError on a payload/kernel
// mismatch, differing vocabularies, or a non-finite result.
double raw_kernel(const KernelSpec &spec, const Payload &a, const Payload &b);
bool is_normalized(KernelKind kind);
// Normalized value from raw values; pass-through for the linear kernel.
double normalize_kernel(const KernelSpec &spec, double raw, double self_a,
                        double self_b);
double evaluate_kernel(const KernelSpec &spec, const Payload &a,
                       const Payload &b);

}  // namespace snpassoc

#endif  // SNPASSOC_KERNELS_H_
