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

#ifndef SNPASSOC_SVM_H_
#define SNPASSOC_SVM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "snpassoc/kernels.h"
#include "snpassoc/sparse.h"

namespace snpassoc {

struct SmoOptions {
  double C = 1.0;
  double tol = 1e-3;
  // Consecutive passes without an update before the exhaustive sweep.
  int max_passes = 50;
  std::uint64_t seed = 0;
  // Hard cap on passes over the data.
  int max_iterations = 20000;
};

struct TrainingSet {
  std::vector<Payload> payloads;
  std::vector<int> labels;  // +1 / -1
};

// Square kernel matrix, row-major.
class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(std::size_t n, std::vector<double> values);
  // Evaluates every pair; rows are filled in parallel.
  static GramMatrix compute(const KernelSpec &spec,
                            std::span<const Payload> payloads);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct DualSolution {
  std::vector<double> alpha;
  double bias = 0.0;
  bool converged = false;
  int passes = 0;
};

// Per-update record of the dual objective, for diagnostics and tests.
struct SmoTrace {
  std::vector<double> objective;
};

// W(alpha) = sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij.
double dual_objective(const GramMatrix &gram, std::span<const int> labels,
                      std::span<const double> alpha);

// SMO on a precomputed kernel matrix. For each KKT violator i a partner j
// is drawn from the seeded generator; once max_passes consecutive passes
// make no progress every partner is tried in turn, and the bias is refit to
// the free multipliers before convergence is declared.
//
// Throws DegenerateTrainingSet if only one label is present and
// std::invalid_argument for C <= 0 or tol <= 0.
DualSolution smo_solve(const GramMatrix &gram, std::span<const int> labels,
                       const SmoOptions &options, SmoTrace *trace = nullptr);

struct SvmModel {
  KernelSpec kernel;
  double C = 1.0;
  double bias = 0.0;
  // Support vectors only (alpha > 0).
  std::vector<double> alphas;
  std::vector<int> labels;
  std::vector<Payload> payloads;
  Vocabulary vocabulary;

  // sum_i alpha_i y_i K(x_i, x) + bias.
  double decision(const Payload &x) const;
  // +1 when decision >= 0, else -1.
  int predict(const Payload &x) const { return decision(x) >= 0.0 ? 1 : -1; }

  // Fills the self-kernel cache used by normalized kernels. Called by the
  // trainer and the model reader; call again after editing payloads.
  void prepare();

 private:
  std::vector<double> self_kernels_;
};

SvmModel smo_train(const TrainingSet &data, const KernelSpec &kernel,
                   const SmoOptions &options, const Vocabulary &vocabulary = {},
                   SmoTrace *trace = nullptr);

// Builds a model from a solved dual over `payloads`, keeping alpha > 0.
SvmModel make_model(const KernelSpec &kernel, const SmoOptions &options,
                    const DualSolution &solution, std::span<const int> labels,
                    std::span<const Payload> payloads,
                    const Vocabulary &vocabulary);

// One-vs-rest over integer class ids. `classes` ascend; prediction is the
// argmax of the per-class decisions with ties going to the smaller id.
struct OvrModel {
  std::vector<int> classes;
  std::vector<SvmModel> models;

  std::vector<double> scores(const Payload &x) const;
  int predict(const Payload &x) const;
};

// Throws DegenerateTrainingSet with fewer than two classes.
OvrModel ovr_train(std::span<const Payload> payloads,
                   std::span<const int> class_ids, const KernelSpec &kernel,
                   const SmoOptions &options, const Vocabulary &vocabulary = {});

}  // namespace snpassoc

#endif  // SNPASSOC_SVM_H_
