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

#include "snpassoc/svm.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "rng.h"
#include "snpassoc/error.h"

namespace snpassoc {
namespace {

// Steps shorter than this count as no progress.
constexpr double kMinStep = 1e-12;
// Multipliers this close to a bound (relative to C) are put on it, so
// roundoff never leaves a bound multiplier looking free.
constexpr double kBoundSnap = 1e-9;

double snap_to_box(double a, double C) {
  if (a < kBoundSnap * C) return 0.0;
  if (a > C * (1.0 - kBoundSnap)) return C;
  return a;
}

class SmoSolver {
 public:
  SmoSolver(const GramMatrix &gram, std::span<const int> labels,
            const SmoOptions &options, SmoTrace *trace)
      : k_(gram),
        y_(labels),
        opt_(options),
        trace_(trace),
        n_(labels.size()),
        alpha_(n_, 0.0),
        error_(n_),
        rng_(options.seed) {
    for (std::size_t i = 0; i < n_; ++i) error_[i] = -y_[i];
  }

  DualSolution run() {
    DualSolution out;
    int passes_without_change = 0;
    int iteration = 0;
    bool converged = false;
    while (iteration < opt_.max_iterations) {
      ++iteration;
      std::size_t changed = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!violates(i)) continue;
        std::size_t j = static_cast<std::size_t>(rng_.below(n_ - 1));
        if (j >= i) ++j;
        if (take_step(i, j)) ++changed;
      }
      if (changed > 0) {
        passes_without_change = 0;
        continue;
      }
      if (++passes_without_change < opt_.max_passes && any_violation()) {
        continue;
      }
      if (exhaustive_sweep() > 0) {
        passes_without_change = 0;
        continue;
      }
      refit_bias();
      if (!any_violation()) {
        converged = true;
        break;
      }
      if (exhaustive_sweep() == 0) break;
      passes_without_change = 0;
    }
    out.alpha = alpha_;
    out.bias = bias_;
    out.converged = converged;
    out.passes = iteration;
    return out;
  }

 private:
  bool violates(std::size_t i) const {
    const double r = error_[i] * y_[i];
    return (r < -opt_.tol && alpha_[i] < opt_.C) ||
           (r > opt_.tol && alpha_[i] > 0.0);
  }

  bool any_violation() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (violates(i)) return true;
    }
    return false;
  }

  std::size_t exhaustive_sweep() {
    std::size_t changed = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!violates(i)) continue;
      for (std::size_t j : rng_.permutation(n_)) {
        if (j != i && take_step(i, j)) {
          ++changed;
          break;
        }
      }
    }
    return changed;
  }

  // Dual objective along the pair direction, up to a constant, with
  // alpha_j = aj and alpha_i adjusted to keep the equality constraint.
  double pair_objective(std::size_t i, std::size_t j, double aj) const {
    const double s = y_[i] * y_[j];
    const double ai = alpha_[i] + s * (alpha_[j] - aj);
    const double di = ai - alpha_[i];
    const double dj = aj - alpha_[j];
    // g_k = sum_l alpha_l y_l K_kl = E_k + y_k - b
    const double gi = error_[i] + y_[i] - bias_;
    const double gj = error_[j] + y_[j] - bias_;
    return di + dj - (di * y_[i] * gi + dj * y_[j] * gj) -
           0.5 * (di * di * k_(i, i) + dj * dj * k_(j, j) +
                  2.0 * di * dj * s * k_(i, j));
  }

  bool take_step(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const double C = opt_.C;
    const double ai = alpha_[i];
    const double aj = alpha_[j];
    const int yi = y_[i];
    const int yj = y_[j];
    double lo, hi;
    if (yi != yj) {
      lo = std::max(0.0, aj - ai);
      hi = std::min(C, C + aj - ai);
    } else {
      lo = std::max(0.0, ai + aj - C);
      hi = std::min(C, ai + aj);
    }
    if (hi - lo < kMinStep) return false;

    const double eta = k_(i, i) + k_(j, j) - 2.0 * k_(i, j);
    double aj_new;
    if (eta > 1e-12) {
      aj_new = std::clamp(aj + yj * (error_[i] - error_[j]) / eta, lo, hi);
    } else {
      const double at_lo = pair_objective(i, j, lo);
      const double at_hi = pair_objective(i, j, hi);
      if (at_lo > at_hi + kMinStep) {
        aj_new = lo;
      } else if (at_hi > at_lo + kMinStep) {
        aj_new = hi;
      } else {
        return false;
      }
      if (std::max(at_lo, at_hi) <= kMinStep) return false;
    }
    aj_new = snap_to_box(aj_new, C);
    if (std::abs(aj_new - aj) < kMinStep * (aj_new + aj + kMinStep)) {
      return false;
    }
    const double ai_new = snap_to_box(
        std::clamp(ai + yi * yj * (aj - aj_new), 0.0, C), C);

    const double di = ai_new - ai;
    const double dj = aj_new - aj;
    const double b1 =
        bias_ - error_[i] - yi * di * k_(i, i) - yj * dj * k_(i, j);
    const double b2 =
        bias_ - error_[j] - yi * di * k_(i, j) - yj * dj * k_(j, j);
    double b_new;
    if (ai_new > 0.0 && ai_new < C) {
      b_new = b1;
    } else if (aj_new > 0.0 && aj_new < C) {
      b_new = b2;
    } else {
      b_new = 0.5 * (b1 + b2);
    }
    const double db = b_new - bias_;
    for (std::size_t k = 0; k < n_; ++k) {
      error_[k] += yi * di * k_(i, k) + yj * dj * k_(j, k) + db;
    }
    alpha_[i] = ai_new;
    alpha_[j] = aj_new;
    bias_ = b_new;
    if (trace_ != nullptr) {
      trace_->objective.push_back(dual_objective(k_, y_, alpha_));
    }
    return true;
  }

  // Sets b from the free multipliers (their mean), or to the middle of the
  // interval the bound multipliers allow when none is free.
  void refit_bias() {
    double free_sum = 0.0;
    std::size_t free_count = 0;
    double lower = -HUGE_VAL;
    double upper = HUGE_VAL;
    for (std::size_t i = 0; i < n_; ++i) {
      const double g = error_[i] + y_[i] - bias_;
      const double target = y_[i] - g;  // b making y_i f(x_i) = 1
      if (alpha_[i] > 0.0 && alpha_[i] < opt_.C) {
        free_sum += target;
        ++free_count;
      } else if ((alpha_[i] == 0.0) == (y_[i] > 0)) {
        lower = std::max(lower, target);
      } else {
        upper = std::min(upper, target);
      }
    }
    double b;
    if (free_count > 0) {
      b = free_sum / static_cast<double>(free_count);
    } else if (std::isfinite(lower) && std::isfinite(upper)) {
      b = 0.5 * (lower + upper);
    } else if (std::isfinite(lower)) {
      b = lower;
    } else if (std::isfinite(upper)) {
      b = upper;
    } else {
      b = bias_;
    }
    const double db = b - bias_;
    for (double &e : error_) e += db;
    bias_ = b;
  }

  const GramMatrix &k_;
  std::span<const int> y_;
  SmoOptions opt_;
  SmoTrace *trace_;
  std::size_t n_;
  std::vector<double> alpha_;
  std::vector<double> error_;  // f(x_i) - y_i
  double bias_ = 0.0;
  Rng rng_;
};

void check_labels(std::span<const int> labels) {
  bool pos = false;
  bool neg = false;
  for (int y : labels) {
    if (y == 1) {
      pos = true;
    } else if (y == -1) {
      neg = true;
    } else {
      throw std::invalid_argument("binary labels must be +1 or -1");
    }
  }
  if (!pos || !neg) {
    throw DegenerateTrainingSet("training data needs both +1 and -1 labels");
  }
}

}  // namespace

GramMatrix::GramMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw std::invalid_argument("gram matrix size mismatch");
  }
}

GramMatrix GramMatrix::compute(const KernelSpec &spec,
                               std::span<const Payload> payloads) {
  const std::size_t n = payloads.size();
  std::vector<double> raw(n * n, 0.0);
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, n > 64 ? 16 : 1);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) {
            for (std::size_t j = i; j < n; ++j) {
              raw[i * n + j] = raw_kernel(spec, payloads[i], payloads[j]);
            }
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const std::exception_ptr &e : failures) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = normalize_kernel(spec, raw[i * n + j], raw[i * n + i],
                                        raw[j * n + j]);
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return GramMatrix(n, std::move(values));
}

double dual_objective(const GramMatrix &gram, std::span<const int> labels,
                      std::span<const double> alpha) {
  double linear = 0.0;
  double quad = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    linear += alpha[i];
    if (alpha[i] == 0.0) continue;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      quad += alpha[i] * alpha[j] * labels[i] * labels[j] * gram(i, j);
    }
  }
  return linear - 0.5 * quad;
}

DualSolution smo_solve(const GramMatrix &gram, std::span<const int> labels,
                       const SmoOptions &options, SmoTrace *trace) {
  if (!(options.C > 0.0)) throw std::invalid_argument("C must be > 0");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (gram.size() != labels.size()) {
    throw std::invalid_argument("gram matrix and labels differ in size");
  }
  check_labels(labels);
  return SmoSolver(gram, labels, options, trace).run();
}

void SvmModel::prepare() {
  self_kernels_.clear();
  if (!is_normalized(kernel.kind)) return;
  for (const Payload &p : payloads) {
    self_kernels_.push_back(raw_kernel(kernel, p, p));
  }
}

double SvmModel::decision(const Payload &x) const {
  if (const auto *v = std::get_if<SparseVector>(&x)) {
    if (!vocabulary.empty() && v->vocabulary_id != vocabulary.id()) {
      throw KernelError("example vocabulary does not match the model");
    }
  }
  const bool normalized = is_normalized(kernel.kind);
  const double self_x = normalized ? raw_kernel(kernel, x, x) : 0.0;
  double score = bias;
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    double k = raw_kernel(kernel, payloads[i], x);
    if (normalized) {
      const double self_i = i < self_kernels_.size()
                                ? self_kernels_[i]
                                : raw_kernel(kernel, payloads[i], payloads[i]);
      k = normalize_kernel(kernel, k, self_i, self_x);
    }
    score += alphas[i] * labels[i] * k;
  }
  return score;
}

SvmModel make_model(const KernelSpec &kernel, const SmoOptions &options,
                    const DualSolution &solution, std::span<const int> labels,
                    std::span<const Payload> payloads,
                    const Vocabulary &vocabulary) {
  SvmModel model;
  model.kernel = kernel;
  model.C = options.C;
  model.bias = solution.bias;
  model.vocabulary = vocabulary;
  for (std::size_t i = 0; i < solution.alpha.size(); ++i) {
    if (solution.alpha[i] <= 0.0) continue;
    model.alphas.push_back(solution.alpha[i]);
    model.labels.push_back(labels[i]);
    model.payloads.push_back(payloads[i]);
  }
  model.prepare();
  return model;
}

SvmModel smo_train(const TrainingSet &data, const KernelSpec &kernel,
                   const SmoOptions &options, const Vocabulary &vocabulary,
                   SmoTrace *trace) {
  if (data.payloads.size() != data.labels.size()) {
    throw std::invalid_argument("payload and label counts differ");
  }
  check_labels(data.labels);
  const GramMatrix gram = GramMatrix::compute(kernel, data.payloads);
  const DualSolution solution = smo_solve(gram, data.labels, options, trace);
  return make_model(kernel, options, solution, data.labels, data.payloads,
                    vocabulary);
}

std::vector<double> OvrModel::scores(const Payload &x) const {
  std::vector<double> out;
  out.reserve(models.size());
  for (const SvmModel &m : models) out.push_back(m.decision(x));
  return out;
}

int OvrModel::predict(const Payload &x) const {
  const std::vector<double> s = scores(x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < s.size(); ++c) {
    if (s[c] > s[best]) best = c;
  }
  return classes.at(best);
}

OvrModel ovr_train(std::span<const Payload> payloads,
                   std::span<const int> class_ids, const KernelSpec &kernel,
                   const SmoOptions &options, const Vocabulary &vocabulary) {
  if (payloads.size() != class_ids.size()) {
    throw std::invalid_argument("payload and label counts differ");
  }
  const std::set<int> distinct(class_ids.begin(), class_ids.end());
  if (distinct.size() < 2) {
    throw DegenerateTrainingSet("one-vs-rest training needs at least 2 classes");
  }
  const GramMatrix gram = GramMatrix::compute(kernel, payloads);
  OvrModel model;
  model.classes.assign(distinct.begin(), distinct.end());
  for (int cls : model.classes) {
    std::vector<int> y(class_ids.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = class_ids[i] == cls ? 1 : -1;
    }
    const DualSolution solution = smo_solve(gram, y, options);
    model.models.push_back(
        make_model(kernel, options, solution, y, payloads, vocabulary));
  }
  return model;
}

}  // namespace snpassoc
