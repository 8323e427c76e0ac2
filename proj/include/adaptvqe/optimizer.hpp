// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file optimizer.hpp
 * @brief BFGS quasi-Newton minimizer with a strong-Wolfe line search.
 */

#pragma once

#include <functional>
#include <vector>

namespace adaptvqe {

struct BfgsOptions {
  double gtol = 1e-6;  // on the Euclidean norm of the gradient
  int max_iterations = 1000;
};

struct BfgsResult {
  std::vector<double> x;
  double f = 0.0;
  std::vector<double> gradient;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Returns f(x) and writes the gradient into grad (already sized).
using Objective = std::function<double(const std::vector<double>& x, std::vector<double>& grad)>;

// The returned point is the best one evaluated, so f never exceeds f(x0).
[[nodiscard]] BfgsResult bfgs_minimize(const Objective& fn, std::vector<double> x0, const BfgsOptions& options = {});

}  // namespace adaptvqe
