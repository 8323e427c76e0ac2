// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/optimizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace adaptvqe {

namespace {

constexpr double kC1 = 1e-4;
constexpr double kC2 = 0.9;
constexpr int kMaxLineSteps = 40;

struct Point {
  double a = 0.0;
  double f = 0.0;
  double d = 0.0;  // directional derivative
  Eigen::VectorXd g;
};

class Evaluator {
 public:
  Evaluator(const Objective& fn, BfgsResult& res) : fn_(fn), res_(res) {}

  double operator()(const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    std::vector<double> xv(x.data(), x.data() + x.size());
    std::vector<double> gv(static_cast<std::size_t>(x.size()), 0.0);
    const double f = fn_(xv, gv);
    g = Eigen::Map<Eigen::VectorXd>(gv.data(), x.size());
    ++res_.evaluations;
    if (std::isfinite(f) && (res_.x.empty() || f < res_.f)) {
      res_.x = xv;
      res_.f = f;
      res_.gradient = gv;
    }
    return f;
  }

 private:
  const Objective& fn_;
  BfgsResult& res_;
};

// Minimizer of the cubic through (a, fa, da) and (b, fb, db), or NaN.
double cubic_min(double a, double fa, double da, double b, double fb, double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  if (disc < 0) return std::numeric_limits<double>::quiet_NaN();
  const double d2 = std::copysign(std::sqrt(disc), b - a);
  return b - (b - a) * (db + d2 - d1) / (db - da + 2.0 * d2);
}

}  // namespace

BfgsResult bfgs_minimize(const Objective& fn, std::vector<double> x0, const BfgsOptions& options) {
  BfgsResult res;
  Evaluator eval(fn, res);
  const auto n = static_cast<Eigen::Index>(x0.size());
  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(x0.data(), n);
  Eigen::VectorXd g(n);
  double f = eval(x, g);
  if (n == 0) {
    res.converged = true;
    return res;
  }
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  bool fresh = true;

  for (res.iterations = 0; res.iterations < options.max_iterations; ++res.iterations) {
    if (g.norm() < options.gtol) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd p = -hinv * g;
    double d0 = g.dot(p);
    if (!(d0 < 0)) {
      hinv.setIdentity();
      fresh = true;
      p = -g;
      d0 = g.dot(p);
    }
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(f);
    auto sample = [&](double a) {
      Point pt;
      pt.a = a;
      pt.f = eval(x + a * p, pt.g);
      pt.d = pt.g.dot(p);
      return pt;
    };
    auto armijo_fails = [&](const Point& pt) { return !(pt.f <= f + kC1 * pt.a * d0 + slack); };
    auto curvature_ok = [&](const Point& pt) { return std::abs(pt.d) <= -kC2 * d0; };

    auto zoom = [&](Point lo, Point hi) -> std::optional<Point> {
      for (int k = 0; k < kMaxLineSteps; ++k) {
        double a = cubic_min(lo.a, lo.f, lo.d, hi.a, hi.f, hi.d);
        const double lo_b = std::min(lo.a, hi.a), hi_b = std::max(lo.a, hi.a);
        const double margin = 0.1 * (hi_b - lo_b);
        if (!std::isfinite(a) || a < lo_b + margin || a > hi_b - margin) a = 0.5 * (lo.a + hi.a);
        if (hi_b - lo_b < 1e-16 * std::max(1.0, hi_b)) break;
        Point pt = sample(a);
        if (armijo_fails(pt) || pt.f >= lo.f) {
          hi = pt;
        } else {
          if (curvature_ok(pt)) return pt;
          if (pt.d * (hi.a - lo.a) >= 0) hi = lo;
          lo = pt;
        }
      }
      // Accept the best sufficient-decrease point even without curvature.
      if (lo.a > 0 && !armijo_fails(lo)) return lo;
      return std::nullopt;
    };

    std::optional<Point> step;
    Point prev{0.0, f, d0, g};
    double a = fresh ? std::min(1.0, 1.0 / std::max(g.norm(), 1e-300)) : 1.0;
    for (int k = 0; k < kMaxLineSteps; ++k) {
      Point pt = sample(a);
      if (!std::isfinite(pt.f) || armijo_fails(pt) || (k > 0 && pt.f >= prev.f)) {
        step = zoom(prev, pt);
        break;
      }
      if (curvature_ok(pt)) {
        step = pt;
        break;
      }
      if (pt.d >= 0) {
        step = zoom(pt, prev);
        break;
      }
      prev = pt;
      a *= 2.0;
    }
    if (!step) {
      if (fresh) break;  // no progress even along steepest descent
      hinv.setIdentity();
      fresh = true;
      continue;
    }
    const Eigen::VectorXd s = step->a * p;
    const Eigen::VectorXd y = step->g - g;
    x += s;
    f = step->f;
    g = step->g;
    const double ys = y.dot(s);
    if (ys > 1e-14 * s.norm() * y.norm()) {
      if (fresh) hinv *= ys / y.dot(y);
      const double rho = 1.0 / ys;
      const Eigen::VectorXd hy = hinv * y;
      // (I - rho s y^T) H (I - rho y s^T) + rho s s^T, expanded.
      hinv += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) - rho * (hy * s.transpose() + s * hy.transpose());
      fresh = false;
    }
  }
  // Report the best point; converged if its gradient satisfies the tolerance.
  const double gnorm = Eigen::Map<const Eigen::VectorXd>(res.gradient.data(), n).norm();
  res.converged = gnorm < options.gtol;
  return res;
}

}  // namespace adaptvqe
