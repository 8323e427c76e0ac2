// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/spinproj.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adaptvqe {

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least one node");
  // P_n(x) and its derivative by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  std::vector<std::pair<double, double>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out[static_cast<std::size_t>(i)] = {-x, w};
    out[static_cast<std::size_t>(n - 1 - i)] = {x, w};
  }
  if (n % 2 == 1) out[static_cast<std::size_t>(n / 2)].first = 0.0;
  return out;
}

namespace {

int twice(double v, const char* what) {
  const double t = 2.0 * v;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9) throw std::invalid_argument(std::string(what) + " must be integer or half-integer");
  return static_cast<int>(r);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

double wigner_small_d(double j, double m1, double m2, double beta) {
  const int tj = twice(j, "j"), ta = twice(m1, "m1"), tb = twice(m2, "m2");
  if (tj < 0 || std::abs(ta) > tj || std::abs(tb) > tj || ((tj - ta) & 1) || ((tj - tb) & 1))
    throw std::invalid_argument("invalid angular momentum labels");
  const int jpa = (tj + ta) / 2, jma = (tj - ta) / 2, jpb = (tj + tb) / 2, jmb = (tj - tb) / 2;
  const double pref = std::sqrt(factorial(jpa) * factorial(jma) * factorial(jpb) * factorial(jmb));
  const double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);
  const int dm = (ta - tb) / 2;  // m1 - m2
  double sum = 0.0;
  for (int k = std::max(0, -dm); k <= std::min(jpb, jma); ++k) {
    const double den = factorial(jpb - k) * factorial(k) * factorial(jma - k) * factorial(k + dm);
    const double term = std::pow(c, 2 * (tj / 2.0) + (tb - ta) / 2.0 - 2 * k) * std::pow(s, 2 * k + dm);
    sum += ((k + dm) % 2 == 0 ? 1.0 : -1.0) * term / den;
  }
  return pref * sum;
}

ProjectionGrid make_projection_grid(double s, double m, int n_grid) {
  if (s < 0 || std::abs(m) > s + 1e-12) throw std::invalid_argument("projection requires |m| <= s");
  twice(s, "s");
  twice(m, "m");
  ProjectionGrid g;
  g.s = s;
  g.m = m;
  for (const auto& [x, w] : gauss_legendre(n_grid)) {
    const double b = std::acos(x);
    g.beta.push_back(b);
    g.weight.push_back((2.0 * s + 1.0) / 2.0 * w * wigner_small_d(s, m, m, b));
  }
  return g;
}

namespace {

void rotate_spins(CVector& psi, int n_qubits, double beta) {
  if (n_qubits % 2 != 0) throw std::invalid_argument("spin rotation needs an even number of qubits");
  // -i beta S_y = (beta/2) sum_p (a+_pb a_pa - a+_pa a_pb); qubits are adjacent so no parity signs.
  const double c = std::cos(beta / 2.0), s = std::sin(beta / 2.0);
  const std::size_t dim = psi.size();
  for (int p = 0; p < n_qubits / 2; ++p) {
    const std::size_t a = std::size_t{1} << (2 * p);
    const std::size_t b = a << 1;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & a) == 0 || (i & b) != 0) continue;
      const std::size_t j = i ^ a ^ b;
      const cplx ai = psi[i], aj = psi[j];
      psi[i] = c * ai - s * aj;
      psi[j] = c * aj + s * ai;
    }
  }
}

}  // namespace

void apply_spin_rotation(StateVector& state, double beta) { rotate_spins(state.amplitudes(), state.n_qubits(), beta); }

StateVector apply_spin_rotation(const StateVector& state, double beta) {
  StateVector out = state;
  apply_spin_rotation(out, beta);
  return out;
}

CVector project(const CVector& psi, int n_qubits, const ProjectionGrid& grid) {
  CVector out(psi.size(), 0.0);
  CVector work;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    work = psi;
    rotate_spins(work, n_qubits, grid.beta[g]);
    const double w = grid.weight[g];
    for (std::size_t i = 0; i < psi.size(); ++i) out[i] += w * work[i];
  }
  const int two_m = static_cast<int>(std::lround(2.0 * grid.m));
  for (std::size_t i = 0; i < out.size(); ++i)
    if (sector_of(i).two_sz != two_m) out[i] = 0.0;
  return out;
}

ProjectedState apply_projector(const StateVector& state, const ProjectionGrid& grid) {
  CVector p = project(state.amplitudes(), state.n_qubits(), grid);
  const double d = std::real(inner(state.amplitudes(), p));
  if (d < 1e-10) throw std::runtime_error("projected norm vanishes: no component with the requested spin");
  StateVector out(state.n_qubits(), std::move(p));
  out.normalize();
  return {std::move(out), d};
}

ProjectedEnergy projected_energy_and_adjoint(const SparseOperator& h, const StateVector& state,
                                             const ProjectionGrid& grid) {
  ProjectedEnergy r;
  r.projected = project(state.amplitudes(), state.n_qubits(), grid);
  r.norm = std::real(inner(state.amplitudes(), r.projected));
  if (r.norm < 1e-10) throw std::runtime_error("projected norm vanishes: no component with the requested spin");
  CVector hp = h.apply(r.projected);
  r.energy = std::real(inner(state.amplitudes(), hp)) / r.norm;
  r.lambda.resize(hp.size());
  for (std::size_t i = 0; i < hp.size(); ++i) r.lambda[i] = (hp[i] - r.energy * r.projected[i]) / r.norm;
  return r;
}

double projected_expectation(const SparseOperator& h, const StateVector& state, const ProjectionGrid& grid) {
  const CVector p = project(state.amplitudes(), state.n_qubits(), grid);
  const double d = std::real(inner(state.amplitudes(), p));
  if (d < 1e-10) throw std::runtime_error("projected norm vanishes: no component with the requested spin");
  return std::real(h.matrix_element(state.amplitudes(), p)) / d;
}

std::vector<double> projected_gradient(const StateVector& state, const SparseOperator& h,
                                       const std::vector<Excitation>& pool, const ProjectionGrid& grid) {
  const ProjectedEnergy pe = projected_energy_and_adjoint(h, state, grid);
  std::vector<double> out(pool.size());
  for (std::size_t m = 0; m < pool.size(); ++m)
    out[m] = 2.0 * std::real(excitation_matrix_element(pe.lambda, state.amplitudes(), state.n_qubits(), pool[m]));
  return out;
}

}  // namespace adaptvqe
