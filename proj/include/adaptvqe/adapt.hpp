// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file adapt.hpp
 * @brief Adaptive ansatz growth, VQE with adjoint gradients, UCCSD baseline.
 *
 * Trajectory CSV columns, in order:
 *   cycle, operator, max_grad, grad_norm, energy, s2, sz, n, fidelity,
 *   n_params, cnot, vqe_iterations, vqe_converged
 * Row 0 describes the reference state. Row k describes the state after the
 * k-th operator was added and all angles re-optimized; max_grad and
 * grad_norm are from the screening that selected that operator. With
 * projection on, energy is the projected energy and s2, sz, n, fidelity
 * refer to the normalized projected state.
 */

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adaptvqe/optimizer.hpp"
#include "adaptvqe/pools.hpp"
#include "adaptvqe/spinproj.hpp"
#include "adaptvqe/system.hpp"

namespace adaptvqe {

struct TrajectoryRow {
  int cycle = 0;
  std::string op;
  double max_grad = 0.0;
  double grad_norm = 0.0;
  double energy = 0.0;
  double s2 = 0.0;
  double sz = 0.0;
  double n = 0.0;
  double fidelity = 0.0;
  int n_params = 0;
  long long cnot = 0;
  int vqe_iterations = 0;
  bool vqe_converged = true;
};

struct ProjectionOptions {
  bool enabled = false;
  double s = 0.0;
  double m = 0.0;
  int n_grid = 2;
};

struct AdaptOptions {
  PoolKind pool = PoolKind::fermionic_spin;
  ProjectionOptions projection;
  double epsilon = 1e-3;     // on the Euclidean norm of the screening gradient
  int max_params = -1;       // negative: unlimited
  // Stop with reason "stalled" after this many consecutive cycles that lower
  // the energy by less than 1e-12 (epsilon below what the optimizer resolves).
  int stall_cycles = 10;
  long long max_cnot = -1;   // negative: unlimited
  BfgsOptions optimizer;
  bool fidelity = true;      // needs the exact ground state
  // Called after every recorded row; returning false ends the run with
  // stopping reason "observer".
  std::function<bool(const TrajectoryRow&)> observer;
};

struct AnsatzState {
  std::vector<Excitation> ops;
  std::vector<double> thetas;
  Bits reference = 0;
  int n_qubits = 0;
};

// exp(theta_n A_n) ... exp(theta_1 A_1) |reference>.
[[nodiscard]] StateVector prepare_state(const AnsatzState& ansatz);

// (Projected) energy of the ansatz; fills grad with dE/dtheta when given.
double ansatz_energy(const AnsatzState& ansatz, const SparseOperator& h, const ProjectionGrid* grid,
                     std::vector<double>* grad);

// R_m = dE/dtheta_m at theta_m = 0 for appending pool entry m.
[[nodiscard]] std::vector<double> screen_gradients(const StateVector& state, const SparseOperator& h,
                                                   const std::vector<Excitation>& pool, const ProjectionGrid* grid);

// Index of the largest |R|; the entry chosen in the previous cycle is skipped.
// Values within 1e-12 of each other count as tied and the lower index wins.
[[nodiscard]] std::size_t select_operator(const std::vector<double>& r, std::optional<std::size_t> previous);

struct VqeResult {
  double energy = 0.0;
  int iterations = 0;
  bool converged = true;
};

// Optimizes ansatz.thetas in place starting from their current values.
VqeResult vqe_minimize(AnsatzState& ansatz, const SparseOperator& h, const ProjectionGrid* grid,
                       const BfgsOptions& options);


struct AdaptResult {
  std::vector<TrajectoryRow> rows;
  std::string stopping_reason;
  AnsatzState ansatz;
  StateVector state;  // unprojected ansatz state
  double energy = 0.0;
  bool converged = true;  // every inner optimization met its tolerance
  std::string error_message;
};

// fci may be null; fidelity columns are then NaN.
[[nodiscard]] AdaptResult run_adapt(const System& system, const AdaptOptions& options,
                                    const Eigenpair* fci = nullptr);

struct UccsdResult {
  double energy = 0.0;
  int n_params = 0;
  int n_nonzero = 0;
  long long n_cnot = 0;  // over parameters with |theta| > 1e-6
  int iterations = 0;
  bool converged = true;
  AnsatzState ansatz;
};

[[nodiscard]] UccsdResult run_uccsd_baseline(const System& system, bool use_symmetry_screen,
                                             const BfgsOptions& options = {});

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows);

// Metrics of a state; for projected runs pass the projected state.
void fill_state_metrics(const System& system, const StateVector& state, const Eigenpair* fci, TrajectoryRow& row);

}  // namespace adaptvqe
