// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/adapt.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "adaptvqe/parallel.hpp"

namespace adaptvqe {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void apply_ansatz(CVector& psi, const AnsatzState& ansatz) {
  for (std::size_t k = 0; k < ansatz.ops.size(); ++k)
    for (const auto& t : ansatz.ops[k].terms) apply_term(psi, ansatz.n_qubits, t, ansatz.thetas[k]);
}

// Checks [H, exp(-i b S_y)] = 0 on a fixed generic vector.
void require_spin_free(const System& system) {
  StateVector v(system.n_qubits());
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] = cplx(std::sin(0.37 * i + 0.1), std::cos(1.13 * i));
  v.normalize();
  const double beta = 0.731;
  StateVector hv(v.n_qubits(), system.h.apply(v.amplitudes()));
  apply_spin_rotation(hv, beta);
  const StateVector rv = apply_spin_rotation(std::as_const(v), beta);
  const CVector hrv = system.h.apply(rv.amplitudes());
  double diff = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) diff = std::max(diff, std::abs(hrv[i] - hv[i]));
  if (diff > 1e-8) throw std::invalid_argument("spin projection requires a Hamiltonian commuting with S_y");
}

}  // namespace

StateVector prepare_state(const AnsatzState& ansatz) {
  if (ansatz.ops.size() != ansatz.thetas.size()) throw std::invalid_argument("ansatz angle count mismatch");
  StateVector s = StateVector::basis_state(ansatz.reference, ansatz.n_qubits);
  for (const auto& op : ansatz.ops)
    if (op.max_qubit() >= ansatz.n_qubits) throw std::invalid_argument("excitation acts outside the register");
  apply_ansatz(s.amplitudes(), ansatz);
  return s;
}

double ansatz_energy(const AnsatzState& ansatz, const SparseOperator& h, const ProjectionGrid* grid,
                     std::vector<double>* grad) {
  StateVector state = prepare_state(ansatz);
  double energy = 0.0;
  CVector lambda;
  if (grid != nullptr) {
    ProjectedEnergy pe = projected_energy_and_adjoint(h, state, *grid);
    energy = pe.energy;
    lambda = std::move(pe.lambda);
  } else {
    lambda = h.apply(state.amplitudes());
    energy = std::real(inner(state.amplitudes(), lambda));
  }
  if (grad == nullptr) return energy;

  // Adjoint sweep: peel operators off both vectors from the left.
  grad->assign(ansatz.ops.size(), 0.0);
  CVector& psi = state.amplitudes();
  const int nq = ansatz.n_qubits;
  for (std::size_t k = ansatz.ops.size(); k-- > 0;) {
    const auto& terms = ansatz.ops[k].terms;
    for (auto t = terms.rbegin(); t != terms.rend(); ++t) {
      (*grad)[k] += 2.0 * std::real(term_matrix_element(lambda, psi, nq, *t));
      apply_term(psi, nq, *t, -ansatz.thetas[k]);
      apply_term(lambda, nq, *t, -ansatz.thetas[k]);
    }
  }
  return energy;
}

std::vector<double> screen_gradients(const StateVector& state, const SparseOperator& h,
                                     const std::vector<Excitation>& pool, const ProjectionGrid* grid) {
  if (grid != nullptr) return projected_gradient(state, h, pool, *grid);
  const CVector lambda = h.apply(state.amplitudes());
  std::vector<double> out(pool.size());
  parallel_for(pool.size(), [&](std::size_t m) {
    out[m] = 2.0 * std::real(excitation_matrix_element(lambda, state.amplitudes(), state.n_qubits(), pool[m]));
  });
  return out;
}

std::size_t select_operator(const std::vector<double>& r, std::optional<std::size_t> previous) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (previous && *previous == i) continue;
    if (!best || std::abs(r[i]) > std::abs(r[*best]) + 1e-12) best = i;
  }
  if (!best) throw std::invalid_argument("no selectable operator");
  return *best;
}

VqeResult vqe_minimize(AnsatzState& ansatz, const SparseOperator& h, const ProjectionGrid* grid,
                       const BfgsOptions& options) {
  VqeResult out;
  if (ansatz.ops.empty()) {
    out.energy = ansatz_energy(ansatz, h, grid, nullptr);
    return out;
  }
  AnsatzState work = ansatz;
  const Objective fn = [&](const std::vector<double>& x, std::vector<double>& g) {
    work.thetas = x;
    return ansatz_energy(work, h, grid, &g);
  };
  const BfgsResult res = bfgs_minimize(fn, ansatz.thetas, options);
  ansatz.thetas = res.x;
  out.energy = res.f;
  out.iterations = res.iterations;
  out.converged = res.converged;
  return out;
}

void fill_state_metrics(const System& system, const StateVector& state, const Eigenpair* fci, TrajectoryRow& row) {
  row.s2 = expectation(system.s2, state);
  row.sz = expectation(system.sz, state);
  row.n = expectation(system.n, state);
  row.fidelity = fci != nullptr ? fidelity(fci->state, state) : kNaN;
}

AdaptResult run_adapt(const System& system, const AdaptOptions& options, const Eigenpair* fci) {
  const Pool pool = build_pool(options.pool, system.n_orbitals);
  std::optional<ProjectionGrid> grid;
  if (options.projection.enabled) {
    if (options.pool == PoolKind::qubit_pauli)
      throw std::invalid_argument("spin projection needs an S_z-conserving pool");
    if (system.reference_sector().two_sz != static_cast<int>(std::lround(2.0 * options.projection.m)))
      throw std::invalid_argument("reference S_z differs from the projection target m");
    require_spin_free(system);
    grid = make_projection_grid(options.projection.s, options.projection.m, options.projection.n_grid);
  }
  const ProjectionGrid* gp = grid ? &*grid : nullptr;
  const Eigenpair* oracle = options.fidelity ? fci : nullptr;

  AdaptResult result;
  result.ansatz.reference = system.reference;
  result.ansatz.n_qubits = system.n_qubits();

  auto record = [&](TrajectoryRow row, const StateVector& state, double energy) {
    row.energy = energy;
    if (gp != nullptr) {
      fill_state_metrics(system, apply_projector(state, *gp).state, oracle, row);
    } else {
      fill_state_metrics(system, state, oracle, row);
    }
    result.rows.push_back(row);
  };

  long long cnot = 0;
  int stalled = 0;
  std::optional<std::size_t> previous;
  try {
    result.state = prepare_state(result.ansatz);
    result.energy = ansatz_energy(result.ansatz, system.h, gp, nullptr);
    TrajectoryRow ref;
    ref.op = "reference";
    ref.max_grad = kNaN;
    ref.grad_norm = kNaN;
    record(ref, result.state, result.energy);

    for (int cycle = 1;; ++cycle) {
      const std::vector<double> r = screen_gradients(result.state, system.h, pool.entries, gp);
      double norm2 = 0.0, max_abs = 0.0;
      for (double v : r) {
        norm2 += v * v;
        max_abs = std::max(max_abs, std::abs(v));
      }
      const double norm = std::sqrt(norm2);
      if (norm < options.epsilon) {
        result.stopping_reason = "epsilon";
        break;
      }
      const int n_params = static_cast<int>(result.ansatz.ops.size());
      if (options.max_params >= 0 && n_params >= options.max_params) {
        result.stopping_reason = "max_params";
        break;
      }
      const std::size_t idx = select_operator(r, previous);
      const Excitation& op = pool[idx];
      if (options.max_cnot >= 0 && cnot + op.cnot_cost > options.max_cnot) {
        result.stopping_reason = "max_cnot";
        break;
      }
      result.ansatz.ops.push_back(op);
      result.ansatz.thetas.push_back(0.0);
      cnot += op.cnot_cost;
      const VqeResult vqe = vqe_minimize(result.ansatz, system.h, gp, options.optimizer);
      result.converged = result.converged && vqe.converged;
      stalled = result.energy - vqe.energy < 1e-12 ? stalled + 1 : 0;
      result.state = prepare_state(result.ansatz);
      result.energy = vqe.energy;

      TrajectoryRow row;
      row.cycle = cycle;
      row.op = op.label;
      row.max_grad = max_abs;
      row.grad_norm = norm;
      row.n_params = n_params + 1;
      row.cnot = cnot;
      row.vqe_iterations = vqe.iterations;
      row.vqe_converged = vqe.converged;
      record(row, result.state, vqe.energy);
      previous = idx;
      if (options.observer && !options.observer(result.rows.back())) {
        result.stopping_reason = "observer";
        break;
      }
      if (options.stall_cycles > 0 && stalled >= options.stall_cycles) {
        result.stopping_reason = "stalled";
        break;
      }
    }
  } catch (const std::runtime_error& e) {
    result.stopping_reason = "error";
    result.error_message = e.what();
    result.converged = false;
  }
  return result;
}

UccsdResult run_uccsd_baseline(const System& system, bool use_symmetry_screen, const BfgsOptions& options) {
  UccsdResult out;
  out.ansatz.reference = system.reference;
  out.ansatz.n_qubits = system.n_qubits();
  for (auto& e : uccsd_excitations(system.n_orbitals, system.n_alpha, system.n_beta)) {
    if (use_symmetry_screen && !irrep_allowed(e, system.orbital_irreps)) continue;
    out.ansatz.ops.push_back(std::move(e));
  }
  out.ansatz.thetas.assign(out.ansatz.ops.size(), 0.0);
  const VqeResult vqe = vqe_minimize(out.ansatz, system.h, nullptr, options);
  out.energy = vqe.energy;
  out.iterations = vqe.iterations;
  out.converged = vqe.converged;
  out.n_params = static_cast<int>(out.ansatz.ops.size());
  for (std::size_t k = 0; k < out.ansatz.ops.size(); ++k)
    if (std::abs(out.ansatz.thetas[k]) > 1e-6) {
      ++out.n_nonzero;
      out.n_cnot += out.ansatz.ops[k].cnot_cost;
    }
  return out;
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
  out << "cycle,operator,max_grad,grad_norm,energy,s2,sz,n,fidelity,n_params,cnot,vqe_iterations,vqe_converged\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%s,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%d,%lld,%d,%s\n", r.cycle,
                  r.op.c_str(), r.max_grad, r.grad_norm, r.energy, r.s2, r.sz, r.n, r.fidelity, r.n_params, r.cnot,
                  r.vqe_iterations, r.vqe_converged ? "true" : "false");
    out << buf;
  }
}

}  // namespace adaptvqe
