// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "adaptvqe/adapt.hpp"
#include "adaptvqe/integrals.hpp"
#include "adaptvqe/optimizer.hpp"
#include "adaptvqe/spinproj.hpp"
#include "adaptvqe/system.hpp"
#include "oracles.hpp"

using namespace adaptvqe;

namespace {

StateVector random_state(std::mt19937& rng, int n, std::optional<int> two_sz) {
  std::normal_distribution<double> d;
  StateVector s(n);
  for (Bits b = 0; b < s.dim(); ++b)
    if (!two_sz || sector_of(b).two_sz == *two_sz) s[b] = cplx(d(rng), d(rng));
  s.normalize();
  return s;
}

System load_system(const std::string& name) { return make_molecular_system(load_fcidump(oracle::fixture_path(name)), name); }

double energy_of(const SparseOperator& h, const StateVector& s, const ProjectionGrid* grid) {
  return grid ? projected_expectation(h, s, *grid) : expectation(h, s);
}

// |a - b| within 1e-6 relative, with an absolute floor for near-zero entries.
void expect_rel_close(double got, double fd, const std::string& what) {
  EXPECT_LE(std::abs(got - fd), 1e-6 * std::max(std::abs(fd), 1e-3)) << what << " got " << got << " fd " << fd;
}

constexpr PoolKind kAllPools[] = {PoolKind::fermionic_paired, PoolKind::fermionic_spin, PoolKind::qubit_pauli,
                                  PoolKind::qeb, PoolKind::qeb_scheme1};

}  // namespace

TEST(Gradients, ScreeningMatchesFiniteDifferences) {
  const System sys = load_system("h4_chain_1.50");
  std::mt19937 rng(17);
  for (PoolKind kind : kAllPools) {
    const Pool pool = build_pool(kind, sys.n_orbitals);
    const StateVector psi = random_state(rng, sys.n_qubits(), std::nullopt);
    const auto r = screen_gradients(psi, sys.h, pool.entries, nullptr);
    ASSERT_EQ(r.size(), pool.size());
    for (std::size_t m = 0; m < pool.size(); m += 7) {
      const auto fd = oracle::finite_difference(
          [&](const std::vector<double>& x) {
            StateVector s = psi;
            apply_excitation(s, pool[m], x[0]);
            return expectation(sys.h, s);
          },
          {0.0});
      expect_rel_close(r[m], fd[0], pool[m].label);
    }
  }
}

TEST(Gradients, ProjectedScreeningMatchesFiniteDifferences) {
  const System sys = load_system("h4_chain_1.50");
  const ProjectionGrid grid = make_projection_grid(0, 0, 3);
  std::mt19937 rng(23);
  for (PoolKind kind : {PoolKind::fermionic_paired, PoolKind::fermionic_spin, PoolKind::qeb, PoolKind::qeb_scheme2}) {
    const Pool pool = build_pool(kind, sys.n_orbitals);
    const StateVector psi = random_state(rng, sys.n_qubits(), 0);
    const auto r = projected_gradient(psi, sys.h, pool.entries, grid);
    const auto r2 = screen_gradients(psi, sys.h, pool.entries, &grid);
    for (std::size_t m = 0; m < pool.size(); m += 5) {
      EXPECT_NEAR(r[m], r2[m], 1e-12);
      const auto fd = oracle::finite_difference(
          [&](const std::vector<double>& x) {
            StateVector s = psi;
            apply_excitation(s, pool[m], x[0]);
            return projected_expectation(sys.h, s, grid);
          },
          {0.0});
      expect_rel_close(r[m], fd[0], pool[m].label);
    }
  }
}

TEST(Gradients, AnsatzGradientMatchesFiniteDifferences) {
  const System sys = load_system("h4_chain_1.50");
  const ProjectionGrid grid = make_projection_grid(0, 0, 3);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> angle(-0.8, 0.8);
  for (PoolKind kind : kAllPools)
    for (bool projected : {false, true}) {
      if (projected && kind == PoolKind::qubit_pauli) continue;
      const Pool pool = build_pool(kind, sys.n_orbitals);
      AnsatzState a;
      a.reference = sys.reference;
      a.n_qubits = sys.n_qubits();
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int k = 0; k < 6; ++k) {
        a.ops.push_back(pool[pick(rng)]);
        a.thetas.push_back(angle(rng));
      }
      const ProjectionGrid* gp = projected ? &grid : nullptr;
      std::vector<double> grad;
      const double e = ansatz_energy(a, sys.h, gp, &grad);
      EXPECT_NEAR(e, energy_of(sys.h, prepare_state(a), gp), 1e-12);
      const auto fd = oracle::finite_difference(
          [&](const std::vector<double>& x) {
            AnsatzState b = a;
            b.thetas = x;
            return ansatz_energy(b, sys.h, gp, nullptr);
          },
          a.thetas);
      for (std::size_t k = 0; k < fd.size(); ++k)
        expect_rel_close(grad[k], fd[k], to_string(kind) + (projected ? " sp " : " ") + a.ops[k].label);
    }
}

TEST(Selection, TiesGoToLowerIndexAndPreviousIsSkipped) {
  EXPECT_EQ(select_operator({0.1, -0.5, 0.5, 0.2}, std::nullopt), 1u);
  EXPECT_EQ(select_operator({0.1, -0.5, 0.5 + 1e-14, 0.2}, std::nullopt), 1u);
  EXPECT_EQ(select_operator({0.1, -0.5, 0.5, 0.2}, 1u), 2u);
  EXPECT_EQ(select_operator({0.1, 0.3, 0.7}, 2u), 1u);
  EXPECT_THROW((void)select_operator({0.4}, 0u), std::invalid_argument);
}

TEST(Optimizer, MinimizesRosenbrock) {
  const Objective rosen = [](const std::vector<double>& x, std::vector<double>& g) {
    const double a = 1.0 - x[0], b = x[1] - x[0] * x[0];
    g[0] = -2.0 * a - 400.0 * x[0] * b;
    g[1] = 200.0 * b;
    return a * a + 100.0 * b * b;
  };
  BfgsOptions opt;
  opt.gtol = 1e-10;
  const BfgsResult r = bfgs_minimize(rosen, {-1.2, 1.0}, opt);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
  EXPECT_NEAR(r.x[1], 1.0, 1e-8);
  EXPECT_LE(r.f, 24.2);
}

TEST(Adapt, H2ConvergesToFci) {
  const System sys = load_system("h2_0.74");
  const Eigenpair fci = fci_ground_state(sys);
  AdaptOptions opt;
  opt.epsilon = 1e-6;
  const AdaptResult r = run_adapt(sys, opt, &fci);
  EXPECT_EQ(r.stopping_reason, "epsilon");
  EXPECT_NEAR(r.energy, fci.energy, 1e-8);
  ASSERT_GE(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].op, "reference");
  EXPECT_TRUE(std::isnan(r.rows[0].max_grad));
  EXPECT_EQ(r.rows[0].n_params, 0);
  EXPECT_NEAR(r.rows.back().fidelity, 1.0, 1e-8);
  EXPECT_NEAR(r.rows.back().n, 2.0, 1e-10);
}

TEST(Adapt, BudgetCapsStopBeforeAddingOperators) {
  const System sys = load_system("h4_chain_1.50");
  AdaptOptions opt;
  opt.max_cnot = 0;
  const AdaptResult a = run_adapt(sys, opt);
  EXPECT_EQ(a.stopping_reason, "max_cnot");
  EXPECT_EQ(a.rows.size(), 1u);
  EXPECT_TRUE(std::isnan(a.rows[0].fidelity));
  opt.max_cnot = -1;
  opt.max_params = 2;
  const AdaptResult b = run_adapt(sys, opt);
  EXPECT_EQ(b.stopping_reason, "max_params");
  EXPECT_EQ(b.rows.size(), 3u);
  EXPECT_EQ(b.ansatz.ops.size(), 2u);
  for (std::size_t k = 1; k < b.rows.size(); ++k) EXPECT_LE(b.rows[k].energy, b.rows[k - 1].energy + 1e-12);
}

TEST(Adapt, ProjectionRejectsIncompatibleSettings) {
  const System sys = load_system("h2_0.74");
  AdaptOptions opt;
  opt.projection.enabled = true;
  opt.pool = PoolKind::qubit_pauli;
  EXPECT_THROW((void)run_adapt(sys, opt), std::invalid_argument);
  opt.pool = PoolKind::qeb;
  opt.projection.m = 1.0;
  EXPECT_THROW((void)run_adapt(sys, opt), std::invalid_argument);
}

TEST(Adapt, ProjectedRunReachesFci) {
  const System sys = load_system("h4_chain_1.50");
  const Eigenpair fci = fci_ground_state(sys);
  AdaptOptions opt;
  opt.pool = PoolKind::qeb;
  opt.projection.enabled = true;
  opt.projection.n_grid = 3;
  opt.epsilon = 1e-6;
  const AdaptResult r = run_adapt(sys, opt, &fci);
  EXPECT_EQ(r.stopping_reason, "epsilon");
  EXPECT_NEAR(r.energy, fci.energy, 1e-7);
  for (const auto& row : r.rows) EXPECT_NEAR(row.s2, 0.0, 1e-8);
}

TEST(Adapt, TrajectoryIsDeterministic) {
  const System sys = load_system("h4_chain_1.50");
  const Eigenpair fci = fci_ground_state(sys);
  AdaptOptions opt;
  opt.pool = PoolKind::qeb;
  opt.max_params = 6;
  std::ostringstream a, b;
  write_trajectory_csv(a, run_adapt(sys, opt, &fci).rows);
  write_trajectory_csv(b, run_adapt(sys, opt, &fci).rows);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "cycle,operator,max_grad,grad_norm,energy,s2,sz,n,fidelity,n_params,cnot,vqe_iterations,vqe_converged");
}

TEST(Uccsd, ReachesNearFciOnH2AndH4) {
  for (const char* name : {"h2_0.74", "h4_chain_1.50"}) {
    const System sys = load_system(name);
    const double fci = fci_ground_state(sys).energy;
    const UccsdResult u = run_uccsd_baseline(sys, true);
    EXPECT_TRUE(u.converged);
    EXPECT_LE(u.energy, sys.integrals->hf_energy() + 1e-12);
    EXPECT_NEAR(u.energy, fci, std::string(name) == "h2_0.74" ? 1e-9 : 5e-3) << name;
    EXPECT_LE(u.n_nonzero, u.n_params);
  }
}

TEST(Adapt, UnreachableEpsilonStopsAsStalled) {
  const System sys = load_system("h2_0.74");
  AdaptOptions opt;
  opt.epsilon = 0.0;
  opt.stall_cycles = 3;
  const AdaptResult r = run_adapt(sys, opt);
  EXPECT_EQ(r.stopping_reason, "stalled");
  EXPECT_LT(r.rows.size(), 20u);
}
