// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "adaptvqe/hamiltonian.hpp"
#include "adaptvqe/integrals.hpp"
#include "adaptvqe/jordan_wigner.hpp"
#include "adaptvqe/spinproj.hpp"
#include "adaptvqe/system.hpp"
#include "oracles.hpp"

using namespace adaptvqe;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_sz_state(std::mt19937& rng, int n, int two_sz) {
  std::normal_distribution<double> d;
  StateVector s(n);
  for (Bits b = 0; b < s.dim(); ++b)
    if (sector_of(b).two_sz == two_sz) s[b] = cplx(d(rng), d(rng));
  s.normalize();
  return s;
}

Eigen::VectorXcd as_eigen(const StateVector& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), static_cast<Eigen::Index>(s.dim()));
}

// Lowdin projector from the S^2 spectrum: prod_{s' != s} (S^2 - s'(s'+1)) / (s(s+1) - s'(s'+1)).
Eigen::MatrixXcd lowdin_projector(int n_orb, int s) {
  const auto s2 = oracle::dense_matrix(jordan_wigner(s_squared_operator(n_orb)), 2 * n_orb);
  const auto id = Eigen::MatrixXcd::Identity(s2.rows(), s2.cols());
  Eigen::MatrixXcd p = id;
  for (int k = 0; k <= n_orb; ++k)
    if (k != s) p = p * (s2 - double(k * (k + 1)) * id) / double(s * (s + 1) - k * (k + 1));
  return p;
}

}  // namespace

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly) {
  for (int n = 1; n <= 8; ++n) {
    const auto nodes = gauss_legendre(n);
    for (std::size_t i = 1; i < nodes.size(); ++i) EXPECT_LT(nodes[i - 1].first, nodes[i].first);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double sum = 0.0;
      for (const auto& [x, w] : nodes) sum += w * std::pow(x, deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      EXPECT_NEAR(sum, exact, 1e-13) << n << " " << deg;
    }
  }
  EXPECT_THROW((void)gauss_legendre(0), std::invalid_argument);
}

TEST(WignerD, ClosedForms) {
  for (double b : {0.0, 0.3, 1.1, 2.5, kPi}) {
    EXPECT_NEAR(wigner_small_d(0, 0, 0, b), 1.0, 1e-14);
    EXPECT_NEAR(wigner_small_d(0.5, 0.5, 0.5, b), std::cos(b / 2), 1e-14);
    EXPECT_NEAR(wigner_small_d(0.5, 0.5, -0.5, b), -std::sin(b / 2), 1e-14);
    EXPECT_NEAR(wigner_small_d(1, 0, 0, b), std::cos(b), 1e-14);
    EXPECT_NEAR(wigner_small_d(1, 1, 0, b), -std::sin(b) / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(wigner_small_d(1, 1, 1, b), 0.5 * (1 + std::cos(b)), 1e-14);
    EXPECT_NEAR(wigner_small_d(2, 0, 0, b), 0.5 * (3 * std::cos(b) * std::cos(b) - 1), 1e-14);
  }
  EXPECT_THROW((void)wigner_small_d(1, 2, 0, 0.1), std::invalid_argument);
  EXPECT_THROW((void)wigner_small_d(1, 0.5, 0, 0.1), std::invalid_argument);
}

TEST(WignerD, Orthogonality) {
  const auto nodes = gauss_legendre(12);
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k) {
      double sum = 0.0;
      for (const auto& [x, w] : nodes) sum += w * wigner_small_d(j, 0, 0, std::acos(x)) * wigner_small_d(k, 0, 0, std::acos(x));
      EXPECT_NEAR(sum, j == k ? 2.0 / (2 * j + 1) : 0.0, 1e-13);
    }
}

TEST(SpinRotation, MatchesMatrixExponential) {
  std::mt19937 rng(1);
  const int n_orb = 3;
  const auto sy = oracle::dense_matrix(jordan_wigner(s_y_operator(n_orb)), 6);
  for (double beta : {0.4, 1.9}) {
    const StateVector s = random_sz_state(rng, 6, 0);
    const Eigen::VectorXcd expected = oracle::expm(cplx(0, -beta) * sy) * as_eigen(s);
    const StateVector r = apply_spin_rotation(s, beta);
    EXPECT_LT((as_eigen(r) - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Projector, RandomStatesBecomeSpinEigenstates) {
  std::mt19937 rng(2026);
  const int n = 8, n_orb = 4;
  const SpinOperators ops = build_spin_operators(n_orb);
  const SparseOperator s2(ops.s2);
  // S_max = 2 here; three nodes integrate every d^s_00 d^S_00 product exactly.
  for (int s = 0; s <= 2; ++s) {
    const ProjectionGrid grid = make_projection_grid(s, 0, 3);
    const int trials = s == 0 ? 100 : 20;
    for (int t = 0; t < trials; ++t) {
      const StateVector psi = random_sz_state(rng, n, 0);
      const ProjectedState once = apply_projector(psi, grid);
      EXPECT_NEAR(expectation(s2, once.state), s * (s + 1.0), 1e-8);
      const ProjectedState twice = apply_projector(once.state, grid);
      double diff = 0.0;
      for (std::size_t i = 0; i < psi.dim(); ++i) diff = std::max(diff, std::abs(twice.state[i] - once.state[i]));
      EXPECT_LT(diff, 1e-8);
      EXPECT_NEAR(twice.projected_norm, 1.0, 1e-8);
    }
  }
}

TEST(Projector, AgreesWithLowdinProjector) {
  std::mt19937 rng(4);
  const int n_orb = 3;
  for (int s = 0; s <= 1; ++s) {
    const Eigen::MatrixXcd p = lowdin_projector(n_orb, s);
    const ProjectionGrid grid = make_projection_grid(s, 0, 4);
    const StateVector psi = random_sz_state(rng, 6, 0);
    const CVector got = project(psi.amplitudes(), 6, grid);
    const Eigen::VectorXcd expected = p * as_eigen(psi);
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_LT(std::abs(got[i] - expected(i)), 1e-12);
  }
  // Doublet with m = 1/2 on odd electron counts.
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(64, 64);
  const auto s2 = oracle::dense_matrix(jordan_wigner(s_squared_operator(n_orb)), 6);
  const Eigen::MatrixXcd p_half = (s2 - 15.0 / 4.0 * id) / (3.0 / 4.0 - 15.0 / 4.0);
  const ProjectionGrid grid = make_projection_grid(0.5, 0.5, 3);
  const StateVector psi = random_sz_state(rng, 6, 1);
  const CVector got = project(psi.amplitudes(), 6, grid);
  const Eigen::VectorXcd expected = p_half * as_eigen(psi);
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_LT(std::abs(got[i] - expected(i)), 1e-12);
}

TEST(Projector, ProjectedEnergyMatchesDenseFormula) {
  const MolecularIntegrals ints = load_fcidump(oracle::fixture_path("water3"));
  const System sys = make_molecular_system(ints, "water3");
  std::mt19937 rng(8);
  const StateVector psi = random_sz_state(rng, 6, 0);
  const Eigen::MatrixXcd p = lowdin_projector(3, 0);
  Eigen::MatrixXcd h = oracle::dense_matrix(sys.hamiltonian.pauli, 6);
  h += sys.hamiltonian.constant * Eigen::MatrixXcd::Identity(64, 64);
  const Eigen::VectorXcd v = as_eigen(psi);
  const double expected = (v.dot(h * p * v) / v.dot(p * v)).real();
  const ProjectionGrid grid = make_projection_grid(0, 0, 4);
  EXPECT_NEAR(projected_expectation(sys.h, psi, grid), expected, 1e-11);
  const ProjectedEnergy pe = projected_energy_and_adjoint(sys.h, psi, grid);
  EXPECT_NEAR(pe.energy, expected, 1e-11);
  EXPECT_NEAR(pe.norm, v.dot(p * v).real(), 1e-12);
}

TEST(Projector, EmptyProjectionThrows) {
  // A closed-shell determinant has no triplet component.
  const ProjectionGrid grid = make_projection_grid(1, 0, 3);
  EXPECT_THROW((void)apply_projector(StateVector::basis_state("110000", 6), grid), std::runtime_error);
}
