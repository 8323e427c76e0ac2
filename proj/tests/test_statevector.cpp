// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <filesystem>
#include <random>

#include "adaptvqe/hamiltonian.hpp"
#include "adaptvqe/integrals.hpp"
#include "adaptvqe/sparse_operator.hpp"
#include "adaptvqe/statevector.hpp"
#include "adaptvqe/system.hpp"
#include "oracles.hpp"

using namespace adaptvqe;

namespace {

StateVector random_state(std::mt19937& rng, int n) {
  std::normal_distribution<double> d;
  StateVector s(n);
  for (auto& a : s.amplitudes()) a = cplx(d(rng), d(rng));
  s.normalize();
  return s;
}

Eigen::VectorXcd as_eigen(const CVector& v) { return Eigen::Map<const Eigen::VectorXcd>(v.data(), v.size()); }

}  // namespace

TEST(StateVector, BasisStateLayout) {
  const StateVector s = StateVector::basis_state("0110", 4);
  EXPECT_EQ(s.dim(), 16u);
  EXPECT_EQ(s[0b0110], cplx(1.0));
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_EQ(sector_of(0b0110).n_electrons, 2);
  EXPECT_EQ(sector_of(0b0110).two_sz, 0);
  EXPECT_EQ(sector_of(0b0101).two_sz, 2);
  EXPECT_THROW(StateVector(3).normalize(), std::exception);
}

TEST(SparseOperator, MatchesDenseOracle) {
  const MolecularIntegrals ints = load_fcidump(oracle::fixture_path("h4_chain_1.50"));
  const QubitHamiltonian h = build_molecular_hamiltonian(ints);
  const SparseOperator sparse(h);
  EXPECT_TRUE(sparse.is_hermitian());
  EXPECT_TRUE(sparse.conserves_popcount(0xFF));
  EXPECT_TRUE(sparse.conserves_popcount(0x55));
  Eigen::MatrixXcd dense = oracle::dense_matrix(h.pauli, 8);
  dense += h.constant * Eigen::MatrixXcd::Identity(256, 256);
  std::mt19937 rng(3);
  const StateVector v = random_state(rng, 8);
  const Eigen::VectorXcd expected = dense * as_eigen(v.amplitudes());
  EXPECT_LT((as_eigen(sparse.apply(v.amplitudes())) - expected).cwiseAbs().maxCoeff(), 1e-11);
  EXPECT_NEAR(expectation(sparse, v), (as_eigen(v.amplitudes()).adjoint() * expected)(0).real(), 1e-11);
  for (std::size_t r : {0u, 15u, 200u})
    for (std::size_t c : {0u, 15u, 51u}) EXPECT_LT(std::abs(sparse.at(r, c) - dense(r, c)), 1e-12);
}

TEST(ExactGroundState, MatchesDenseDiagonalizationInSector) {
  const MolecularIntegrals ints = load_fcidump(oracle::fixture_path("h4_chain_1.50"));
  const System sys = make_molecular_system(ints, "h4");
  Eigen::MatrixXcd dense = oracle::dense_matrix(sys.hamiltonian.pauli, 8);
  dense += sys.hamiltonian.constant * Eigen::MatrixXcd::Identity(256, 256);
  std::vector<Eigen::Index> idx;
  for (Bits b = 0; b < 256; ++b)
    if (sector_of(b).n_electrons == 4 && sector_of(b).two_sz == 0) idx.push_back(static_cast<Eigen::Index>(b));
  Eigen::MatrixXcd block(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) block(i, j) = dense(idx[i], idx[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
  const Eigenpair gs = fci_ground_state(sys);
  EXPECT_NEAR(gs.energy, es.eigenvalues()(0), 1e-10);
  EXPECT_NEAR(gs.state.norm(), 1.0, 1e-12);
  EXPECT_NEAR(expectation(sys.h, gs.state), gs.energy, 1e-10);
  // Residual of the eigenvector.
  CVector hv = sys.h.apply(gs.state.amplitudes());
  double res = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) res = std::max(res, std::abs(hv[i] - gs.energy * gs.state[i]));
  EXPECT_LT(res, 1e-8);
}

TEST(ExactGroundState, LanczosAgreesWithDense) {
  const MolecularIntegrals ints = load_fcidump(oracle::fixture_path("h4_chain_1.50"));
  const System sys = make_molecular_system(ints, "h4");
  const Sector sec{4, 0};
  const Eigenpair dense = exact_ground_state(sys.h, sec, 100000);
  const Eigenpair lanczos = exact_ground_state(sys.h, sec, 1);
  EXPECT_NEAR(dense.energy, lanczos.energy, 1e-9);
  EXPECT_NEAR(fidelity(dense.state, lanczos.state), 1.0, 1e-8);
}

TEST(StateVector, SaveLoadRoundTrip) {
  std::mt19937 rng(11);
  const StateVector s = random_state(rng, 5);
  const auto path = std::filesystem::temp_directory_path() / "adaptvqe_sv_roundtrip.bin";
  s.save(path.string());
  const StateVector t = StateVector::load(path.string());
  std::filesystem::remove(path);
  ASSERT_EQ(t.n_qubits(), 5);
  EXPECT_EQ(t.amplitudes(), s.amplitudes());
  EXPECT_THROW((void)StateVector::load("/nonexistent/state.bin"), std::exception);
}

TEST(StateVector, InnerProductConjugatesBra) {
  StateVector a(1), b(1);
  a[0] = cplx(0.0, 1.0);
  b[0] = 1.0;
  EXPECT_NEAR(std::abs(inner(a, b) - cplx(0.0, -1.0)), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(a, b), 1.0, 1e-15);
}
