// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "adaptvqe/excitation.hpp"
#include "adaptvqe/fermion_operator.hpp"
#include "adaptvqe/jordan_wigner.hpp"
#include "adaptvqe/pools.hpp"
#include "oracles.hpp"

using namespace adaptvqe;

namespace {

FermionOperator tau(std::vector<int> cre, std::vector<int> ann) {
  LadderString ls;
  for (int c : cre) ls.push_back({c, true});
  for (int a : ann) ls.push_back({a, false});
  const FermionOperator e = FermionOperator::product(ls);
  return e - e.adjoint();
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

FermionOperator random_operator(std::mt19937& rng, int n, int terms) {
  std::uniform_int_distribution<int> mode(0, n - 1), len(1, 4), flag(0, 1);
  std::normal_distribution<double> coeff;
  FermionOperator op;
  for (int t = 0; t < terms; ++t) {
    LadderString ls;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) ls.push_back({mode(rng), flag(rng) == 1});
    op += FermionOperator::product(ls, cplx(coeff(rng), coeff(rng)));
  }
  return op;
}

}  // namespace

TEST(FermionOperator, CanonicalAnticommutators) {
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const FermionOperator a = FermionOperator::annihilate(p), c = FermionOperator::create(q);
      const FermionOperator anti = a * c + c * a;
      const FermionOperator expected = p == q ? FermionOperator::identity() : FermionOperator();
      EXPECT_TRUE(anti.approx_equal(expected)) << p << "," << q;
      const FermionOperator cc = FermionOperator::create(p) * c + c * FermionOperator::create(p);
      EXPECT_TRUE(cc.empty() || cc.approx_equal(FermionOperator()));
    }
}

TEST(FermionOperator, AdjointReversesProducts) {
  const FermionOperator e = FermionOperator::product({{3, true}, {1, false}}, cplx(0.5, 2.0));
  const FermionOperator expected = FermionOperator::product({{1, true}, {3, false}}, cplx(0.5, -2.0));
  EXPECT_TRUE(e.adjoint().approx_equal(expected));
}

TEST(JordanWigner, LaddersMatchOccupationOracle) {
  const int n = 4;
  for (int p = 0; p < n; ++p)
    for (bool dag : {true, false}) {
      const Ladder l{p, dag};
      const auto jw = oracle::dense_matrix(jordan_wigner_ladder(l), n);
      const auto direct = oracle::dense_matrix(FermionOperator::product({l}), n);
      EXPECT_LT(max_diff(jw, direct), 1e-14) << p << dag;
    }
}

TEST(JordanWigner, NumberOperatorIsHalfOneMinusZ) {
  const PauliSum n2 = jordan_wigner(FermionOperator::number(2));
  PauliSum expected = PauliSum::identity(0.5);
  expected.add(PauliString::from_letters({{2, 'Z'}}, -0.5));
  EXPECT_TRUE(n2.approx_equal(expected));
}

TEST(JordanWigner, IsAnAlgebraHomomorphism) {
  std::mt19937 rng(7);
  const int n = 5;
  for (int trial = 0; trial < 20; ++trial) {
    const FermionOperator a = random_operator(rng, n, 3), b = random_operator(rng, n, 3);
    const auto ma = oracle::dense_matrix(a, n), mb = oracle::dense_matrix(b, n);
    EXPECT_LT(max_diff(oracle::dense_matrix(a * b, n), ma * mb), 1e-11);
    EXPECT_LT(max_diff(oracle::dense_matrix(jordan_wigner(a * b), n), ma * mb), 1e-11);
  }
}

TEST(JordanWigner, PoolGeneratorsAreAntiHermitian) {
  for (PoolKind kind : {PoolKind::fermionic_spin, PoolKind::qeb, PoolKind::fermionic_paired, PoolKind::qubit_pauli}) {
    const Pool pool = build_pool(kind, 3);
    for (const auto& e : pool.entries)
      for (const auto& t : e.terms) {
        const auto m = oracle::dense_matrix(t.pauli_sum(), 6);
        EXPECT_LT((m + m.adjoint()).cwiseAbs().maxCoeff(), 1e-13) << e.label;
      }
  }
}

TEST(JordanWigner, QubitExcitationExpansion) {
  // The Z-free image of tau_{10}^{63} expands into fermionic excitations
  // carrying the parity qubits 4 and 5 as spectators.
  const int n = 7;
  const auto lhs = oracle::dense_matrix(strip_z(jordan_wigner(tau({6, 3}, {1, 0}))), n);
  const Eigen::MatrixXcd rhs = oracle::dense_matrix(tau({6, 3}, {1, 0}), n) - 2.0 * oracle::dense_matrix(tau({6, 3, 4}, {1, 0, 4}), n) -
                   2.0 * oracle::dense_matrix(tau({6, 3, 5}, {1, 0, 5}), n) -
                   4.0 * oracle::dense_matrix(tau({6, 3, 5, 4}, {1, 0, 5, 4}), n);
  EXPECT_LT(max_diff(lhs, rhs), 1e-12);
}

TEST(Pauli, ProductTable) {
  const auto x = PauliString::from_letters({{0, 'X'}});
  const auto y = PauliString::from_letters({{0, 'Y'}});
  const auto z = PauliString::from_letters({{0, 'Z'}});
  const PauliString xy = x * y;
  EXPECT_EQ(xy.letter(0), 'Z');
  EXPECT_NEAR(std::abs(xy.coeff - cplx(0, 1)), 0.0, 1e-15);
  const PauliString zz = z * z;
  EXPECT_EQ(zz.weight(), 0);
  EXPECT_NEAR(std::abs(zz.coeff - 1.0), 0.0, 1e-15);
}

TEST(Pauli, ActionMatchesDenseMatrix) {
  const auto p = PauliString::from_letters({{0, 'Y'}, {2, 'X'}, {3, 'Z'}}, 1.0);
  const auto m = oracle::dense_matrix(PauliSum(p), 4);
  for (Bits i = 0; i < 16; ++i) {
    const auto [phase, j] = p.act(i);
    EXPECT_NEAR(std::abs(m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) - phase), 0.0, 1e-15);
  }
}

TEST(Pauli, StripZRemovesOnlyZLetters) {
  PauliSum s;
  s.add(PauliString::from_letters({{0, 'X'}, {1, 'Z'}, {2, 'Y'}}, 0.25));
  const PauliSum stripped = strip_z(s);
  ASSERT_EQ(stripped.size(), 1u);
  const auto& [key, c] = *stripped.terms().begin();
  EXPECT_EQ(key.first, Bits{0b101});
  EXPECT_EQ(key.second, Bits{0b100});
  EXPECT_NEAR(std::abs(c - 0.25), 0.0, 1e-15);
}
