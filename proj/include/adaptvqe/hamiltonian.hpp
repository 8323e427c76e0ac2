// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Qubit Hamiltonians for molecules and the Hubbard chain, plus spin
 *        and number operators.
 */

#pragma once

#include "adaptvqe/fermion_operator.hpp"
#include "adaptvqe/integrals.hpp"
#include "adaptvqe/pauli.hpp"

namespace adaptvqe {

// pauli holds only non-identity strings; the identity part lives in constant.
struct QubitHamiltonian {
  PauliSum pauli;
  int n_qubits = 0;
  double constant = 0.0;

  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const { return pauli.is_hermitian(tol); }
};

// Splits the identity string into the constant; throws if that term is not real.
[[nodiscard]] QubitHamiltonian to_qubit_hamiltonian(const PauliSum& op, int n_qubits);

// Fermionic form: e_core + sum h_PQ a+_P a_Q + 1/2 sum <PQ|RS> a+_P a+_Q a_S a_R.
[[nodiscard]] FermionOperator molecular_fermion_operator(const MolecularIntegrals& ints);
[[nodiscard]] QubitHamiltonian build_molecular_hamiltonian(const MolecularIntegrals& ints);

// One-body operator sum_pq f_pq (a+_pa a_qa + a+_pb a_qb) over spatial orbitals.
[[nodiscard]] QubitHamiltonian build_one_body_operator(const std::vector<double>& f, int n_orbitals);

struct HubbardSpec {
  int n_sites = 6;
  double t = 1.0;
  double u = 8.0;
  bool periodic = true;
  int n_alpha = 3;
  int n_beta = 3;

  void validate() const;
};

// -t sum_<ij>,s (a+_is a_js + h.c.) + U sum_i n_iu n_id. The wrap bond (n-1, 0)
// is present only when periodic and n_sites > 2.
[[nodiscard]] FermionOperator hubbard_fermion_operator(const HubbardSpec& spec);
[[nodiscard]] QubitHamiltonian build_hubbard(const HubbardSpec& spec);

struct SpinOperators {
  QubitHamiltonian s2;
  QubitHamiltonian sz;
  QubitHamiltonian n;
};

[[nodiscard]] FermionOperator s_plus_operator(int n_orbitals);
[[nodiscard]] FermionOperator s_minus_operator(int n_orbitals);
[[nodiscard]] FermionOperator s_z_operator(int n_orbitals);
// S_y = (S+ - S-)/(2i).
[[nodiscard]] FermionOperator s_y_operator(int n_orbitals);
[[nodiscard]] FermionOperator s_squared_operator(int n_orbitals);
[[nodiscard]] FermionOperator number_operator(int n_orbitals);

[[nodiscard]] SpinOperators build_spin_operators(int n_orbitals);

}  // namespace adaptvqe
