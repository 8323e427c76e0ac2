// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file system.hpp
 * @brief A simulated system: Hamiltonian, symmetry operators and reference.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adaptvqe/hamiltonian.hpp"
#include "adaptvqe/integrals.hpp"
#include "adaptvqe/sparse_operator.hpp"
#include "adaptvqe/statevector.hpp"

namespace adaptvqe {

struct System {
  std::string name;
  int n_orbitals = 0;
  int n_alpha = 0;
  int n_beta = 0;
  Bits reference = 0;
  QubitHamiltonian hamiltonian;
  SparseOperator h;
  SparseOperator s2;
  SparseOperator sz;
  SparseOperator n;
  std::vector<int> orbital_irreps;
  std::optional<MolecularIntegrals> integrals;

  [[nodiscard]] int n_qubits() const noexcept { return 2 * n_orbitals; }
  [[nodiscard]] Sector reference_sector() const { return sector_of(reference); }
  [[nodiscard]] StateVector reference_state() const { return StateVector::basis_state(reference, n_qubits()); }
};

// Aufbau reference from the integrals.
[[nodiscard]] System make_molecular_system(const MolecularIntegrals& ints, std::string name = "molecule");
// Localized reference: the first n_alpha sites carry an alpha electron and
// the first n_beta sites a beta electron.
[[nodiscard]] System make_hubbard_system(const HubbardSpec& spec, std::string name = "hubbard");

// Lowest eigenpair in the sector of the reference determinant.
[[nodiscard]] Eigenpair fci_ground_state(const System& system);

}  // namespace adaptvqe
