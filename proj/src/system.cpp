// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/system.hpp"

#include <stdexcept>

namespace adaptvqe {

namespace {

void attach_spin_operators(System& s) {
  const SpinOperators ops = build_spin_operators(s.n_orbitals);
  s.s2 = SparseOperator(ops.s2);
  s.sz = SparseOperator(ops.sz);
  s.n = SparseOperator(ops.n);
  s.h = SparseOperator(s.hamiltonian);
}

}  // namespace

System make_molecular_system(const MolecularIntegrals& ints, std::string name) {
  ints.validate();
  if (ints.n_qubits() > 24) throw std::invalid_argument("statevector simulation limited to 24 qubits");
  System s;
  s.name = std::move(name);
  s.n_orbitals = ints.n_orbitals;
  s.n_alpha = ints.n_alpha;
  s.n_beta = ints.n_beta;
  s.reference = ints.hf_occupation();
  s.hamiltonian = build_molecular_hamiltonian(ints);
  s.orbital_irreps = ints.orbital_irreps;
  s.integrals = ints;
  attach_spin_operators(s);
  return s;
}

System make_hubbard_system(const HubbardSpec& spec, std::string name) {
  spec.validate();
  System s;
  s.name = std::move(name);
  s.n_orbitals = spec.n_sites;
  s.n_alpha = spec.n_alpha;
  s.n_beta = spec.n_beta;
  for (int i = 0; i < spec.n_alpha; ++i) s.reference |= Bits{1} << so_alpha(i);
  for (int i = 0; i < spec.n_beta; ++i) s.reference |= Bits{1} << so_beta(i);
  s.hamiltonian = build_hubbard(spec);
  attach_spin_operators(s);
  return s;
}

Eigenpair fci_ground_state(const System& system) { return exact_ground_state(system.h, system.reference_sector()); }

}  // namespace adaptvqe
