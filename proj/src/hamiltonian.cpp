// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "adaptvqe/jordan_wigner.hpp"

namespace adaptvqe {

QubitHamiltonian to_qubit_hamiltonian(const PauliSum& op, int n_qubits) {
  QubitHamiltonian out;
  out.n_qubits = n_qubits;
  for (const auto& [key, c] : op.terms()) {
    if (key.first == 0 && key.second == 0) {
      if (std::abs(c.imag()) > 1e-10) throw std::invalid_argument("identity coefficient is not real");
      out.constant = c.real();
    } else {
      if (static_cast<int>(std::bit_width(key.first | key.second)) > n_qubits)
        throw std::invalid_argument("operator acts outside the register");
      out.pauli.add(key.first, key.second, c);
    }
  }
  return out;
}

FermionOperator molecular_fermion_operator(const MolecularIntegrals& ints) {
  const int nq = ints.n_qubits();
  FermionOperator op = FermionOperator::identity(ints.e_core);
  for (int p = 0; p < nq; ++p)
    for (int q = 0; q < nq; ++q) {
      const double v = ints.so_h(p, q);
      if (std::abs(v) > kPruneTol) op.add_term({{p, true}, {q, false}}, v);
    }
  for (int p = 0; p < nq; ++p)
    for (int q = 0; q < nq; ++q) {
      if (p == q) continue;
      for (int r = 0; r < nq; ++r)
        for (int s = 0; s < nq; ++s) {
          if (r == s) continue;
          const double v = ints.so_g(p, q, r, s);
          if (std::abs(v) > kPruneTol) op.add_term({{p, true}, {q, true}, {s, false}, {r, false}}, 0.5 * v);
        }
    }
  return op;
}

QubitHamiltonian build_molecular_hamiltonian(const MolecularIntegrals& ints) {
  return to_qubit_hamiltonian(jordan_wigner(molecular_fermion_operator(ints)), ints.n_qubits());
}

QubitHamiltonian build_one_body_operator(const std::vector<double>& f, int n_orbitals) {
  if (static_cast<int>(f.size()) != n_orbitals * n_orbitals)
    throw std::invalid_argument("one-body matrix has the wrong size");
  FermionOperator op;
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q < n_orbitals; ++q) {
      const double v = f[p * n_orbitals + q];
      if (std::abs(v) <= kPruneTol) continue;
      op.add_term({{so_alpha(p), true}, {so_alpha(q), false}}, v);
      op.add_term({{so_beta(p), true}, {so_beta(q), false}}, v);
    }
  return to_qubit_hamiltonian(jordan_wigner(op), 2 * n_orbitals);
}

void HubbardSpec::validate() const {
  if (n_sites < 2) throw std::invalid_argument("Hubbard chain needs at least two sites");
  if (n_sites > 16) throw std::invalid_argument("Hubbard chain larger than 16 sites is not supported");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_sites || n_beta > n_sites)
    throw std::invalid_argument("Hubbard filling out of range");
}

FermionOperator hubbard_fermion_operator(const HubbardSpec& spec) {
  spec.validate();
  FermionOperator op;
  auto hop = [&](int i, int j) {
    for (int s = 0; s < 2; ++s) {
      const int a = 2 * i + s;
      const int b = 2 * j + s;
      op.add_term({{a, true}, {b, false}}, -spec.t);
      op.add_term({{b, true}, {a, false}}, -spec.t);
    }
  };
  for (int i = 0; i + 1 < spec.n_sites; ++i) hop(i, i + 1);
  if (spec.periodic && spec.n_sites > 2) hop(spec.n_sites - 1, 0);
  for (int i = 0; i < spec.n_sites; ++i)
    op += spec.u * (FermionOperator::number(so_alpha(i)) * FermionOperator::number(so_beta(i)));
  return op;
}

QubitHamiltonian build_hubbard(const HubbardSpec& spec) {
  return to_qubit_hamiltonian(jordan_wigner(hubbard_fermion_operator(spec)), 2 * spec.n_sites);
}

FermionOperator s_plus_operator(int n_orbitals) {
  FermionOperator op;
  for (int p = 0; p < n_orbitals; ++p) op.add_term({{so_alpha(p), true}, {so_beta(p), false}}, 1.0);
  return op;
}

FermionOperator s_minus_operator(int n_orbitals) {
  FermionOperator op;
  for (int p = 0; p < n_orbitals; ++p) op.add_term({{so_beta(p), true}, {so_alpha(p), false}}, 1.0);
  return op;
}

FermionOperator s_z_operator(int n_orbitals) {
  FermionOperator op;
  for (int p = 0; p < n_orbitals; ++p) {
    op += 0.5 * FermionOperator::number(so_alpha(p));
    op -= 0.5 * FermionOperator::number(so_beta(p));
  }
  return op;
}

FermionOperator s_y_operator(int n_orbitals) {
  return (s_plus_operator(n_orbitals) - s_minus_operator(n_orbitals)) * cplx(0.0, -0.5);
}

FermionOperator s_squared_operator(int n_orbitals) {
  const FermionOperator sz = s_z_operator(n_orbitals);
  return s_minus_operator(n_orbitals) * s_plus_operator(n_orbitals) + sz * (sz + FermionOperator::identity());
}

FermionOperator number_operator(int n_orbitals) {
  FermionOperator op;
  for (int p = 0; p < 2 * n_orbitals; ++p) op += FermionOperator::number(p);
  return op;
}

SpinOperators build_spin_operators(int n_orbitals) {
  if (n_orbitals < 1) throw std::invalid_argument("need at least one orbital");
  const int nq = 2 * n_orbitals;
  return {to_qubit_hamiltonian(jordan_wigner(s_squared_operator(n_orbitals)), nq),
          to_qubit_hamiltonian(jordan_wigner(s_z_operator(n_orbitals)), nq),
          to_qubit_hamiltonian(jordan_wigner(number_operator(n_orbitals)), nq)};
}

}  // namespace adaptvqe
