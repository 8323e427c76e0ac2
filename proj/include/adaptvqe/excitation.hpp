// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file excitation.hpp
 * @brief Excitation generators and their exact exponentials on a statevector.
 *
 * Every supported generator G is real and anti-symmetric in the
 * computational basis with at most one nonzero per column: G = E - E^T where
 * E maps each domain state |i> to s(i)|i ^ flip>. The domain is the set of
 * states with all in_mask bits set and all out_mask bits clear, and
 * s(i) = sign0 * (-1)^{|i & parity_mask|}. exp(theta G) is then a Givens
 * rotation on every pair (i, i ^ flip).
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adaptvqe/fermion_operator.hpp"
#include "adaptvqe/pauli.hpp"
#include "adaptvqe/statevector.hpp"

namespace adaptvqe {

enum class Flavor { fermionic, qubit, pauli };
enum class ExcitationKind { single, double_ };

[[nodiscard]] std::string to_string(Flavor f);

struct GeneratorTerm {
  Flavor flavor = Flavor::fermionic;
  // Ladder form E = a+_c0 a+_c1 ... a_a0 a_a1 ... for fermionic and qubit flavors.
  std::vector<int> creation;
  std::vector<int> annihilation;
  // Pauli flavor: G = i * pauli (coefficient 1, odd number of Y letters).
  std::optional<PauliString> pauli;

  Bits flip = 0;
  Bits in_mask = 0;
  Bits out_mask = 0;
  Bits parity_mask = 0;
  double sign0 = 1.0;

  [[nodiscard]] Bits support() const noexcept { return flip | in_mask | out_mask; }
  [[nodiscard]] int max_qubit() const noexcept;
  [[nodiscard]] double sign(Bits i) const noexcept { return parity(i & parity_mask) ? -sign0 : sign0; }
  [[nodiscard]] bool in_domain(Bits i) const noexcept { return (i & in_mask) == in_mask && (i & out_mask) == 0; }

  // E - E^dagger as a FermionOperator (fermionic and qubit flavors only; for
  // the qubit flavor this is the fermionic parent before Z removal).
  [[nodiscard]] FermionOperator fermion_operator() const;
  // Exact generator in Pauli form: JW image, stripped JW image, or i*P.
  [[nodiscard]] PauliSum pauli_sum() const;
};

// tau for creation {c...} and annihilation {a...} lists (literal order).
[[nodiscard]] GeneratorTerm make_ladder_term(Flavor flavor, std::vector<int> creation, std::vector<int> annihilation);
// G = i * P; P must have an odd number of Y letters.
[[nodiscard]] GeneratorTerm make_pauli_term(const PauliString& p);

struct Excitation {
  ExcitationKind kind = ExcitationKind::single;
  Flavor flavor = Flavor::fermionic;
  // Spin-orbital indices of the leading term: (p, q) or (p, q, r, s).
  std::vector<int> indices;
  // Terms sharing one angle, applied as exp(theta G_0) first.
  std::vector<GeneratorTerm> terms;
  int cnot_cost = 0;
  std::string label;

  [[nodiscard]] int max_qubit() const noexcept;
  // Whether the generator conserves particle number and S_z.
  [[nodiscard]] bool conserves_number() const;
};

// ---- kernels ----

// psi <- exp(theta G) psi.
void apply_term(CVector& psi, int n_qubits, const GeneratorTerm& g, double theta);
// out += G psi.
void accumulate_term(const CVector& psi, int n_qubits, const GeneratorTerm& g, CVector& out);
// <lambda| G |psi>, real for real-valued G structure but returned complex.
[[nodiscard]] cplx term_matrix_element(const CVector& lambda, const CVector& psi, int n_qubits, const GeneratorTerm& g);

struct ExcitationRotation {
  const Excitation* generator = nullptr;
  double theta = 0.0;
};

// Applies exp(theta G_k) for every term of the excitation in order.
void apply_excitation(StateVector& state, const Excitation& e, double theta);
[[nodiscard]] StateVector apply_excitation(const StateVector& state, const ExcitationRotation& rot);
// Sum over terms of <lambda|G_k|psi>; the exact theta derivative of the
// product form at theta = 0.
[[nodiscard]] cplx excitation_matrix_element(const CVector& lambda, const CVector& psi, int n_qubits, const Excitation& e);

}  // namespace adaptvqe
