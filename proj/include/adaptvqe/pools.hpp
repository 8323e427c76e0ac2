// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pools.hpp
 * @brief Operator pools for adaptive ansatz construction and CNOT cost models.
 *
 * Spin orbitals use the interleaved mapping (alpha = 2p, beta = 2p + 1).
 * Pool entries are ordered singles first, then by index tuple, then label.
 */

#pragma once

#include <string>
#include <vector>

#include "adaptvqe/excitation.hpp"

namespace adaptvqe {

enum class PoolKind { fermionic_paired, fermionic_spin, qubit_pauli, qeb, qeb_scheme1, qeb_scheme2, qeb_scheme3 };

[[nodiscard]] std::string to_string(PoolKind kind);
// Accepts the config vocabulary, e.g. "fermionic-spin", "qeb-scheme2".
[[nodiscard]] PoolKind parse_pool_kind(const std::string& name);

struct Pool {
  PoolKind kind = PoolKind::fermionic_spin;
  int n_orbitals = 0;
  std::vector<Excitation> entries;

  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
  [[nodiscard]] const Excitation& operator[](std::size_t i) const { return entries[i]; }
};

[[nodiscard]] Pool build_pool(PoolKind kind, int n_orbitals);

// tau_q^p (p > q) and tau_rs^pq (p > q, r > s) as pool entries.
[[nodiscard]] Excitation make_single(Flavor flavor, int p, int q);
[[nodiscard]] Excitation make_double(Flavor flavor, int p, int q, int r, int s);
// G = i * P for a Pauli string with an odd number of Y letters.
[[nodiscard]] Excitation make_pauli_excitation(const PauliString& p);

[[nodiscard]] int term_cnot_cost(const GeneratorTerm& t);
// Sum of term costs.
[[nodiscard]] int cnot_cost(const Excitation& e);
// 8(p - q + r - s + 2) for a fermionic double without the parity-ladder reduction.
[[nodiscard]] int naive_cnot_cost(const Excitation& e);

// Order-independent identity of an entry, insensitive to the overall sign of
// each term (tau and -tau give the same key).
[[nodiscard]] std::string excitation_key(const Excitation& e);

// Whether the product of orbital irreps (D2h-style labels, 1-based, combined
// by XOR of label - 1) over the excitation's spatial orbitals is totally
// symmetric. Always true when no labels are given.
[[nodiscard]] bool irrep_allowed(const Excitation& e, const std::vector<int>& orbital_irreps);

// Occupied-to-virtual spin-conserving singles and doubles of the aufbau
// reference, fermionic flavor, lexicographic order.
[[nodiscard]] std::vector<Excitation> uccsd_excitations(int n_orbitals, int n_alpha, int n_beta);

}  // namespace adaptvqe
