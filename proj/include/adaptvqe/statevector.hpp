// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file statevector.hpp
 * @brief Dense 2^n amplitude register and exact-diagonalization oracle.
 *
 * Basis ordering is little-endian: bit b of an amplitude index is the
 * occupation of qubit b.
 */

#pragma once

#include <optional>
#include <string>

#include "adaptvqe/sparse_operator.hpp"
#include "adaptvqe/types.hpp"

namespace adaptvqe {

class StateVector {
 public:
  StateVector() = default;
  // All-zero amplitudes; callers fill and normalize.
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, CVector amplitudes);

  static StateVector basis_state(Bits bits, int n_qubits);
  // Character k of the string is the occupation ('0'/'1') of qubit k.
  static StateVector basis_state(const std::string& occupation, int n_qubits);

  [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
  [[nodiscard]] const CVector& amplitudes() const noexcept { return amps_; }
  [[nodiscard]] CVector& amplitudes() noexcept { return amps_; }
  [[nodiscard]] cplx operator[](std::size_t i) const { return amps_[i]; }
  cplx& operator[](std::size_t i) { return amps_[i]; }

  [[nodiscard]] double norm() const;
  // Returns the norm before scaling; throws on a zero vector.
  double normalize();

  // Raw dump: magic "ADVQSV01", uint32 n_qubits, 2^n little-endian complex doubles.
  void save(const std::string& path) const;
  static StateVector load(const std::string& path);

 private:
  int n_qubits_ = 0;
  CVector amps_;
};

[[nodiscard]] cplx inner(const CVector& a, const CVector& b);
[[nodiscard]] cplx inner(const StateVector& a, const StateVector& b);
[[nodiscard]] double fidelity(const StateVector& a, const StateVector& b);

[[nodiscard]] double expectation(const SparseOperator& op, const StateVector& state);
[[nodiscard]] double expectation(const QubitHamiltonian& op, const StateVector& state);
[[nodiscard]] cplx transition(const SparseOperator& op, const StateVector& bra, const StateVector& ket);
[[nodiscard]] cplx transition(const QubitHamiltonian& op, const StateVector& bra, const StateVector& ket);

// Particle number and twice the S_z eigenvalue under the interleaved mapping.
struct Sector {
  int n_electrons = 0;
  int two_sz = 0;
};

[[nodiscard]] Sector sector_of(Bits bits);

struct Eigenpair {
  double energy = 0.0;
  StateVector state;
};

// Lowest eigenpair of a Hermitian operator, optionally restricted to a
// symmetry sector. Without a sector the (N, Sz) blocks are solved one by one
// when the operator conserves both; blocks above dense_limit use Lanczos.
[[nodiscard]] Eigenpair exact_ground_state(const SparseOperator& op, std::optional<Sector> sector = std::nullopt,
                                           std::size_t dense_limit = 2000);
[[nodiscard]] Eigenpair exact_ground_state(const QubitHamiltonian& op, std::optional<Sector> sector = std::nullopt);

}  // namespace adaptvqe
