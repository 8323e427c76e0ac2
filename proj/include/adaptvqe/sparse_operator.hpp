// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sparse_operator.hpp
 * @brief Compressed-row matrix of a qubit operator in the computational basis.
 *
 * Pauli strings sharing an X mask connect the same pair of basis states, so
 * they are summed per row before storage; entries that cancel are dropped.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "adaptvqe/hamiltonian.hpp"
#include "adaptvqe/types.hpp"

namespace adaptvqe {

class SparseOperator {
 public:
  SparseOperator() = default;
  // Includes the constant on the diagonal.
  explicit SparseOperator(const QubitHamiltonian& h);
  SparseOperator(const PauliSum& op, int n_qubits, double constant = 0.0);

  [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return cols_.size(); }

  // out = A * in. out is resized.
  void apply(const CVector& in, CVector& out) const;
  [[nodiscard]] CVector apply(const CVector& in) const;
  // <a|A|b>
  [[nodiscard]] cplx matrix_element(const CVector& a, const CVector& b) const;
  [[nodiscard]] cplx at(std::size_t row, std::size_t col) const;

  [[nodiscard]] bool is_hermitian(double tol = 1e-10) const;
  // True when every nonzero entry connects states with the same popcount of
  // the masked bits.
  [[nodiscard]] bool conserves_popcount(Bits mask) const;

  // Row iteration for restricted builds.
  [[nodiscard]] std::size_t row_begin(std::size_t r) const { return row_ptr_[r]; }
  [[nodiscard]] std::size_t row_end(std::size_t r) const { return row_ptr_[r + 1]; }
  [[nodiscard]] std::uint32_t col(std::size_t k) const { return cols_[k]; }
  [[nodiscard]] cplx value(std::size_t k) const { return vals_[k]; }

 private:
  void build(const PauliSum& op, double constant);

  int n_qubits_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<cplx> vals_;
};

}  // namespace adaptvqe
