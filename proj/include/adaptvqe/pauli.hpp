// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pauli.hpp
 * @brief Pauli strings in symplectic (x, z) bitmask form and their sums.
 *
 * Qubit b carries letter X if only x has bit b, Z if only z has it, Y if
 * both do. Acting on a basis state, P|i> = i^{n_y} (-1)^{|i & z|} |i ^ x>.
 */

#pragma once

#include <map>
#include <string>
#include <utility>

#include "adaptvqe/types.hpp"

namespace adaptvqe {

struct PauliString {
  Bits x = 0;
  Bits z = 0;
  cplx coeff = 1.0;

  // Build from letters, e.g. {{3,'Y'},{0,'X'}}.
  static PauliString from_letters(const std::map<int, char>& letters, cplx coeff = 1.0);

  [[nodiscard]] std::map<int, char> letters() const;
  [[nodiscard]] char letter(int qubit) const noexcept;
  [[nodiscard]] int n_y() const noexcept { return popcount(x & z); }
  [[nodiscard]] int weight() const noexcept { return popcount(x | z); }
  [[nodiscard]] std::string label() const;

  // Phase and target of P acting on basis state |i> (coefficient excluded).
  [[nodiscard]] std::pair<cplx, Bits> act(Bits i) const noexcept;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
};

class PauliSum {
 public:
  using Key = std::pair<Bits, Bits>;
  using TermMap = std::map<Key, cplx>;

  PauliSum() = default;
  explicit PauliSum(const PauliString& s) { add(s); }
  static PauliSum identity(cplx coeff = 1.0);

  void add(const PauliString& s);
  void add(Bits x, Bits z, cplx coeff);

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] int n_qubits() const;
  [[nodiscard]] cplx coefficient(Bits x, Bits z) const;

  [[nodiscard]] PauliSum adjoint() const;
  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const;
  [[nodiscard]] bool is_anti_hermitian(double tol = 1e-12) const;
  [[nodiscard]] bool approx_equal(const PauliSum& other, double tol = 1e-12) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scalar);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  [[nodiscard]] std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace adaptvqe
