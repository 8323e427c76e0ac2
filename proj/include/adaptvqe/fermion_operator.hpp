// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermion_operator.hpp
 * @brief Second-quantized operators kept in canonical normal order.
 *
 * A term is a product of ladder operators. Canonical order puts all
 * creations left of all annihilations, each block sorted by descending
 * mode index; anticommutation signs are folded into the coefficient.
 */

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adaptvqe/types.hpp"

namespace adaptvqe {

struct Ladder {
  int mode = 0;
  bool dagger = false;

  friend bool operator==(const Ladder&, const Ladder&) = default;
  friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

using LadderString = std::vector<Ladder>;

class FermionOperator {
 public:
  using TermMap = std::map<LadderString, cplx>;

  FermionOperator() = default;

  static FermionOperator identity(cplx coeff = 1.0);
  static FermionOperator create(int mode);
  static FermionOperator annihilate(int mode);
  // coeff * product of the ladders, normal ordered on insertion.
  static FermionOperator product(const LadderString& ladders, cplx coeff = 1.0);
  static FermionOperator number(int mode);

  void add_term(const LadderString& ladders, cplx coeff);

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  // Largest mode index + 1, or 0 for a scalar.
  [[nodiscard]] int n_modes() const;

  [[nodiscard]] FermionOperator adjoint() const;
  [[nodiscard]] bool is_anti_hermitian(double tol = 1e-12) const;
  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const;

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(cplx scalar);

  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
  friend FermionOperator operator*(FermionOperator a, cplx s) { return a *= s; }
  friend FermionOperator operator*(cplx s, FermionOperator a) { return a *= s; }
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

  // Termwise equality after pruning.
  [[nodiscard]] bool approx_equal(const FermionOperator& other, double tol = 1e-12) const;

  [[nodiscard]] std::string to_string() const;

 private:
  void accumulate(LadderString key, cplx coeff);

  TermMap terms_;
};

// tau_q^p = a+_p a_q - a+_q a_p, requires p > q.
[[nodiscard]] FermionOperator make_single_excitation(int p, int q);
// tau_rs^pq = a+_p a+_q a_r a_s - a+_s a+_r a_q a_p, requires p > q, r > s, (p,q) != (r,s).
[[nodiscard]] FermionOperator make_double_excitation(int p, int q, int r, int s);

[[nodiscard]] FermionOperator commutator(const FermionOperator& a, const FermionOperator& b);

}  // namespace adaptvqe
