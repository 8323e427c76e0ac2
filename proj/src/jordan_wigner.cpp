// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/jordan_wigner.hpp"

#include <stdexcept>

namespace adaptvqe {

PauliSum jordan_wigner_ladder(const Ladder& ladder) {
  if (ladder.mode >= 64) throw std::invalid_argument("mode index exceeds 64 qubits");
  const Bits bit = Bits{1} << ladder.mode;
  const Bits chain = bit - 1;
  PauliSum out;
  out.add(bit, chain, 0.5);                                            // X_j Z_<j
  out.add(bit, chain | bit, ladder.dagger ? cplx(0, -0.5) : cplx(0, 0.5));  // Y_j Z_<j
  return out;
}

PauliSum jordan_wigner(const FermionOperator& op) {
  PauliSum out;
  for (const auto& [key, coeff] : op.terms()) {
    PauliSum term = PauliSum::identity(coeff);
    for (const auto& l : key) term = term * jordan_wigner_ladder(l);
    out += term;
  }
  return out;
}

PauliSum strip_z(const PauliSum& op) {
  PauliSum out;
  for (const auto& [k, c] : op.terms()) out.add(k.first, k.second & k.first, c);
  return out;
}

}  // namespace adaptvqe
