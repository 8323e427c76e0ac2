// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "adaptvqe/fermion_operator.hpp"
#include "adaptvqe/pauli.hpp"

namespace adaptvqe {

// a+_j = (X_j - iY_j)/2 Z_{<j},  a_j = (X_j + iY_j)/2 Z_{<j}.
[[nodiscard]] PauliSum jordan_wigner(const FermionOperator& op);
[[nodiscard]] PauliSum jordan_wigner_ladder(const Ladder& ladder);

// Drop every Z letter from every string, coefficients unchanged.
[[nodiscard]] PauliSum strip_z(const PauliSum& op);

}  // namespace adaptvqe
