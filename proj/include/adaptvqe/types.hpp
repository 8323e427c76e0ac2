// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace adaptvqe {

using cplx = std::complex<double>;
using Bits = std::uint64_t;
using CVector = std::vector<cplx>;

inline constexpr double kPruneTol = 1e-12;

// Interleaved spin-orbital mapping: alpha on even qubits, beta on odd.
[[nodiscard]] constexpr int so_alpha(int p) noexcept { return 2 * p; }
[[nodiscard]] constexpr int so_beta(int p) noexcept { return 2 * p + 1; }
[[nodiscard]] constexpr int spatial_of(int so) noexcept { return so >> 1; }
[[nodiscard]] constexpr int spin_of(int so) noexcept { return so & 1; }

[[nodiscard]] inline int popcount(Bits b) noexcept { return __builtin_popcountll(b); }
[[nodiscard]] inline int parity(Bits b) noexcept { return __builtin_parityll(b); }

}  // namespace adaptvqe
