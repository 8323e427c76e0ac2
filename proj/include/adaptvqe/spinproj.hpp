// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spinproj.hpp
 * @brief Spin projection by Gauss-Legendre quadrature over S_y rotations.
 *
 * For an S_z eigenstate with eigenvalue m,
 *   P = (2s+1)/2 * int_0^pi sin(b) d^s_mm(b) exp(-i b S_y) db
 * and the quadrature is taken in x = cos(b). Applying P additionally zeroes
 * amplitudes whose S_z differs from m, which is the identity on S_z
 * eigenstates and stands in for the omitted S_z rotation integrals.
 */

#pragma once

#include <utility>
#include <vector>

#include "adaptvqe/pools.hpp"
#include "adaptvqe/sparse_operator.hpp"
#include "adaptvqe/statevector.hpp"

namespace adaptvqe {

struct ProjectionGrid {
  double s = 0.0;
  double m = 0.0;
  std::vector<double> beta;
  std::vector<double> weight;

  [[nodiscard]] std::size_t size() const noexcept { return beta.size(); }
};

// Nodes and weights on [-1, 1], nodes ascending.
[[nodiscard]] std::vector<std::pair<double, double>> gauss_legendre(int n);
// Wigner small-d d^j_{m1 m2}(beta); j, m1, m2 integer or half-integer.
[[nodiscard]] double wigner_small_d(double j, double m1, double m2, double beta);

[[nodiscard]] ProjectionGrid make_projection_grid(double s, double m, int n_grid);

// exp(-i beta S_y) as a product of per-orbital rotations on qubits (2p, 2p+1).
void apply_spin_rotation(StateVector& state, double beta);
[[nodiscard]] StateVector apply_spin_rotation(const StateVector& state, double beta);

// P psi without normalization.
[[nodiscard]] CVector project(const CVector& psi, int n_qubits, const ProjectionGrid& grid);

struct ProjectedState {
  StateVector state;           // normalized P psi
  double projected_norm = 0.0;  // <psi|P|psi>
};

// Throws std::runtime_error when <psi|P|psi> < 1e-10.
[[nodiscard]] ProjectedState apply_projector(const StateVector& state, const ProjectionGrid& grid);

// <psi|H P|psi> / <psi|P|psi>; assumes [H, S_y] = 0.
[[nodiscard]] double projected_expectation(const SparseOperator& h, const StateVector& state,
                                           const ProjectionGrid& grid);

struct ProjectedEnergy {
  double energy = 0.0;
  double norm = 0.0;   // <psi|P|psi>
  CVector projected;   // P psi
  CVector lambda;      // P (H - E) psi / <psi|P|psi>
};

// Energy plus the adjoint vector whose overlap gives every first derivative:
// dE = 2 Re <lambda| d psi>.
[[nodiscard]] ProjectedEnergy projected_energy_and_adjoint(const SparseOperator& h, const StateVector& state,
                                                           const ProjectionGrid& grid);

// R_m = 2 Re <psi|(H - E) P A_m|psi> / <psi|P|psi> for every pool entry.
[[nodiscard]] std::vector<double> projected_gradient(const StateVector& state, const SparseOperator& h,
                                                     const std::vector<Excitation>& pool,
                                                     const ProjectionGrid& grid);

}  // namespace adaptvqe
