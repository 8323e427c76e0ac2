// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file properties.hpp
 * @brief First-order properties with orbital response (Lagrangian / Z-vector).
 *
 * Everything here works over spin orbitals of a "full" orbital space that
 * may contain frozen-core orbitals (doubly occupied, not on the register)
 * and frozen virtuals (empty, not on the register) around the active
 * orbitals that the statevector describes. Spin-orbital index P of spatial
 * orbital p and spin s is 2p + s, as on the register.
 *
 * Orbital rotations: kappa = sum_{p>q} kappa_pq (a+_p a_q - a+_q a_p), the
 * integrals transform as h -> U h U^T with U = exp(-K). The orbital
 * gradient is R_pq = dE/dkappa_pq, which equals the adaptive-screening
 * gradient of the single excitation (p <- q). Only same-spin rotations are
 * included.
 */

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "adaptvqe/integrals.hpp"
#include "adaptvqe/sparse_operator.hpp"
#include "adaptvqe/spinproj.hpp"
#include "adaptvqe/statevector.hpp"

namespace adaptvqe {

struct SpinDensities {
  int n_so = 0;
  std::vector<double> d1;  // <a+_p a_q> at p*n+q
  std::vector<double> d2;  // <a+_p a+_q a_s a_r> at ((p*n+q)*n+r)*n+s

  [[nodiscard]] double one(int p, int q) const { return d1[static_cast<std::size_t>(p) * n_so + q]; }
  [[nodiscard]] double two(int p, int q, int r, int s) const {
    const std::size_t n = n_so;
    return d2[((p * n + q) * n + r) * n + s];
  }
  [[nodiscard]] double trace() const;
};

// Re<bra|op|ket> / Re<bra|ket>, symmetrized under bra-ket exchange of the
// operator (D_pq = D_qp, D_pq,rs = D_rs,pq). Register limit: 14 qubits.
[[nodiscard]] SpinDensities transition_densities(const StateVector& bra, const StateVector& ket);
// Plain densities of psi, or the half-projected <psi|op P|psi>/<psi|P|psi>
// when a grid is given.
[[nodiscard]] SpinDensities state_densities(const StateVector& psi, const ProjectionGrid* grid);

struct ResponseModel {
  int n_so = 0;
  int n_core_so = 0;    // frozen-core spin orbitals come first
  int n_active_so = 0;  // then the register
  double e_core = 0.0;  // constant of the full-space Hamiltonian
  std::vector<double> h;     // n_so^2
  std::vector<double> anti;  // <pq||rs>, n_so^4
  std::vector<char> occupied;  // reference determinant

  [[nodiscard]] double h1(int p, int q) const { return h[static_cast<std::size_t>(p) * n_so + q]; }
  [[nodiscard]] double g(int p, int q, int r, int s) const {
    const std::size_t n = n_so;
    return anti[((p * n + q) * n + r) * n + s];
  }
  [[nodiscard]] bool is_active(int p) const { return p >= n_core_so && p < n_core_so + n_active_so; }
  [[nodiscard]] int n_electrons() const;
};

// Full space = all orbitals of `full`; the register holds orbitals
// [n_core, n_core + n_active). n_active < 0 means all remaining orbitals.
[[nodiscard]] ResponseModel make_response_model(const MolecularIntegrals& full, int n_core = 0, int n_active = -1);

// Active-space densities embedded in the full space with the frozen core
// doubly occupied.
[[nodiscard]] SpinDensities embed_densities(const ResponseModel& model, const SpinDensities& active);

// e_core + sum h D + 1/4 sum <pq||rs> D_pq,rs.
[[nodiscard]] double energy_from_densities(const ResponseModel& model, const SpinDensities& d);

// F_pq = h_pq + sum_i <pi||qi> over the reference occupation; n_so^2.
[[nodiscard]] std::vector<double> build_fock(const ResponseModel& model);

struct OrbitalGradient {
  int n_so = 0;
  std::vector<double> r;  // antisymmetric, n_so^2

  [[nodiscard]] double at(int p, int q) const { return r[static_cast<std::size_t>(p) * n_so + q]; }
  [[nodiscard]] double max_abs() const;
};

// R from full-space densities for every pair: R = 2 (G - G^T) with the
// generalized Fock matrix G_pq = sum_r h_pr D_qr + 1/2 sum_rst <pr||st> D_qr,st.
[[nodiscard]] OrbitalGradient density_orbital_gradient(const ResponseModel& model, const SpinDensities& full);

// Active-active block from statevector gradients of single excitations
// (projected when grid is given); blocks touching frozen orbitals from the
// density contraction.
[[nodiscard]] OrbitalGradient compute_orbital_gradient(const ResponseModel& model, const SpinDensities& full,
                                                       const StateVector& psi, const SparseOperator& h_active,
                                                       const ProjectionGrid* grid);

enum class RotationBlock { virtual_occupied, occupied_occupied, virtual_virtual };

struct Rotation {
  int p = 0;  // p > q, same spin
  int q = 0;
  RotationBlock block = RotationBlock::virtual_occupied;
};

[[nodiscard]] std::vector<Rotation> rotation_list(const ResponseModel& model);

struct AMatrix {
  std::vector<Rotation> rotations;
  Eigen::MatrixXd a;  // a(i, j) = A_{rotations[i], rotations[j]} = dF_pq / dkappa_rs
};

// Canonical-orbital Fock derivative: blocks (vo,vo), (oo,vo), (vv,vo),
// (oo,oo), (vv,vv); all others zero.
[[nodiscard]] AMatrix build_a_matrix(const ResponseModel& model, const std::vector<double>& fock);

class SingularResponseError : public std::runtime_error {
 public:
  SingularResponseError(const std::string& what, double smallest_singular_value)
      : std::runtime_error(what), sigma_(smallest_singular_value) {}
  [[nodiscard]] double smallest_singular_value() const noexcept { return sigma_; }

 private:
  double sigma_;
};

struct ResponseSolution {
  int n_so = 0;
  std::vector<double> z;  // symmetric, zero diagonal, n_so^2
  double residual = 0.0;  // max |R_rs + sum z_pq A_pq,rs|
  double smallest_singular_value = 0.0;

  [[nodiscard]] double at(int p, int q) const { return z[static_cast<std::size_t>(p) * n_so + q]; }
  [[nodiscard]] double max_abs() const;
};

// Closed-form oo/vv multipliers, then the dense vo solve. Throws
// SingularResponseError on near-singular A or on degenerate orbitals with a
// non-negligible gradient.
[[nodiscard]] ResponseSolution solve_multipliers(const OrbitalGradient& r, const AMatrix& a,
                                                 const std::vector<double>& fock);

// D_pq + z_pq / 2 and D_pq,rs + (z_pr DHF_qs - z_qr DHF_ps - z_ps DHF_qr + z_qs DHF_pr) / 2.
[[nodiscard]] SpinDensities relaxed_densities(const ResponseModel& model, const SpinDensities& full,
                                              const ResponseSolution& z);

// mu_c = nuclear_c - sum_pq mu^c_pq D_pq over the full space.
[[nodiscard]] std::array<double, 3> dipole_moment(const SpinDensities& full, const PropertyIntegrals& ints);

struct PropertyReport {
  double energy = 0.0;             // from the unrelaxed densities
  double lagrangian = 0.0;         // from the relaxed densities
  std::array<double, 3> unrelaxed_dipole{};
  std::array<double, 3> relaxed_dipole{};
  double gradient_norm = 0.0;      // max |R_pq|
  double multiplier_norm = 0.0;    // max |z_pq|
  double residual = 0.0;
  double smallest_singular_value = 0.0;
};

// Whole pipeline for a register state over the active orbitals of `full`.
[[nodiscard]] PropertyReport compute_properties(const MolecularIntegrals& full, const PropertyIntegrals& dipoles,
                                                int n_core, int n_active, const StateVector& psi,
                                                const ProjectionGrid* grid);

}  // namespace adaptvqe
