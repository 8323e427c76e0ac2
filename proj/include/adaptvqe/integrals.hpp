// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file integrals.hpp
 * @brief Molecular-orbital integrals, FCIDUMP I/O and one-body property integrals.
 *
 * Two-electron integrals are stored in chemists' notation (pq|rs) over
 * spatial orbitals. Spin-orbital accessors follow the interleaved mapping
 * (alpha = 2p, beta = 2p+1) and return physicists' <PQ|RS> = (PR|QS).
 */

#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adaptvqe {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

struct MolecularIntegrals {
  int n_orbitals = 0;
  int n_alpha = 0;
  int n_beta = 0;
  double e_core = 0.0;
  std::vector<double> h;    // n x n, row major
  std::vector<double> eri;  // n^4, (pq|rs) at ((p*n+q)*n+r)*n+s
  std::vector<int> orbital_irreps;  // optional, 1-based point-group labels
  int isym = 1;

  MolecularIntegrals() = default;
  MolecularIntegrals(int n, int na, int nb);

  [[nodiscard]] double h1(int p, int q) const { return h[p * n_orbitals + q]; }
  [[nodiscard]] double g(int p, int q, int r, int s) const {
    const int n = n_orbitals;
    return eri[((p * n + q) * n + r) * n + s];
  }
  void set_h1(int p, int q, double v);
  // Writes all eight permutations of (pq|rs).
  void set_eri(int p, int q, int r, int s, double v);

  [[nodiscard]] int n_qubits() const noexcept { return 2 * n_orbitals; }
  [[nodiscard]] int n_electrons() const noexcept { return n_alpha + n_beta; }

  // Spin-orbital one-electron integral (zero across spins).
  [[nodiscard]] double so_h(int p, int q) const;
  // <PQ|RS> = (PR|QS) with spin selection.
  [[nodiscard]] double so_g(int p, int q, int r, int s) const;
  // <PQ||RS> = <PQ|RS> - <PQ|SR>.
  [[nodiscard]] double so_anti(int p, int q, int r, int s) const;

  // Aufbau occupation: lowest n_alpha alpha and n_beta beta orbitals.
  [[nodiscard]] std::uint64_t hf_occupation() const;
  // Energy of the aufbau determinant from the integrals.
  [[nodiscard]] double hf_energy() const;

  // Throws std::invalid_argument when symmetry or electron-count invariants fail.
  void validate(double tol = 1e-10) const;
};

[[nodiscard]] MolecularIntegrals parse_fcidump(std::istream& in);
[[nodiscard]] MolecularIntegrals parse_fcidump_string(const std::string& text);
[[nodiscard]] MolecularIntegrals load_fcidump(const std::string& path);
// Canonical FCIDUMP text with unique (pq|rs) records; values printed with
// 17 significant digits so parsing reproduces them exactly.
[[nodiscard]] std::string emit_fcidump(const MolecularIntegrals& ints);

// Folds the lowest n_core spatial orbitals (doubly occupied) into e_core
// and the effective one-electron integrals.
[[nodiscard]] MolecularIntegrals freeze_core(const MolecularIntegrals& ints, int n_core);
// freeze_core followed by deletion of every orbital above the first
// n_active remaining ones.
[[nodiscard]] MolecularIntegrals active_space(const MolecularIntegrals& ints, int n_core, int n_active);

struct PropertyIntegrals {
  int n_orbitals = 0;
  std::array<std::vector<double>, 3> components;  // n x n each, symmetric
  std::array<double, 3> nuclear{0.0, 0.0, 0.0};

  [[nodiscard]] double at(int c, int p, int q) const { return components[c][p * n_orbitals + q]; }
};

[[nodiscard]] PropertyIntegrals parse_property_integrals(std::istream& in);
[[nodiscard]] PropertyIntegrals parse_property_integrals_string(const std::string& text);
[[nodiscard]] PropertyIntegrals load_property_integrals(const std::string& path);

}  // namespace adaptvqe
