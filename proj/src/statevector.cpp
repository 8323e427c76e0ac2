// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/statevector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

namespace adaptvqe {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("register size outside 0..30 qubits");
  amps_.assign(std::size_t{1} << n_qubits, 0.0);
}

StateVector::StateVector(int n_qubits, CVector amplitudes) : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("register size outside 0..30 qubits");
  if (amps_.size() != (std::size_t{1} << n_qubits)) throw std::invalid_argument("amplitude count is not 2^n");
}

StateVector StateVector::basis_state(Bits bits, int n_qubits) {
  StateVector s(n_qubits);
  if (n_qubits < 64 && (bits >> n_qubits) != 0) throw std::invalid_argument("occupation exceeds register size");
  s.amps_[bits] = 1.0;
  return s;
}

StateVector StateVector::basis_state(const std::string& occupation, int n_qubits) {
  if (static_cast<int>(occupation.size()) != n_qubits)
    throw std::invalid_argument("occupation string length differs from qubit count");
  Bits bits = 0;
  for (int k = 0; k < n_qubits; ++k) {
    if (occupation[k] == '1') {
      bits |= Bits{1} << k;
    } else if (occupation[k] != '0') {
      throw std::invalid_argument("occupation string must contain only 0 and 1");
    }
  }
  return basis_state(bits, n_qubits);
}

double StateVector::norm() const { return std::sqrt(std::real(inner(amps_, amps_))); }

double StateVector::normalize() {
  const double nrm = norm();
  if (nrm < 1e-300) throw std::runtime_error("cannot normalize a zero vector");
  for (auto& a : amps_) a /= nrm;
  return nrm;
}

namespace {
constexpr char kMagic[8] = {'A', 'D', 'V', 'Q', 'S', 'V', '0', '1'};
}

void StateVector::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(kMagic, sizeof kMagic);
  const auto n = static_cast<std::uint32_t>(n_qubits_);
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(amps_.data()), static_cast<std::streamsize>(amps_.size() * sizeof(cplx)));
}

StateVector StateVector::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  char magic[8];
  std::uint32_t n = 0;
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || std::memcmp(magic, kMagic, sizeof magic) != 0) throw std::runtime_error(path + ": not a state dump");
  StateVector s(static_cast<int>(n));
  in.read(reinterpret_cast<char*>(s.amps_.data()), static_cast<std::streamsize>(s.amps_.size() * sizeof(cplx)));
  if (!in) throw std::runtime_error(path + ": truncated state dump");
  return s;
}

cplx inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("state dimensions differ");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

cplx inner(const StateVector& a, const StateVector& b) { return inner(a.amplitudes(), b.amplitudes()); }

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

double expectation(const SparseOperator& op, const StateVector& state) {
  return std::real(op.matrix_element(state.amplitudes(), state.amplitudes()));
}

double expectation(const QubitHamiltonian& op, const StateVector& state) {
  if (op.n_qubits != state.n_qubits()) throw std::invalid_argument("operator and state sizes differ");
  return expectation(SparseOperator(op), state);
}

cplx transition(const SparseOperator& op, const StateVector& bra, const StateVector& ket) {
  return op.matrix_element(bra.amplitudes(), ket.amplitudes());
}

cplx transition(const QubitHamiltonian& op, const StateVector& bra, const StateVector& ket) {
  if (op.n_qubits != bra.n_qubits() || op.n_qubits != ket.n_qubits())
    throw std::invalid_argument("operator and state sizes differ");
  return transition(SparseOperator(op), bra, ket);
}

Sector sector_of(Bits bits) {
  constexpr Bits kAlpha = 0x5555555555555555ULL;
  const int na = popcount(bits & kAlpha);
  const int nb = popcount(bits & ~kAlpha);
  return {na + nb, na - nb};
}

namespace {

// Lowest eigenpair of op restricted to the span of the listed basis states.
Eigenpair solve_block(const SparseOperator& op, const std::vector<std::uint32_t>& basis, std::size_t dense_limit) {
  const std::size_t m = basis.size();
  std::vector<std::int64_t> pos(op.dim(), -1);
  for (std::size_t k = 0; k < m; ++k) pos[basis[k]] = static_cast<std::int64_t>(k);

  StateVector out(op.n_qubits());
  if (m <= dense_limit) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t e = op.row_begin(basis[k]); e < op.row_end(basis[k]); ++e) {
        const auto c = pos[op.col(e)];
        if (c < 0) throw std::invalid_argument("operator couples the sector to its complement");
        a(static_cast<Eigen::Index>(k), c) = op.value(e);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
    for (std::size_t k = 0; k < m; ++k) out[basis[k]] = es.eigenvectors()(static_cast<Eigen::Index>(k), 0);
    return {es.eigenvalues()(0), std::move(out)};
  }

  // Lanczos with full reorthogonalization on the restricted space.
  auto apply_block = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k) {
      cplx acc = 0.0;
      for (std::size_t e = op.row_begin(basis[k]); e < op.row_end(basis[k]); ++e) {
        const auto c = pos[op.col(e)];
        if (c < 0) throw std::invalid_argument("operator couples the sector to its complement");
        acc += op.value(e) * v(c);
      }
      w(static_cast<Eigen::Index>(k)) = acc;
    }
    return w;
  };
  const std::size_t max_iter = std::min<std::size_t>(m, 400);
  std::vector<Eigen::VectorXcd> q;
  std::vector<double> alpha, beta;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(m));
  // Deterministic, generic start vector.
  for (std::size_t k = 0; k < m; ++k) v(static_cast<Eigen::Index>(k)) = 1.0 + 0.01 * std::sin(1.0 + 3.7 * k);
  v.normalize();
  double prev = std::numeric_limits<double>::infinity();
  Eigen::VectorXd ritz;
  for (std::size_t it = 0; it < max_iter; ++it) {
    q.push_back(v);
    Eigen::VectorXcd w = apply_block(v);
    alpha.push_back(std::real(v.dot(w)));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& qk : q) w -= qk * qk.dot(w);
    const double b = w.norm();
    const auto n = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      t(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const double e0 = es.eigenvalues()(0);
    const double resid = b * std::abs(es.eigenvectors()(n - 1, 0));
    ritz = es.eigenvectors().col(0);
    if (resid < 1e-11 || b < 1e-12 || (std::abs(e0 - prev) < 1e-14 && it > 20)) break;
    prev = e0;
    beta.push_back(b);
    v = w / b;
  }
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < ritz.size(); ++i) x += ritz(i) * q[static_cast<std::size_t>(i)];
  x.normalize();
  for (std::size_t k = 0; k < m; ++k) out[basis[k]] = x(static_cast<Eigen::Index>(k));
  const double energy = std::real(x.dot(apply_block(x)));
  return {energy, std::move(out)};
}

}  // namespace

Eigenpair exact_ground_state(const SparseOperator& op, std::optional<Sector> sector, std::size_t dense_limit) {
  if (!op.is_hermitian()) throw std::invalid_argument("exact_ground_state requires a Hermitian operator");
  const std::size_t n = op.dim();
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> blocks;
  if (sector) {
    auto& b = blocks[{sector->n_electrons, sector->two_sz}];
    for (std::size_t i = 0; i < n; ++i) {
      const Sector s = sector_of(i);
      if (s.n_electrons == sector->n_electrons && s.two_sz == sector->two_sz) b.push_back(static_cast<std::uint32_t>(i));
    }
    if (b.empty()) throw std::invalid_argument("requested sector is empty");
  } else {
    constexpr Bits kAlpha = 0x5555555555555555ULL;
    const bool split = op.conserves_popcount(kAlpha) && op.conserves_popcount(~kAlpha);
    for (std::size_t i = 0; i < n; ++i) {
      const Sector s = split ? sector_of(i) : Sector{};
      blocks[{s.n_electrons, s.two_sz}].push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::optional<Eigenpair> best;
  for (const auto& [key, basis] : blocks) {
    Eigenpair e = solve_block(op, basis, dense_limit);
    if (!best || e.energy < best->energy - 1e-12) best = std::move(e);
  }
  return std::move(*best);
}

Eigenpair exact_ground_state(const QubitHamiltonian& op, std::optional<Sector> sector) {
  return exact_ground_state(SparseOperator(op), sector);
}

}  // namespace adaptvqe
