// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/sparse_operator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace adaptvqe {

namespace {

struct XGroup {
  Bits x = 0;
  std::vector<Bits> z;
  std::vector<cplx> c;  // coefficient times i^{n_y}
};

cplx i_power(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

SparseOperator::SparseOperator(const QubitHamiltonian& h) : n_qubits_(h.n_qubits) { build(h.pauli, h.constant); }

SparseOperator::SparseOperator(const PauliSum& op, int n_qubits, double constant) : n_qubits_(n_qubits) {
  build(op, constant);
}

void SparseOperator::build(const PauliSum& op, double constant) {
  if (n_qubits_ < 0 || n_qubits_ > 26) throw std::invalid_argument("register size outside 0..26 qubits");
  if (op.n_qubits() > n_qubits_) throw std::invalid_argument("operator acts outside the register");
  std::map<Bits, XGroup> groups;
  for (const auto& [key, coeff] : op.terms()) {
    auto& g = groups[key.first];
    g.x = key.first;
    g.z.push_back(key.second);
    g.c.push_back(coeff * i_power(popcount(key.first & key.second)));
  }
  // std::map order puts the diagonal (x = 0) group first.
  std::vector<XGroup> order;
  for (const auto& [x, g] : groups) order.push_back(g);
  const bool has_diag_group = !order.empty() && order.front().x == 0;

  // Column pass: A|i> spreads over |i ^ x> for each X-mask group.
  const std::size_t n = dim();
  std::vector<std::size_t> col_ptr(n + 1, 0);
  std::vector<std::uint32_t> rows;
  std::vector<cplx> cvals;
  for (std::size_t i = 0; i < n; ++i) {
    col_ptr[i] = rows.size();
    if (!has_diag_group && constant != 0.0) {
      rows.push_back(static_cast<std::uint32_t>(i));
      cvals.emplace_back(constant, 0.0);
    }
    for (const auto& g : order) {
      cplx sum = g.x == 0 ? cplx(constant, 0.0) : cplx(0.0, 0.0);
      for (std::size_t k = 0; k < g.z.size(); ++k) sum += (parity(i & g.z[k]) ? -g.c[k] : g.c[k]);
      if (std::abs(sum) > 1e-14) {
        rows.push_back(static_cast<std::uint32_t>(i ^ g.x));
        cvals.push_back(sum);
      }
    }
  }
  col_ptr[n] = rows.size();

  // Transpose to row storage.
  row_ptr_.assign(n + 1, 0);
  for (auto r : rows) ++row_ptr_[r + 1];
  for (std::size_t r = 0; r < n; ++r) row_ptr_[r + 1] += row_ptr_[r];
  cols_.assign(rows.size(), 0);
  vals_.assign(rows.size(), 0.0);
  std::vector<std::size_t> fill(row_ptr_.begin(), row_ptr_.end() - 1);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = col_ptr[c]; k < col_ptr[c + 1]; ++k) {
      const std::size_t slot = fill[rows[k]]++;
      cols_[slot] = static_cast<std::uint32_t>(c);
      vals_[slot] = cvals[k];
    }
}

void SparseOperator::apply(const CVector& in, CVector& out) const {
  const std::size_t n = dim();
  if (in.size() != n) throw std::invalid_argument("state dimension does not match operator");
  out.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx acc = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += vals_[k] * in[cols_[k]];
    out[r] = acc;
  }
}

CVector SparseOperator::apply(const CVector& in) const {
  CVector out;
  apply(in, out);
  return out;
}

cplx SparseOperator::matrix_element(const CVector& a, const CVector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("state dimension does not match operator");
  cplx total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r] == cplx(0.0)) continue;
    cplx acc = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += vals_[k] * b[cols_[k]];
    total += std::conj(a[r]) * acc;
  }
  return total;
}

cplx SparseOperator::at(std::size_t row, std::size_t col) const {
  for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
    if (cols_[k] == col) return vals_[k];
  return 0.0;
}

bool SparseOperator::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (std::abs(vals_[k] - std::conj(at(cols_[k], r))) > tol) return false;
  return true;
}

bool SparseOperator::conserves_popcount(Bits mask) const {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (popcount(r & mask) != popcount(cols_[k] & mask)) return false;
  return true;
}

}  // namespace adaptvqe
