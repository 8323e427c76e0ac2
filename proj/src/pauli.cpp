// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace adaptvqe {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

cplx i_pow(int k) { return kIPow[((k % 4) + 4) % 4]; }

}  // namespace

PauliString PauliString::from_letters(const std::map<int, char>& letters, cplx coeff) {
  PauliString s;
  s.coeff = coeff;
  for (const auto& [q, c] : letters) {
    if (q < 0 || q >= 64) throw std::invalid_argument("qubit index out of range");
    const Bits bit = Bits{1} << q;
    switch (c) {
      case 'X': s.x |= bit; break;
      case 'Y': s.x |= bit; s.z |= bit; break;
      case 'Z': s.z |= bit; break;
      case 'I': break;
      default: throw std::invalid_argument(std::string("unknown Pauli letter ") + c);
    }
  }
  return s;
}

char PauliString::letter(int qubit) const noexcept {
  const bool bx = (x >> qubit) & 1U;
  const bool bz = (z >> qubit) & 1U;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::map<int, char> PauliString::letters() const {
  std::map<int, char> out;
  for (Bits m = x | z; m; m &= m - 1) {
    const int q = __builtin_ctzll(m);
    out[q] = letter(q);
  }
  return out;
}

std::string PauliString::label() const {
  std::string out;
  const auto ls = letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out += it->second + std::to_string(it->first);
  return out.empty() ? "I" : out;
}

std::pair<cplx, Bits> PauliString::act(Bits i) const noexcept {
  const int k = n_y() + 2 * popcount(i & z);
  return {kIPow[k & 3], i ^ x};
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  // With P = i^{n_y} X^x Z^z, (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}.
  PauliString out;
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  const int k = a.n_y() + b.n_y() - out.n_y() + 2 * popcount(a.z & b.x);
  out.coeff = a.coeff * b.coeff * i_pow(k);
  return out;
}

PauliSum PauliSum::identity(cplx coeff) {
  PauliSum s;
  s.add(0, 0, coeff);
  return s;
}

void PauliSum::add(const PauliString& s) { add(s.x, s.z, s.coeff); }

void PauliSum::add(Bits x, Bits z, cplx coeff) {
  auto [it, inserted] = terms_.try_emplace(Key{x, z}, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kPruneTol) terms_.erase(it);
}

int PauliSum::n_qubits() const {
  Bits all = 0;
  for (const auto& [k, c] : terms_) all |= k.first | k.second;
  return all ? 64 - __builtin_clzll(all) : 0;
}

cplx PauliSum::coefficient(Bits x, Bits z) const {
  auto it = terms_.find(Key{x, z});
  return it == terms_.end() ? cplx(0.0) : it->second;
}

PauliSum PauliSum::adjoint() const {
  // Every Pauli string is self-adjoint.
  PauliSum out;
  for (const auto& [k, c] : terms_) out.add(k.first, k.second, std::conj(c));
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [k, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

bool PauliSum::is_anti_hermitian(double tol) const {
  for (const auto& [k, c] : terms_)
    if (std::abs(c.real()) > tol) return false;
  return true;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  for (const auto& [k, c] : terms_)
    if (std::abs(c - other.coefficient(k.first, k.second)) > tol) return false;
  for (const auto& [k, c] : other.terms_)
    if (!terms_.contains(k) && std::abs(c) > tol) return false;
  return true;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scalar) {
  TermMap next;
  for (const auto& [k, c] : terms_) {
    const cplx v = c * scalar;
    if (std::abs(v) >= kPruneTol) next.emplace(k, v);
  }
  terms_ = std::move(next);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [ka, ca] : a.terms()) {
    const PauliString sa{ka.first, ka.second, ca};
    for (const auto& [kb, cb] : b.terms()) out.add(sa * PauliString{kb.first, kb.second, cb});
  }
  return out;
}

std::string PauliSum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i) "
       << PauliString{k.first, k.second, 1.0}.label();
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace adaptvqe
