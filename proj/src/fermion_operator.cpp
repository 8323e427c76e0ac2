// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/fermion_operator.hpp"

#include <sstream>
#include <stdexcept>

namespace adaptvqe {

namespace {

// Insertion sort into canonical order. Contractions from a_i a+_i spawn
// additional shorter terms which are normal ordered recursively.
void normal_order(LadderString term, cplx coeff, std::vector<std::pair<LadderString, cplx>>& out) {
  const std::size_t n = term.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j > 0; --j) {
      Ladder& left = term[j - 1];
      Ladder& right = term[j];
      if (right.dagger && !left.dagger) {
        if (left.mode == right.mode) {
          LadderString contracted;
          contracted.reserve(n - 2);
          contracted.insert(contracted.end(), term.begin(), term.begin() + static_cast<long>(j - 1));
          contracted.insert(contracted.end(), term.begin() + static_cast<long>(j + 1), term.end());
          normal_order(std::move(contracted), coeff, out);
        }
        std::swap(left, right);
        coeff = -coeff;
      } else if (right.dagger == left.dagger) {
        if (right.mode == left.mode) return;  // a a = a+ a+ = 0
        if (right.mode > left.mode) {
          std::swap(left, right);
          coeff = -coeff;
        } else {
          break;
        }
      } else {
        break;
      }
    }
  }
  out.emplace_back(std::move(term), coeff);
}

}  // namespace

FermionOperator FermionOperator::identity(cplx coeff) {
  FermionOperator op;
  op.accumulate({}, coeff);
  return op;
}

FermionOperator FermionOperator::create(int mode) { return product({{mode, true}}); }

FermionOperator FermionOperator::annihilate(int mode) { return product({{mode, false}}); }

FermionOperator FermionOperator::number(int mode) { return product({{mode, true}, {mode, false}}); }

FermionOperator FermionOperator::product(const LadderString& ladders, cplx coeff) {
  FermionOperator op;
  op.add_term(ladders, coeff);
  return op;
}

void FermionOperator::add_term(const LadderString& ladders, cplx coeff) {
  for (const auto& l : ladders) {
    if (l.mode < 0) throw std::invalid_argument("negative mode index");
  }
  std::vector<std::pair<LadderString, cplx>> ordered;
  normal_order(ladders, coeff, ordered);
  for (auto& [key, c] : ordered) accumulate(std::move(key), c);
}

void FermionOperator::accumulate(LadderString key, cplx coeff) {
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kPruneTol) terms_.erase(it);
}

int FermionOperator::n_modes() const {
  int n = 0;
  for (const auto& [key, c] : terms_)
    for (const auto& l : key) n = std::max(n, l.mode + 1);
  return n;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& [key, c] : terms_) {
    LadderString rev(key.rbegin(), key.rend());
    for (auto& l : rev) l.dagger = !l.dagger;
    out.add_term(rev, std::conj(c));
  }
  return out;
}

bool FermionOperator::is_anti_hermitian(double tol) const {
  return approx_equal(adjoint() * cplx(-1.0), tol);
}

bool FermionOperator::is_hermitian(double tol) const { return approx_equal(adjoint(), tol); }

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  for (const auto& [key, c] : other.terms_) accumulate(key, c);
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
  for (const auto& [key, c] : other.terms_) accumulate(key, -c);
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx scalar) {
  if (std::abs(scalar) < kPruneTol) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) < kPruneTol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      LadderString joined = ka;
      joined.insert(joined.end(), kb.begin(), kb.end());
      out.add_term(joined, ca * cb);
    }
  }
  return out;
}

bool FermionOperator::approx_equal(const FermionOperator& other, double tol) const {
  for (const auto& [key, c] : terms_) {
    auto it = other.terms_.find(key);
    const cplx o = it == other.terms_.end() ? cplx(0.0) : it->second;
    if (std::abs(c - o) > tol) return false;
  }
  for (const auto& [key, c] : other.terms_) {
    if (!terms_.contains(key) && std::abs(c) > tol) return false;
  }
  return true;
}

std::string FermionOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ")";
    for (const auto& l : key) os << " a" << (l.dagger ? "+" : "") << l.mode;
  }
  if (first) os << "0";
  return os.str();
}

FermionOperator make_single_excitation(int p, int q) {
  if (p <= q || q < 0) throw std::invalid_argument("single excitation requires p > q >= 0");
  FermionOperator op = FermionOperator::product({{p, true}, {q, false}});
  op -= FermionOperator::product({{q, true}, {p, false}});
  return op;
}

FermionOperator make_double_excitation(int p, int q, int r, int s) {
  if (p <= q || r <= s || s < 0 || q < 0)
    throw std::invalid_argument("double excitation requires p > q, r > s");
  if (p == r && q == s) throw std::invalid_argument("double excitation requires (p,q) != (r,s)");
  FermionOperator op = FermionOperator::product({{p, true}, {q, true}, {r, false}, {s, false}});
  op -= FermionOperator::product({{s, true}, {r, true}, {q, false}, {p, false}});
  return op;
}

FermionOperator commutator(const FermionOperator& a, const FermionOperator& b) { return a * b - b * a; }

}  // namespace adaptvqe
