// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/excitation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "adaptvqe/jordan_wigner.hpp"

namespace adaptvqe {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::fermionic: return "fermionic";
    case Flavor::qubit: return "qubit";
    case Flavor::pauli: return "pauli";
  }
  return "unknown";
}

namespace {

Bits mask_of(const std::vector<int>& idx) {
  Bits m = 0;
  for (int k : idx) {
    if (k < 0 || k >= 64) throw std::invalid_argument("spin-orbital index out of range");
    const Bits bit = Bits{1} << k;
    if (m & bit) throw std::invalid_argument("repeated index inside a creation or annihilation string");
    m |= bit;
  }
  return m;
}

// Applies one JW ladder to a basis state; returns false when it annihilates.
bool ladder_on_basis(Bits& state, int mode, bool dagger, double& sign) {
  const Bits bit = Bits{1} << mode;
  const bool occupied = (state & bit) != 0;
  if (occupied == dagger) return false;
  if (parity(state & (bit - 1))) sign = -sign;
  state ^= bit;
  return true;
}

}  // namespace

int GeneratorTerm::max_qubit() const noexcept { return std::bit_width(support()) - 1; }

GeneratorTerm make_ladder_term(Flavor flavor, std::vector<int> creation, std::vector<int> annihilation) {
  if (flavor == Flavor::pauli) throw std::invalid_argument("ladder term cannot have the pauli flavor");
  if (creation.size() != annihilation.size() || creation.empty())
    throw std::invalid_argument("excitation needs equal, non-empty creation and annihilation strings");
  const Bits cre = mask_of(creation);
  const Bits ann = mask_of(annihilation);
  if (cre == ann) throw std::invalid_argument("creation and annihilation sets coincide");
  if (flavor == Flavor::qubit && (cre & ann) != 0)
    throw std::invalid_argument("qubit excitations need disjoint creation and annihilation sets");

  GeneratorTerm g;
  g.flavor = flavor;
  g.creation = std::move(creation);
  g.annihilation = std::move(annihilation);
  g.in_mask = ann;
  g.out_mask = cre & ~ann;
  g.flip = cre ^ ann;

  // Literal action of E on the template state carrying only the in_mask bits.
  Bits state = ann;
  double sign = 1.0;
  for (auto it = g.annihilation.rbegin(); it != g.annihilation.rend(); ++it)
    if (!ladder_on_basis(state, *it, false, sign)) throw std::logic_error("template state annihilated");
  for (auto it = g.creation.rbegin(); it != g.creation.rend(); ++it)
    if (!ladder_on_basis(state, *it, true, sign)) throw std::logic_error("template state annihilated");
  g.sign0 = sign;

  if (flavor == Flavor::fermionic) {
    // A spectator qubit t picks up one Z per ladder index above it.
    const Bits index_set = cre | ann;
    for (int t = 0; t < 64; ++t) {
      if ((index_set >> t) & 1U) continue;
      int above = 0;
      for (int c : g.creation) above += c > t;
      for (int a : g.annihilation) above += a > t;
      if (above & 1) g.parity_mask |= Bits{1} << t;
    }
  }
  return g;
}

GeneratorTerm make_pauli_term(const PauliString& p) {
  if (p.x == 0) throw std::invalid_argument("pauli generator must contain X or Y letters");
  if ((p.n_y() & 1) == 0) throw std::invalid_argument("pauli generator needs an odd number of Y letters");
  GeneratorTerm g;
  g.flavor = Flavor::pauli;
  g.pauli = PauliString{p.x, p.z, 1.0};
  g.flip = p.x;
  g.out_mask = p.x & (~p.x + 1);
  g.parity_mask = p.z;
  // i * i^{n_y} is real for odd n_y.
  g.sign0 = ((p.n_y() + 1) & 3) == 0 ? 1.0 : -1.0;
  return g;
}

FermionOperator GeneratorTerm::fermion_operator() const {
  if (flavor == Flavor::pauli) throw std::logic_error("pauli term has no fermionic form");
  LadderString ls;
  for (int c : creation) ls.push_back({c, true});
  for (int a : annihilation) ls.push_back({a, false});
  const FermionOperator e = FermionOperator::product(ls);
  return e - e.adjoint();
}

PauliSum GeneratorTerm::pauli_sum() const {
  switch (flavor) {
    case Flavor::fermionic: return jordan_wigner(fermion_operator());
    case Flavor::qubit: return strip_z(jordan_wigner(fermion_operator()));
    case Flavor::pauli: return PauliSum(PauliString{pauli->x, pauli->z, cplx(0.0, 1.0)});
  }
  return {};
}

int Excitation::max_qubit() const noexcept {
  int m = -1;
  for (const auto& t : terms) m = std::max(m, t.max_qubit());
  return m;
}

bool Excitation::conserves_number() const {
  if (flavor == Flavor::pauli) return false;
  for (const auto& t : terms) {
    int ds = 0;
    for (int c : t.creation) ds += spin_of(c) ? -1 : 1;
    for (int a : t.annihilation) ds -= spin_of(a) ? -1 : 1;
    if (ds != 0) return false;
  }
  return true;
}

namespace {

// Visits every domain state i: all subsets of the free bits joined with in_mask.
template <class F>
inline void for_domain(const GeneratorTerm& g, int n_qubits, F&& body) {
  const Bits full = n_qubits >= 64 ? ~Bits{0} : ((Bits{1} << n_qubits) - 1);
  const Bits free = full & ~(g.in_mask | g.out_mask);
  Bits sub = 0;
  do {
    const Bits i = sub | g.in_mask;
    body(i, i ^ g.flip, g.sign(i));
    sub = (sub - free) & free;
  } while (sub != 0);
}

}  // namespace

void apply_term(CVector& psi, int n_qubits, const GeneratorTerm& g, double theta) {
  if (theta == 0.0) return;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for_domain(g, n_qubits, [&](Bits i, Bits j, double sg) {
    const cplx ai = psi[i];
    const cplx aj = psi[j];
    psi[i] = c * ai - sg * s * aj;
    psi[j] = c * aj + sg * s * ai;
  });
}

void accumulate_term(const CVector& psi, int n_qubits, const GeneratorTerm& g, CVector& out) {
  for_domain(g, n_qubits, [&](Bits i, Bits j, double sg) {
    out[j] += sg * psi[i];
    out[i] -= sg * psi[j];
  });
}

cplx term_matrix_element(const CVector& lambda, const CVector& psi, int n_qubits, const GeneratorTerm& g) {
  cplx acc = 0.0;
  for_domain(g, n_qubits, [&](Bits i, Bits j, double sg) {
    acc += sg * (std::conj(lambda[j]) * psi[i] - std::conj(lambda[i]) * psi[j]);
  });
  return acc;
}

void apply_excitation(StateVector& state, const Excitation& e, double theta) {
  if (e.max_qubit() >= state.n_qubits()) throw std::invalid_argument("excitation acts outside the register");
  for (const auto& t : e.terms) apply_term(state.amplitudes(), state.n_qubits(), t, theta);
}

StateVector apply_excitation(const StateVector& state, const ExcitationRotation& rot) {
  if (rot.generator == nullptr) throw std::invalid_argument("rotation without generator");
  StateVector out = state;
  apply_excitation(out, *rot.generator, rot.theta);
  return out;
}

cplx excitation_matrix_element(const CVector& lambda, const CVector& psi, int n_qubits, const Excitation& e) {
  cplx acc = 0.0;
  for (const auto& t : e.terms) acc += term_matrix_element(lambda, psi, n_qubits, t);
  return acc;
}

}  // namespace adaptvqe
