// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/pools.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace adaptvqe {

std::string to_string(PoolKind kind) {
  switch (kind) {
    case PoolKind::fermionic_paired: return "fermionic-paired";
    case PoolKind::fermionic_spin: return "fermionic-spin";
    case PoolKind::qubit_pauli: return "qubit-pauli";
    case PoolKind::qeb: return "qeb";
    case PoolKind::qeb_scheme1: return "qeb-scheme1";
    case PoolKind::qeb_scheme2: return "qeb-scheme2";
    case PoolKind::qeb_scheme3: return "qeb-scheme3";
  }
  return "unknown";
}

PoolKind parse_pool_kind(const std::string& name) {
  for (PoolKind k : {PoolKind::fermionic_paired, PoolKind::fermionic_spin, PoolKind::qubit_pauli, PoolKind::qeb,
                     PoolKind::qeb_scheme1, PoolKind::qeb_scheme2, PoolKind::qeb_scheme3})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown pool kind '" + name + "'");
}

namespace {

char flavor_prefix(Flavor f) { return f == Flavor::fermionic ? 'F' : (f == Flavor::qubit ? 'Q' : 'P'); }

std::string ladder_label(const GeneratorTerm& t) {
  std::string s(1, flavor_prefix(t.flavor));
  bool first = true;
  for (int c : t.creation) {
    s += (first ? "" : "_") + std::to_string(c);
    first = false;
  }
  for (int a : t.annihilation) s += "_" + std::to_string(a);
  return s;
}

std::string term_label(const GeneratorTerm& t) {
  if (t.flavor == Flavor::pauli) return "P:" + t.pauli->label();
  return ladder_label(t);
}

void finalize(Excitation& e) {
  e.cnot_cost = cnot_cost(e);
  e.label.clear();
  for (std::size_t k = 0; k < e.terms.size(); ++k) e.label += (k ? "+" : "") + term_label(e.terms[k]);
}

Excitation from_terms(ExcitationKind kind, Flavor flavor, std::vector<int> indices, std::vector<GeneratorTerm> terms) {
  Excitation e;
  e.kind = kind;
  e.flavor = flavor;
  e.indices = std::move(indices);
  e.terms = std::move(terms);
  finalize(e);
  return e;
}

void sort_entries(std::vector<Excitation>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Excitation& a, const Excitation& b) {
    if (a.kind != b.kind) return a.kind == ExcitationKind::single;
    if (a.indices != b.indices) return a.indices < b.indices;
    if (a.flavor != b.flavor) return a.flavor < b.flavor;
    return a.label < b.label;
  });
}

using Pair = std::pair<int, int>;  // (high, low) spin orbitals

// All p > q spin-orbital pairs in lexicographic order.
std::vector<Pair> all_pairs(int n_qubits) {
  std::vector<Pair> out;
  for (int p = 0; p < n_qubits; ++p)
    for (int q = 0; q < p; ++q) out.emplace_back(p, q);
  return out;
}

int n_alpha_in(const Pair& a) { return (spin_of(a.first) == 0) + (spin_of(a.second) == 0); }

bool is_mixed(const Pair& a) { return spin_of(a.first) != spin_of(a.second); }

int alpha_spatial(const Pair& a) { return spatial_of(spin_of(a.first) == 0 ? a.first : a.second); }
int beta_spatial(const Pair& a) { return spatial_of(spin_of(a.first) == 1 ? a.first : a.second); }

// Creation {x_a, y_b} with annihilation {x_b, y_a}: a pure spin flip.
bool is_spin_exchange(const Pair& u, const Pair& l) {
  if (!is_mixed(u) || !is_mixed(l)) return false;
  return alpha_spatial(u) == beta_spatial(l) && beta_spatial(u) == alpha_spatial(l);
}

bool disjoint(const Pair& u, const Pair& l) {
  return u.first != l.first && u.first != l.second && u.second != l.first && u.second != l.second;
}

// Spin-conserving doubles as (creation, annihilation) with creation > annihilation.
std::vector<std::pair<Pair, Pair>> spin_conserving_doubles(int n_qubits) {
  const auto pairs = all_pairs(n_qubits);
  std::vector<std::pair<Pair, Pair>> out;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (n_alpha_in(pairs[a]) == n_alpha_in(pairs[b])) out.emplace_back(pairs[a], pairs[b]);
  return out;
}

std::vector<Excitation> same_spin_singles(Flavor flavor, int n_orbitals, bool include_beta) {
  std::vector<Excitation> out;
  for (const auto& [p, q] : all_pairs(2 * n_orbitals)) {
    if (spin_of(p) != spin_of(q)) continue;
    if (!include_beta && spin_of(p) == 1) continue;
    out.push_back(make_single(flavor, p, q));
  }
  return out;
}

std::vector<Excitation> spin_pool(Flavor flavor, int n_orbitals, bool distinct_only) {
  std::vector<Excitation> out = same_spin_singles(flavor, n_orbitals, true);
  for (const auto& [u, l] : spin_conserving_doubles(2 * n_orbitals)) {
    if (is_spin_exchange(u, l)) continue;
    if (distinct_only && !disjoint(u, l)) continue;
    out.push_back(make_double(flavor, u.first, u.second, l.first, l.second));
  }
  return out;
}

std::vector<Excitation> scheme_pool(int n_orbitals, int level) {
  std::vector<Excitation> out = same_spin_singles(Flavor::qubit, n_orbitals, false);
  // Creation (P_b, Q_a), annihilation (R_b, S_a) in spatial labels.
  auto accepts = [level](const Pair& cre, const Pair& ann) {
    const int p = beta_spatial(cre), q = alpha_spatial(cre);
    const int r = beta_spatial(ann), s = alpha_spatial(ann);
    if (p < q) return false;
    if (level >= 2 && !(q > s)) return false;
    if (level >= 3 && r < s) return false;
    return true;
  };
  for (const auto& [u, l] : spin_conserving_doubles(2 * n_orbitals)) {
    if (!is_mixed(u) || !is_mixed(l) || !disjoint(u, l)) continue;
    if (accepts(u, l)) {
      out.push_back(make_double(Flavor::qubit, u.first, u.second, l.first, l.second));
    } else if (accepts(l, u)) {
      out.push_back(make_double(Flavor::qubit, l.first, l.second, u.first, u.second));
    }
  }
  return out;
}

GeneratorTerm spin_flipped(const GeneratorTerm& t) {
  std::vector<int> c, a;
  for (int k : t.creation) c.push_back(k ^ 1);
  for (int k : t.annihilation) a.push_back(k ^ 1);
  return make_ladder_term(t.flavor, c, a);
}

// Canonical text of an operator up to overall sign.
std::string sign_free_key(const FermionOperator& op) {
  if (op.empty()) return {};
  const cplx lead = op.terms().begin()->second;
  const double s = (lead.real() < 0 || (lead.real() == 0 && lead.imag() < 0)) ? -1.0 : 1.0;
  return (op * s).to_string();
}

std::vector<Excitation> paired_pool(int n_orbitals) {
  std::vector<Excitation> out;
  std::set<std::string> seen;
  auto add_combination = [&](const Excitation& base) {
    const GeneratorTerm& t = base.terms.front();
    const GeneratorTerm f = spin_flipped(t);
    const FermionOperator a = t.fermion_operator();
    const FermionOperator b = f.fermion_operator();
    const FermionOperator sum = a + b;
    if (sum.empty()) return;  // the flip is -tau: a pure spin-exchange operator
    const std::string key = sign_free_key(sum);
    if (!seen.insert(key).second) return;
    if (sum.approx_equal(a * 2.0)) {
      out.push_back(base);
    } else {
      out.push_back(from_terms(base.kind, Flavor::fermionic, base.indices, {t, f}));
    }
  };
  for (const auto& e : same_spin_singles(Flavor::fermionic, n_orbitals, false)) add_combination(e);
  for (const auto& [u, l] : spin_conserving_doubles(2 * n_orbitals))
    add_combination(make_double(Flavor::fermionic, u.first, u.second, l.first, l.second));
  return out;
}

std::vector<Excitation> pauli_pool(int n_orbitals) {
  const int nq = 2 * n_orbitals;
  std::vector<Excitation> out;
  auto emit = [&](const std::vector<int>& qubits) {
    const int w = static_cast<int>(qubits.size());
    for (int pattern = 0; pattern < (1 << w); ++pattern) {
      if ((__builtin_popcount(static_cast<unsigned>(pattern)) & 1) == 0) continue;
      std::map<int, char> letters;
      for (int k = 0; k < w; ++k) letters[qubits[k]] = ((pattern >> k) & 1) ? 'Y' : 'X';
      out.push_back(make_pauli_excitation(PauliString::from_letters(letters)));
    }
  };
  for (const auto& [p, q] : all_pairs(nq))
    if (spin_of(p) == spin_of(q)) emit({p, q});
  for (int p = 0; p < nq; ++p)
    for (int q = 0; q < p; ++q)
      for (int r = 0; r < q; ++r)
        for (int s = 0; s < r; ++s) {
          const int n_alpha = (spin_of(p) == 0) + (spin_of(q) == 0) + (spin_of(r) == 0) + (spin_of(s) == 0);
          if (n_alpha % 2 == 0) emit({p, q, r, s});
        }
  return out;
}

}  // namespace

Excitation make_single(Flavor flavor, int p, int q) {
  if (p <= q) throw std::invalid_argument("single excitation requires p > q");
  return from_terms(ExcitationKind::single, flavor, {p, q}, {make_ladder_term(flavor, {p}, {q})});
}

Excitation make_double(Flavor flavor, int p, int q, int r, int s) {
  if (p <= q || r <= s) throw std::invalid_argument("double excitation requires p > q and r > s");
  if (p == r && q == s) throw std::invalid_argument("double excitation requires (p, q) != (r, s)");
  return from_terms(ExcitationKind::double_, flavor, {p, q, r, s}, {make_ladder_term(flavor, {p, q}, {r, s})});
}

Excitation make_pauli_excitation(const PauliString& p) {
  GeneratorTerm t = make_pauli_term(p);
  std::vector<int> idx;
  for (const auto& [q, c] : p.letters()) idx.insert(idx.begin(), q);
  const auto kind = idx.size() <= 2 ? ExcitationKind::single : ExcitationKind::double_;
  return from_terms(kind, Flavor::pauli, std::move(idx), {std::move(t)});
}

int term_cnot_cost(const GeneratorTerm& t) {
  switch (t.flavor) {
    case Flavor::pauli: return t.pauli->weight() <= 2 ? 2 : 6;
    case Flavor::qubit: return t.creation.size() == 1 ? 2 : 13;
    case Flavor::fermionic: {
      if (t.creation.size() == 1) return 2 * std::abs(t.creation[0] - t.annihilation[0]) + 1;
      const int p = std::max(t.creation[0], t.creation[1]), q = std::min(t.creation[0], t.creation[1]);
      const int r = std::max(t.annihilation[0], t.annihilation[1]), s = std::min(t.annihilation[0], t.annihilation[1]);
      return 2 * (p - q + r - s) + 9;
    }
  }
  return 0;
}

int cnot_cost(const Excitation& e) {
  int total = 0;
  for (const auto& t : e.terms) total += term_cnot_cost(t);
  return total;
}

int naive_cnot_cost(const Excitation& e) {
  if (e.kind != ExcitationKind::double_ || e.flavor != Flavor::fermionic || e.indices.size() != 4)
    throw std::invalid_argument("naive CNOT count is defined for fermionic doubles only");
  const auto& i = e.indices;
  return 8 * (i[0] - i[1] + i[2] - i[3] + 2);
}

std::string excitation_key(const Excitation& e) {
  std::vector<std::string> parts;
  for (const auto& t : e.terms) {
    std::ostringstream os;
    if (t.flavor == Flavor::pauli) {
      os << "P" << t.pauli->label();
    } else {
      auto c = t.creation, a = t.annihilation;
      std::sort(c.rbegin(), c.rend());
      std::sort(a.rbegin(), a.rend());
      if (c < a) std::swap(c, a);
      os << flavor_prefix(t.flavor);
      for (int k : c) os << k << ',';
      os << '|';
      for (int k : a) os << k << ',';
    }
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + ";";
  return key;
}

bool irrep_allowed(const Excitation& e, const std::vector<int>& orbital_irreps) {
  if (orbital_irreps.empty()) return true;
  for (const auto& t : e.terms) {
    int x = 0;
    auto fold = [&](int so) {
      const int p = spatial_of(so);
      if (p >= static_cast<int>(orbital_irreps.size())) throw std::invalid_argument("orbital without irrep label");
      x ^= orbital_irreps[p] - 1;
    };
    if (t.flavor == Flavor::pauli) {
      for (const auto& [q, c] : t.pauli->letters()) fold(q);
    } else {
      for (int k : t.creation) fold(k);
      for (int k : t.annihilation) fold(k);
    }
    if (x != 0) return false;
  }
  return true;
}

std::vector<Excitation> uccsd_excitations(int n_orbitals, int n_alpha, int n_beta) {
  std::vector<int> occ, vir;
  for (int p = 0; p < n_orbitals; ++p) {
    (p < n_alpha ? occ : vir).push_back(so_alpha(p));
    (p < n_beta ? occ : vir).push_back(so_beta(p));
  }
  std::sort(occ.begin(), occ.end());
  std::sort(vir.begin(), vir.end());
  std::vector<Excitation> out;
  for (int a : vir)
    for (int i : occ)
      if (spin_of(a) == spin_of(i)) out.push_back(a > i ? make_single(Flavor::fermionic, a, i)
                                                          : make_single(Flavor::fermionic, i, a));
  for (std::size_t x = 0; x < vir.size(); ++x)
    for (std::size_t y = 0; y < x; ++y)
      for (std::size_t u = 0; u < occ.size(); ++u)
        for (std::size_t v = 0; v < u; ++v) {
          const int a = vir[x], b = vir[y], i = occ[u], j = occ[v];
          if (spin_of(a) + spin_of(b) != spin_of(i) + spin_of(j)) continue;
          out.push_back(make_double(Flavor::fermionic, a, b, i, j));
        }
  sort_entries(out);
  return out;
}

Pool build_pool(PoolKind kind, int n_orbitals) {
  if (n_orbitals < 2) throw std::invalid_argument("pools need at least two spatial orbitals");
  if (n_orbitals > 32) throw std::invalid_argument("pools support at most 32 spatial orbitals");
  Pool pool;
  pool.kind = kind;
  pool.n_orbitals = n_orbitals;
  switch (kind) {
    case PoolKind::fermionic_paired: pool.entries = paired_pool(n_orbitals); break;
    case PoolKind::fermionic_spin: pool.entries = spin_pool(Flavor::fermionic, n_orbitals, false); break;
    case PoolKind::qeb: pool.entries = spin_pool(Flavor::qubit, n_orbitals, true); break;
    case PoolKind::qubit_pauli: pool.entries = pauli_pool(n_orbitals); break;
    case PoolKind::qeb_scheme1: pool.entries = scheme_pool(n_orbitals, 1); break;
    case PoolKind::qeb_scheme2: pool.entries = scheme_pool(n_orbitals, 2); break;
    case PoolKind::qeb_scheme3: pool.entries = scheme_pool(n_orbitals, 3); break;
  }
  sort_entries(pool.entries);
  return pool;
}

}  // namespace adaptvqe
