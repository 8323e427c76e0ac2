// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "adaptvqe/types.hpp"

namespace adaptvqe {

MolecularIntegrals::MolecularIntegrals(int n, int na, int nb)
    : n_orbitals(n),
      n_alpha(na),
      n_beta(nb),
      h(static_cast<std::size_t>(n) * n, 0.0),
      eri(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

void MolecularIntegrals::set_h1(int p, int q, double v) {
  h[p * n_orbitals + q] = v;
  h[q * n_orbitals + p] = v;
}

void MolecularIntegrals::set_eri(int p, int q, int r, int s, double v) {
  const int n = n_orbitals;
  auto put = [&](int a, int b, int c, int d) { eri[((a * n + b) * n + c) * n + d] = v; };
  put(p, q, r, s);
  put(q, p, r, s);
  put(p, q, s, r);
  put(q, p, s, r);
  put(r, s, p, q);
  put(s, r, p, q);
  put(r, s, q, p);
  put(s, r, q, p);
}

double MolecularIntegrals::so_h(int p, int q) const {
  if (spin_of(p) != spin_of(q)) return 0.0;
  return h1(spatial_of(p), spatial_of(q));
}

double MolecularIntegrals::so_g(int p, int q, int r, int s) const {
  if (spin_of(p) != spin_of(r) || spin_of(q) != spin_of(s)) return 0.0;
  return g(spatial_of(p), spatial_of(r), spatial_of(q), spatial_of(s));
}

double MolecularIntegrals::so_anti(int p, int q, int r, int s) const {
  return so_g(p, q, r, s) - so_g(p, q, s, r);
}

std::uint64_t MolecularIntegrals::hf_occupation() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < n_alpha; ++i) bits |= std::uint64_t{1} << so_alpha(i);
  for (int i = 0; i < n_beta; ++i) bits |= std::uint64_t{1} << so_beta(i);
  return bits;
}

double MolecularIntegrals::hf_energy() const {
  std::vector<int> occ;
  const std::uint64_t bits = hf_occupation();
  for (int p = 0; p < n_qubits(); ++p)
    if ((bits >> p) & 1U) occ.push_back(p);
  double e = e_core;
  for (int i : occ) e += so_h(i, i);
  for (int i : occ)
    for (int j : occ) e += 0.5 * so_anti(i, j, i, j);
  return e;
}

void MolecularIntegrals::validate(double tol) const {
  const int n = n_orbitals;
  if (n <= 0) throw std::invalid_argument("n_orbitals must be positive");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n || n_beta > n)
    throw std::invalid_argument("electron counts inconsistent with orbital count");
  if (static_cast<int>(h.size()) != n * n || static_cast<int>(eri.size()) != n * n * n * n)
    throw std::invalid_argument("integral storage has the wrong size");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (std::abs(h1(p, q) - h1(q, p)) > tol) throw std::invalid_argument("h is not symmetric");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = g(p, q, r, s);
          if (std::abs(v - g(q, p, r, s)) > tol || std::abs(v - g(p, q, s, r)) > tol ||
              std::abs(v - g(r, s, p, q)) > tol)
            throw std::invalid_argument("eri lacks 8-fold permutation symmetry");
        }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool parse_double(std::string tok, double& out) {
  for (auto& c : tok)
    if (c == 'D' || c == 'd') c = 'E';
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end != tok.c_str() && *end == '\0' && std::isfinite(out);
}

bool parse_int(const std::string& tok, long& out) {
  char* end = nullptr;
  out = std::strtol(tok.c_str(), &end, 10);
  return end != tok.c_str() && *end == '\0';
}

bool is_header_end(const std::string& line) {
  const std::string t = upper(trim(line));
  if (t.empty()) return false;
  return t == "/" || t == "&END" || t == "$END" || t.ends_with("&END") || t.ends_with("/");
}

using Namelist = std::map<std::string, std::vector<std::string>>;

// Reads a Fortran-style namelist starting at the current line. Returns the
// number of lines consumed.
Namelist read_namelist(std::istream& in, std::string first, int& line_no) {
  std::string text = first;
  std::string line;
  const int start = line_no;
  while (!is_header_end(text.substr(text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1))) {
    if (!std::getline(in, line)) throw ParseError(start, "unterminated namelist header");
    ++line_no;
    text += "\n" + line;
  }
  std::string norm;
  for (char c : text) {
    if (c == ',' || c == '\n' || c == '\r' || c == '\t') {
      norm += ' ';
    } else if (c == '=') {
      norm += " = ";
    } else {
      norm += c;
    }
  }
  std::istringstream ts(norm);
  std::vector<std::string> toks;
  for (std::string t; ts >> t;) toks.push_back(t);
  Namelist nl;
  std::size_t i = 0;
  // Skip the group name (&FCI) and any stray tokens before the first key.
  while (i + 1 < toks.size() && toks[i + 1] != "=") ++i;
  while (i + 1 < toks.size()) {
    if (toks[i + 1] != "=") throw ParseError(start, "malformed namelist near '" + toks[i] + "'");
    const std::string key = upper(toks[i]);
    i += 2;
    std::vector<std::string> vals;
    while (i < toks.size() && !(i + 1 < toks.size() && toks[i + 1] == "=")) {
      const std::string u = upper(toks[i]);
      if (u != "/" && u != "&END" && u != "$END" && u != "&") vals.push_back(toks[i]);
      ++i;
    }
    nl[key] = vals;
  }
  return nl;
}

long namelist_int(const Namelist& nl, const std::string& key, int line, bool required, long fallback) {
  auto it = nl.find(key);
  if (it == nl.end() || it->second.empty()) {
    if (required) throw ParseError(line, "header is missing " + key);
    return fallback;
  }
  long v = 0;
  if (!parse_int(it->second.front(), v)) throw ParseError(line, "header value for " + key + " is not an integer");
  return v;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  int line_no = 0;
  // Header: first non-blank line must open the namelist.
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty() || trim(line)[0] != '&')
    throw ParseError(line_no, "expected '&FCI' namelist header");
  const int header_line = line_no;
  const Namelist nl = read_namelist(in, line, line_no);
  const long norb = namelist_int(nl, "NORB", header_line, true, 0);
  const long nelec = namelist_int(nl, "NELEC", header_line, true, 0);
  const long ms2 = namelist_int(nl, "MS2", header_line, false, 0);
  if (norb <= 0 || norb > 32) throw ParseError(header_line, "NORB out of supported range");
  if (nelec < 0 || (nelec + ms2) % 2 != 0 || std::abs(ms2) > nelec)
    throw ParseError(header_line, "inconsistent NELEC/MS2");
  const int na = static_cast<int>((nelec + ms2) / 2);
  const int nb = static_cast<int>((nelec - ms2) / 2);
  if (na > norb || nb > norb) throw ParseError(header_line, "more electrons than orbitals");
  MolecularIntegrals ints(static_cast<int>(norb), na, nb);
  ints.isym = static_cast<int>(namelist_int(nl, "ISYM", header_line, false, 1));
  if (auto it = nl.find("ORBSYM"); it != nl.end()) {
    for (const auto& t : it->second) {
      long v = 0;
      if (!parse_int(t, v)) throw ParseError(header_line, "ORBSYM entry is not an integer");
      ints.orbital_irreps.push_back(static_cast<int>(v));
    }
    if (!ints.orbital_irreps.empty() && static_cast<long>(ints.orbital_irreps.size()) != norb)
      throw ParseError(header_line, "ORBSYM length differs from NORB");
  }

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (toks.size() != 5) throw ParseError(line_no, "expected 'value i j k l'");
    double v = 0.0;
    if (!parse_double(toks[0], v)) throw ParseError(line_no, "non-numeric value '" + toks[0] + "'");
    long idx[4];
    for (int k = 0; k < 4; ++k) {
      if (!parse_int(toks[k + 1], idx[k])) throw ParseError(line_no, "non-integer index '" + toks[k + 1] + "'");
      if (idx[k] < 0 || idx[k] > norb) throw ParseError(line_no, "index out of range");
    }
    const auto [i, j, k, l] = std::tuple{idx[0], idx[1], idx[2], idx[3]};
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ints.e_core += v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      ints.set_eri(static_cast<int>(i - 1), static_cast<int>(j - 1), static_cast<int>(k - 1),
                   static_cast<int>(l - 1), v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      ints.set_h1(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy record, not needed
    } else {
      throw ParseError(line_no, "unrecognized index pattern");
    }
  }
  return ints;
}

MolecularIntegrals parse_fcidump_string(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

MolecularIntegrals load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FCIDUMP file " + path);
  try {
    return parse_fcidump(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

std::string emit_fcidump(const MolecularIntegrals& ints) {
  const int n = ints.n_orbitals;
  std::ostringstream os;
  char buf[64];
  os << "&FCI NORB=" << n << ",NELEC=" << ints.n_electrons() << ",MS2=" << (ints.n_alpha - ints.n_beta) << ",\n";
  os << " ORBSYM=";
  for (int p = 0; p < n; ++p) os << (ints.orbital_irreps.empty() ? 1 : ints.orbital_irreps[p]) << ",";
  os << "\n ISYM=" << ints.isym << ",\n&END\n";
  auto rec = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << ' ' << buf << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = ints.g(i, j, k, l);
          if (v != 0.0) rec(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (ints.h1(i, j) != 0.0) rec(ints.h1(i, j), i + 1, j + 1, 0, 0);
  rec(ints.e_core, 0, 0, 0, 0);
  return os.str();
}

MolecularIntegrals freeze_core(const MolecularIntegrals& ints, int n_core) {
  const int n = ints.n_orbitals;
  if (n_core < 0 || n_core >= n) throw std::invalid_argument("invalid number of core orbitals");
  if (n_core > ints.n_alpha || n_core > ints.n_beta)
    throw std::invalid_argument("core orbitals exceed occupied orbitals");
  if (n_core == 0) return ints;
  const int m = n - n_core;
  MolecularIntegrals out(m, ints.n_alpha - n_core, ints.n_beta - n_core);
  out.isym = ints.isym;
  double e = ints.e_core;
  for (int i = 0; i < n_core; ++i) {
    e += 2.0 * ints.h1(i, i);
    for (int j = 0; j < n_core; ++j) e += 2.0 * ints.g(i, i, j, j) - ints.g(i, j, j, i);
  }
  out.e_core = e;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      double v = ints.h1(p + n_core, q + n_core);
      for (int i = 0; i < n_core; ++i)
        v += 2.0 * ints.g(p + n_core, q + n_core, i, i) - ints.g(p + n_core, i, i, q + n_core);
      out.h[p * m + q] = v;
    }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          out.eri[((p * m + q) * m + r) * m + s] = ints.g(p + n_core, q + n_core, r + n_core, s + n_core);
  if (!ints.orbital_irreps.empty())
    out.orbital_irreps.assign(ints.orbital_irreps.begin() + n_core, ints.orbital_irreps.end());
  return out;
}

MolecularIntegrals active_space(const MolecularIntegrals& ints, int n_core, int n_active) {
  const MolecularIntegrals core = freeze_core(ints, n_core);
  const int n = core.n_orbitals;
  if (n_active < std::max(core.n_alpha, core.n_beta) || n_active > n)
    throw std::invalid_argument("invalid number of active orbitals");
  if (n_active == n) return core;
  MolecularIntegrals out(n_active, core.n_alpha, core.n_beta);
  out.isym = core.isym;
  out.e_core = core.e_core;
  for (int p = 0; p < n_active; ++p)
    for (int q = 0; q < n_active; ++q) out.h[p * n_active + q] = core.h1(p, q);
  for (int p = 0; p < n_active; ++p)
    for (int q = 0; q < n_active; ++q)
      for (int r = 0; r < n_active; ++r)
        for (int s = 0; s < n_active; ++s)
          out.eri[((p * n_active + q) * n_active + r) * n_active + s] = core.g(p, q, r, s);
  if (!core.orbital_irreps.empty())
    out.orbital_irreps.assign(core.orbital_irreps.begin(), core.orbital_irreps.begin() + n_active);
  return out;
}

PropertyIntegrals parse_property_integrals(std::istream& in) {
  struct Entry {
    int comp, i, j;
    double v;
  };
  std::vector<Entry> entries;
  PropertyIntegrals out;
  long norb = -1;
  int comp = -1;
  bool have_nuclear = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '&') {
      const int header_line = line_no;
      const Namelist nl = read_namelist(in, line, line_no);
      norb = namelist_int(nl, "NORB", header_line, false, -1);
      continue;
    }
    if (t[0] == '#') {
      std::istringstream ls(t.substr(1));
      std::string tag;
      ls >> tag;
      tag = upper(tag);
      if (tag == "DIPOLE") {
        std::string c;
        ls >> c;
        c = upper(c);
        if (c == "X") comp = 0;
        else if (c == "Y") comp = 1;
        else if (c == "Z") comp = 2;
        else throw ParseError(line_no, "unknown dipole component '" + c + "'");
      } else if (tag == "NUCLEAR") {
        for (int k = 0; k < 3; ++k) {
          std::string tok;
          if (!(ls >> tok) || !parse_double(tok, out.nuclear[k]))
            throw ParseError(line_no, "NUCLEAR trailer needs three numbers");
        }
        have_nuclear = true;
      }
      continue;
    }
    std::istringstream ls(t);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (toks.size() != 3 && toks.size() != 5) throw ParseError(line_no, "expected 'value i j [0 0]'");
    if (comp < 0) throw ParseError(line_no, "record before any '# DIPOLE' tag");
    double v = 0.0;
    if (!parse_double(toks[0], v)) throw ParseError(line_no, "non-numeric value '" + toks[0] + "'");
    long i = 0, j = 0;
    if (!parse_int(toks[1], i) || !parse_int(toks[2], j)) throw ParseError(line_no, "non-integer index");
    if (toks.size() == 5) {
      long k = 0, l = 0;
      if (!parse_int(toks[3], k) || !parse_int(toks[4], l) || k != 0 || l != 0)
        throw ParseError(line_no, "one-body record must have zero trailing indices");
    }
    if (i < 1 || j < 1 || (norb > 0 && (i > norb || j > norb))) throw ParseError(line_no, "index out of range");
    entries.push_back({comp, static_cast<int>(i - 1), static_cast<int>(j - 1), v});
  }
  (void)have_nuclear;
  if (norb < 0) {
    norb = 0;
    for (const auto& e : entries) norb = std::max<long>(norb, std::max(e.i, e.j) + 1);
  }
  out.n_orbitals = static_cast<int>(norb);
  for (auto& c : out.components) c.assign(static_cast<std::size_t>(norb * norb), 0.0);
  for (const auto& e : entries) {
    out.components[e.comp][e.i * norb + e.j] = e.v;
    out.components[e.comp][e.j * norb + e.i] = e.v;
  }
  return out;
}

PropertyIntegrals parse_property_integrals_string(const std::string& text) {
  std::istringstream in(text);
  return parse_property_integrals(in);
}

PropertyIntegrals load_property_integrals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open property integral file " + path);
  try {
    return parse_property_integrals(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

}  // namespace adaptvqe
