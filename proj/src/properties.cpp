// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "adaptvqe/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "adaptvqe/adapt.hpp"
#include "adaptvqe/hamiltonian.hpp"
#include "adaptvqe/parallel.hpp"
#include "adaptvqe/pools.hpp"

namespace adaptvqe {

namespace {

constexpr int kMaxDensityQubits = 14;
constexpr int kMaxResponseSpinOrbitals = 48;
constexpr double kDegenerateGap = 1e-8;

CVector annihilate(const CVector& v, int r) {
  CVector out(v.size(), cplx(0.0, 0.0));
  const Bits bit = Bits{1} << r;
  const Bits below = bit - 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((i & bit) == 0 || v[i] == cplx(0.0, 0.0)) continue;
    out[i ^ bit] = parity(i & below) ? -v[i] : v[i];
  }
  return out;
}

double re_inner(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return s;
}

std::size_t idx2(int n, int p, int q) { return static_cast<std::size_t>(p) * n + q; }
std::size_t idx4(int n, int p, int q, int r, int s) {
  const std::size_t m = n;
  return ((p * m + q) * m + r) * m + s;
}

}  // namespace

double SpinDensities::trace() const {
  double t = 0.0;
  for (int p = 0; p < n_so; ++p) t += one(p, p);
  return t;
}

SpinDensities transition_densities(const StateVector& bra, const StateVector& ket) {
  const int n = bra.n_qubits();
  if (ket.n_qubits() != n) throw std::invalid_argument("density bra and ket differ in size");
  if (n > kMaxDensityQubits) throw std::invalid_argument("density measurement limited to 14 qubits");
  const double overlap = re_inner(bra.amplitudes(), ket.amplitudes());
  if (std::abs(overlap) < 1e-12) throw std::runtime_error("density normalization vanishes");

  std::vector<CVector> bra1(n), ket1(n);
  for (int p = 0; p < n; ++p) {
    bra1[p] = annihilate(bra.amplitudes(), p);
    ket1[p] = annihilate(ket.amplitudes(), p);
  }
  SpinDensities d;
  d.n_so = n;
  d.d1.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) d.d1[idx2(n, p, q)] = re_inner(bra1[p], ket1[q]) / overlap;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < p; ++q) {
      const double v = 0.5 * (d.d1[idx2(n, p, q)] + d.d1[idx2(n, q, p)]);
      d.d1[idx2(n, p, q)] = d.d1[idx2(n, q, p)] = v;
    }

  // a_q a_p |.> for p < q
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) pairs.emplace_back(p, q);
  std::vector<CVector> bra2(pairs.size()), ket2(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    bra2[k] = annihilate(bra1[pairs[k].first], pairs[k].second);
    ket2[k] = annihilate(ket1[pairs[k].first], pairs[k].second);
  });
  const std::size_t np = pairs.size();
  std::vector<double> m(np * np);
  parallel_for(np, [&](std::size_t a) {
    for (std::size_t b = 0; b < np; ++b) m[a * np + b] = re_inner(bra2[a], ket2[b]) / overlap;
  });
  d.d2.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      const double v = 0.5 * (m[a * np + b] + m[b * np + a]);
      const auto [p, q] = pairs[a];
      const auto [r, s] = pairs[b];
      d.d2[idx4(n, p, q, r, s)] = v;
      d.d2[idx4(n, q, p, r, s)] = -v;
      d.d2[idx4(n, p, q, s, r)] = -v;
      d.d2[idx4(n, q, p, s, r)] = v;
    }
  return d;
}

SpinDensities state_densities(const StateVector& psi, const ProjectionGrid* grid) {
  if (grid == nullptr) return transition_densities(psi, psi);
  const StateVector ket(psi.n_qubits(), project(psi.amplitudes(), psi.n_qubits(), *grid));
  return transition_densities(psi, ket);
}

int ResponseModel::n_electrons() const {
  return static_cast<int>(std::count(occupied.begin(), occupied.end(), 1));
}

ResponseModel make_response_model(const MolecularIntegrals& full, int n_core, int n_active) {
  const int n = full.n_orbitals;
  if (n_active < 0) n_active = n - n_core;
  if (n_core < 0 || n_core > std::min(full.n_alpha, full.n_beta) || n_active <= 0 || n_core + n_active > n)
    throw std::invalid_argument("invalid core/active partition");
  if (2 * n > kMaxResponseSpinOrbitals) throw std::invalid_argument("response model limited to 24 orbitals");
  ResponseModel m;
  m.n_so = 2 * n;
  m.n_core_so = 2 * n_core;
  m.n_active_so = 2 * n_active;
  m.e_core = full.e_core;
  const int ns = m.n_so;
  m.h.resize(static_cast<std::size_t>(ns) * ns);
  for (int p = 0; p < ns; ++p)
    for (int q = 0; q < ns; ++q) m.h[idx2(ns, p, q)] = full.so_h(p, q);
  m.anti.resize(static_cast<std::size_t>(ns) * ns * ns * ns);
  for (int p = 0; p < ns; ++p)
    for (int q = 0; q < ns; ++q)
      for (int r = 0; r < ns; ++r)
        for (int s = 0; s < ns; ++s) m.anti[idx4(ns, p, q, r, s)] = full.so_anti(p, q, r, s);
  const Bits occ = full.hf_occupation();
  m.occupied.resize(ns);
  for (int p = 0; p < ns; ++p) m.occupied[p] = static_cast<char>((occ >> p) & 1);
  return m;
}

SpinDensities embed_densities(const ResponseModel& model, const SpinDensities& active) {
  if (active.n_so != model.n_active_so) throw std::invalid_argument("active densities do not match the model");
  const int n = model.n_so;
  const int c = model.n_core_so;
  const int na = active.n_so;
  SpinDensities d;
  d.n_so = n;
  d.d1.assign(static_cast<std::size_t>(n) * n, 0.0);
  d.d2.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int i = 0; i < c; ++i) d.d1[idx2(n, i, i)] = 1.0;
  for (int p = 0; p < na; ++p)
    for (int q = 0; q < na; ++q) d.d1[idx2(n, p + c, q + c)] = active.one(p, q);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      if (i == j) continue;
      d.d2[idx4(n, i, j, i, j)] = 1.0;
      d.d2[idx4(n, i, j, j, i)] = -1.0;
    }
  for (int i = 0; i < c; ++i)
    for (int p = 0; p < na; ++p)
      for (int q = 0; q < na; ++q) {
        const double v = active.one(p, q);
        d.d2[idx4(n, i, p + c, i, q + c)] = v;
        d.d2[idx4(n, p + c, i, q + c, i)] = v;
        d.d2[idx4(n, i, p + c, q + c, i)] = -v;
        d.d2[idx4(n, p + c, i, i, q + c)] = -v;
      }
  for (int p = 0; p < na; ++p)
    for (int q = 0; q < na; ++q)
      for (int r = 0; r < na; ++r)
        for (int s = 0; s < na; ++s) d.d2[idx4(n, p + c, q + c, r + c, s + c)] = active.two(p, q, r, s);
  return d;
}

double energy_from_densities(const ResponseModel& model, const SpinDensities& d) {
  const int n = model.n_so;
  if (d.n_so != n) throw std::invalid_argument("densities do not match the model");
  double e = model.e_core;
  for (std::size_t k = 0; k < model.h.size(); ++k) e += model.h[k] * d.d1[k];
  double two = 0.0;
  for (std::size_t k = 0; k < model.anti.size(); ++k) two += model.anti[k] * d.d2[k];
  return e + 0.25 * two;
}

std::vector<double> build_fock(const ResponseModel& model) {
  const int n = model.n_so;
  std::vector<double> f(model.h);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int i = 0; i < n; ++i)
        if (model.occupied[i]) f[idx2(n, p, q)] += model.g(p, i, q, i);
  return f;
}

double OrbitalGradient::max_abs() const {
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

OrbitalGradient density_orbital_gradient(const ResponseModel& model, const SpinDensities& full) {
  const int n = model.n_so;
  if (full.n_so != n) throw std::invalid_argument("densities do not match the model");
  std::vector<double> gen(static_cast<std::size_t>(n) * n, 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t pp) {
    const int p = static_cast<int>(pp);
    for (int q = 0; q < n; ++q) {
      double v = 0.0;
      for (int r = 0; r < n; ++r) v += model.h1(p, r) * full.one(q, r);
      double w = 0.0;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) w += model.g(p, r, s, t) * full.two(q, r, s, t);
      gen[idx2(n, p, q)] = v + 0.5 * w;
    }
  });
  OrbitalGradient out;
  out.n_so = n;
  out.r.resize(gen.size());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) out.r[idx2(n, p, q)] = 2.0 * (gen[idx2(n, p, q)] - gen[idx2(n, q, p)]);
  return out;
}

OrbitalGradient compute_orbital_gradient(const ResponseModel& model, const SpinDensities& full,
                                         const StateVector& psi, const SparseOperator& h_active,
                                         const ProjectionGrid* grid) {
  if (psi.n_qubits() != model.n_active_so) throw std::invalid_argument("state does not match the active space");
  OrbitalGradient out = density_orbital_gradient(model, full);
  const int c = model.n_core_so;
  const int na = model.n_active_so;
  std::vector<Excitation> singles;
  std::vector<std::pair<int, int>> where;
  for (int p = 0; p < na; ++p)
    for (int q = p % 2; q < p; q += 2) {
      singles.push_back(make_single(Flavor::fermionic, p, q));
      where.emplace_back(p + c, q + c);
    }
  const std::vector<double> r = screen_gradients(psi, h_active, singles, grid);
  const int n = model.n_so;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const auto [p, q] = where[k];
    out.r[idx2(n, p, q)] = r[k];
    out.r[idx2(n, q, p)] = -r[k];
  }
  return out;
}

std::vector<Rotation> rotation_list(const ResponseModel& model) {
  std::vector<Rotation> out;
  for (int p = 0; p < model.n_so; ++p)
    for (int q = p % 2; q < p; q += 2) {
      const bool op = model.occupied[p] != 0;
      const bool oq = model.occupied[q] != 0;
      if (op && !oq) throw std::invalid_argument("response requires an aufbau-ordered reference");
      Rotation rot{p, q, RotationBlock::virtual_occupied};
      if (op && oq) rot.block = RotationBlock::occupied_occupied;
      if (!op && !oq) rot.block = RotationBlock::virtual_virtual;
      out.push_back(rot);
    }
  return out;
}

AMatrix build_a_matrix(const ResponseModel& model, const std::vector<double>& fock) {
  const int n = model.n_so;
  AMatrix out;
  out.rotations = rotation_list(model);
  const auto m = static_cast<Eigen::Index>(out.rotations.size());
  out.a = Eigen::MatrixXd::Zero(m, m);
  auto f = [&](int p) { return fock[idx2(n, p, p)]; };
  for (Eigen::Index x = 0; x < m; ++x) {
    const Rotation& row = out.rotations[x];
    for (Eigen::Index y = 0; y < m; ++y) {
      const Rotation& col = out.rotations[y];
      double v = 0.0;
      if (col.block == RotationBlock::virtual_occupied) {
        const int c = col.p, k = col.q;
        switch (row.block) {
          case RotationBlock::virtual_occupied: {
            const int a = row.p, i = row.q;
            v = model.g(a, k, i, c) + model.g(a, c, i, k);
            if (a == c && i == k) v += f(a) - f(i);
            break;
          }
          case RotationBlock::occupied_occupied:
            v = model.g(row.p, c, row.q, k) + model.g(row.p, k, row.q, c);
            break;
          case RotationBlock::virtual_virtual:
            v = model.g(row.p, c, row.q, k) + model.g(row.p, k, row.q, c);
            break;
        }
      } else if (col.block == row.block) {
        const int i = row.p, j = row.q, k = col.p, l = col.q;
        const double delta = (i == k && j == l ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0);
        v = (f(i) - f(j)) * delta;
      }
      out.a(x, y) = v;
    }
  }
  return out;
}

double ResponseSolution::max_abs() const {
  double m = 0.0;
  for (double v : z) m = std::max(m, std::abs(v));
  return m;
}

ResponseSolution solve_multipliers(const OrbitalGradient& r, const AMatrix& a, const std::vector<double>& fock) {
  const int n = r.n_so;
  const auto& rots = a.rotations;
  const auto m = static_cast<Eigen::Index>(rots.size());
  Eigen::VectorXd z = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd rvec(m);
  for (Eigen::Index x = 0; x < m; ++x) rvec(x) = r.at(rots[x].p, rots[x].q);

  double smallest = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Index> vo;
  for (Eigen::Index x = 0; x < m; ++x) {
    const Rotation& rot = rots[x];
    if (rot.block == RotationBlock::virtual_occupied) {
      vo.push_back(x);
      continue;
    }
    const double gap = fock[idx2(n, rot.p, rot.p)] - fock[idx2(n, rot.q, rot.q)];
    if (std::abs(gap) < kDegenerateGap) {
      if (std::abs(rvec(x)) < kDegenerateGap) continue;  // redundant rotation
      throw SingularResponseError("degenerate orbitals " + std::to_string(rot.p) + "," + std::to_string(rot.q) +
                                      " with non-vanishing orbital gradient",
                                  std::abs(gap));
    }
    smallest = std::min(smallest, std::abs(gap));
    z(x) = -rvec(x) / gap;
  }

  if (!vo.empty()) {
    const auto k = static_cast<Eigen::Index>(vo.size());
    Eigen::MatrixXd avo(k, k);
    Eigen::VectorXd rhs(k);
    for (Eigen::Index y = 0; y < k; ++y) {
      double v = rvec(vo[y]);
      for (Eigen::Index x = 0; x < m; ++x)
        if (rots[x].block != RotationBlock::virtual_occupied) v += z(x) * a.a(x, vo[y]);
      rhs(y) = -v;
      for (Eigen::Index x = 0; x < k; ++x) avo(y, x) = a.a(vo[x], vo[y]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(avo, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    smallest = std::min(smallest, smin);
    if (smin < 1e-10 * std::max(1.0, sv(0)))
      throw SingularResponseError("orbital Hessian is singular", smin);
    const Eigen::VectorXd zvo = svd.solve(rhs);
    for (Eigen::Index y = 0; y < k; ++y) z(vo[y]) = zvo(y);
  }

  ResponseSolution out;
  out.n_so = n;
  out.z.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (Eigen::Index x = 0; x < m; ++x) {
    out.z[idx2(n, rots[x].p, rots[x].q)] = z(x);
    out.z[idx2(n, rots[x].q, rots[x].p)] = z(x);
  }
  const Eigen::VectorXd stationarity = rvec + a.a.transpose() * z;
  out.residual = m > 0 ? stationarity.cwiseAbs().maxCoeff() : 0.0;
  out.smallest_singular_value = std::isfinite(smallest) ? smallest : 0.0;
  return out;
}

SpinDensities relaxed_densities(const ResponseModel& model, const SpinDensities& full, const ResponseSolution& z) {
  const int n = model.n_so;
  if (full.n_so != n || z.n_so != n) throw std::invalid_argument("response sizes do not match");
  SpinDensities d = full;
  for (std::size_t k = 0; k < d.d1.size(); ++k) d.d1[k] += 0.5 * z.z[k];
  for (int o = 0; o < n; ++o) {
    if (!model.occupied[o]) continue;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const double v = 0.5 * z.at(x, y);
        if (v == 0.0) continue;
        d.d2[idx4(n, x, o, y, o)] += v;  //  z_pr DHF_qs
        d.d2[idx4(n, o, x, y, o)] -= v;  // -z_qr DHF_ps
        d.d2[idx4(n, x, o, o, y)] -= v;  // -z_ps DHF_qr
        d.d2[idx4(n, o, x, o, y)] += v;  //  z_qs DHF_pr
      }
  }
  return d;
}

std::array<double, 3> dipole_moment(const SpinDensities& full, const PropertyIntegrals& ints) {
  if (full.n_so != 2 * ints.n_orbitals) throw std::invalid_argument("property integrals do not match the orbital basis");
  std::array<double, 3> mu = ints.nuclear;
  const int n = ints.n_orbitals;
  for (int c = 0; c < 3; ++c)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const double d = full.one(2 * p, 2 * q) + full.one(2 * p + 1, 2 * q + 1);
        mu[c] -= ints.at(c, p, q) * d;
      }
  return mu;
}

PropertyReport compute_properties(const MolecularIntegrals& full, const PropertyIntegrals& dipoles, int n_core,
                                  int n_active, const StateVector& psi, const ProjectionGrid* grid) {
  if (n_active < 0) n_active = full.n_orbitals - n_core;
  const ResponseModel model = make_response_model(full, n_core, n_active);
  if (psi.n_qubits() != model.n_active_so) throw std::invalid_argument("state does not match the active space");
  const SparseOperator h(build_molecular_hamiltonian(active_space(full, n_core, n_active)));
  const SpinDensities d = embed_densities(model, state_densities(psi, grid));
  const OrbitalGradient r = compute_orbital_gradient(model, d, psi, h, grid);
  const std::vector<double> fock = build_fock(model);
  const AMatrix a = build_a_matrix(model, fock);
  const ResponseSolution z = solve_multipliers(r, a, fock);
  const SpinDensities relaxed = relaxed_densities(model, d, z);

  PropertyReport out;
  out.energy = energy_from_densities(model, d);
  out.lagrangian = energy_from_densities(model, relaxed);
  out.unrelaxed_dipole = dipole_moment(d, dipoles);
  out.relaxed_dipole = dipole_moment(relaxed, dipoles);
  out.gradient_norm = r.max_abs();
  out.multiplier_norm = z.max_abs();
  out.residual = z.residual;
  out.smallest_singular_value = z.smallest_singular_value;
  return out;
}

}  // namespace adaptvqe
