// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

// Prints one PASS/FAIL line per acceptance criterion.
//
//   acceptance [--only 1,5,9] [--known-red 4]
//
// Exit status is 1 when a criterion fails that is not listed in --known-red,
// or when a listed one unexpectedly passes; known-red failures still print
// FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "adaptvqe/adapt.hpp"
#include "adaptvqe/integrals.hpp"
#include "adaptvqe/jordan_wigner.hpp"
#include "adaptvqe/properties.hpp"
#include "adaptvqe/spinproj.hpp"
#include "adaptvqe/system.hpp"
#include "commands.hpp"
#include "oracles.hpp"

using namespace adaptvqe;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

System load_system(const std::string& name) { return make_molecular_system(load_fcidump(oracle::fixture_path(name)), name); }

FermionOperator tau(std::vector<int> cre, std::vector<int> ann) {
  LadderString ls;
  for (int c : cre) ls.push_back({c, true});
  for (int a : ann) ls.push_back({a, false});
  const FermionOperator e = FermionOperator::product(ls);
  return e - e.adjoint();
}

StateVector random_state(std::mt19937& rng, int n, std::optional<int> two_sz) {
  std::normal_distribution<double> d;
  StateVector s(n);
  for (Bits b = 0; b < s.dim(); ++b)
    if (!two_sz || sector_of(b).two_sz == *two_sz) s[b] = cplx(d(rng), d(rng));
  s.normalize();
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criteria ----

Verdict pool_counts() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<PoolKind, std::size_t> expected[] = {{PoolKind::fermionic_spin, 855}, {PoolKind::qeb, 555},
                                                       {PoolKind::qeb_scheme1, 400}, {PoolKind::qeb_scheme2, 190},
                                                       {PoolKind::qeb_scheme3, 155}};
  bool ok = true;
  std::string got;
  for (const auto& [kind, n] : expected) {
    const std::size_t size = build_pool(kind, 6).size();
    ok = ok && size == n;
    got += (got.empty() ? "" : "/") + std::to_string(size);
  }
  const double dt = seconds_since(t0);
  return {ok && dt < 1.0, fmt("counts %s in %.3f s", got.c_str(), dt)};
}

Verdict qubit_excitation_identity() {
  const int n = 7;
  const auto lhs = oracle::dense_matrix(strip_z(jordan_wigner(tau({6, 3}, {1, 0}))), n);
  const Eigen::MatrixXcd rhs = oracle::dense_matrix(tau({6, 3}, {1, 0}), n) - 2.0 * oracle::dense_matrix(tau({6, 3, 4}, {1, 0, 4}), n) -
                   2.0 * oracle::dense_matrix(tau({6, 3, 5}, {1, 0, 5}), n) -
                   4.0 * oracle::dense_matrix(tau({6, 3, 5, 4}, {1, 0, 5, 4}), n);
  const double diff = (lhs - rhs).cwiseAbs().maxCoeff();
  return {diff < 1e-12, fmt("max |difference| %.2e", diff)};
}

Verdict cnot_model() {
  bool ok = cnot_cost(make_double(Flavor::qubit, 6, 3, 1, 0)) == 13;
  ok = ok && cnot_cost(make_pauli_excitation(PauliString::from_letters({{0, 'X'}, {1, 'X'}, {3, 'X'}, {6, 'Y'}}))) == 6;
  ok = ok && cnot_cost(make_pauli_excitation(PauliString::from_letters({{0, 'X'}, {2, 'Y'}}))) == 2;
  int tuples = 0;
  for (int p = 1; p < 12; ++p)
    for (int q = 0; q < p; ++q)
      for (int r = 1; r < 12; ++r)
        for (int s = 0; s < r; ++s) {
          if (p == r && q == s) continue;
          ok = ok && cnot_cost(make_double(Flavor::fermionic, p, q, r, s)) == 2 * (p - q + r - s) + 9;
          ++tuples;
        }
  const int naive = naive_cnot_cost(make_double(Flavor::fermionic, 6, 3, 1, 0));
  ok = ok && naive == 48;
  return {ok, fmt("13/6/2 reproduced, fermionic formula on %d tuples, naive(6,3,1,0) = %d", tuples, naive)};
}

// Parameters at which a run first reaches fidelity 0.99; -1 if it never does.
int params_to_fidelity(const System& sys, const Eigenpair& fci, PoolKind kind, int cap) {
  AdaptOptions o;
  o.pool = kind;
  o.epsilon = 1e-6;
  o.max_params = cap;
  int hit = -1;
  o.observer = [&](const TrajectoryRow& row) {
    if (row.fidelity >= 0.99) hit = row.n_params;
    return hit < 0;
  };
  (void)run_adapt(sys, o, &fci);
  return hit;
}

Verdict n2_fidelity() {
  const System sys = load_system("n2_cas66_2.500");
  const Eigenpair fci = fci_ground_state(sys);
  const double hf = fidelity(fci.state, sys.reference_state());
  const int n_spin = params_to_fidelity(sys, fci, PoolKind::fermionic_spin, 80);
  // qubit-pauli only has to be shown to need at least 3x as many.
  const int cap = n_spin > 0 ? 3 * n_spin - 1 : 0;
  const int n_pauli = cap > 0 ? params_to_fidelity(sys, fci, PoolKind::qubit_pauli, cap) : -1;
  const bool hf_ok = std::abs(hf - 0.2) <= 0.05;
  const bool spin_ok = n_spin > 0 && std::abs(n_spin - 30) <= 6;
  const bool ratio_ok = n_spin > 0 && n_pauli < 0;
  return {hf_ok && spin_ok && ratio_ok,
          fmt("HF fidelity %.4f (want 0.20+-0.05)%s; fermionic-spin 0.99 at %d params (want 30+-6)%s; qubit-pauli %s",
              hf, hf_ok ? "" : " RED", n_spin, spin_ok ? "" : " RED",
              ratio_ok ? fmt("below 0.99 through %d params (>= 3x)", cap).c_str()
                       : fmt("reached 0.99 at %d params (< 3x)", n_pauli).c_str())};
}

Verdict hubbard_collapse() {
  HubbardSpec spec;  // 6 sites, U = 8, periodic, half filling
  const System sys = make_hubbard_system(spec, "hubbard6");
  std::string detail;
  bool ok = true;
  for (PoolKind kind : {PoolKind::qeb, PoolKind::fermionic_spin}) {
    AdaptOptions o;
    o.pool = kind;
    o.epsilon = 1e-3;
    o.fidelity = false;
    const AdaptResult r = run_adapt(sys, o);
    double worst = 0.0;
    for (const auto& row : r.rows) worst = std::max(worst, std::abs(row.n - 6.0));
    ok = ok && worst < 1e-9 && r.stopping_reason == "epsilon";
    detail += fmt("%s max|N-6| %.1e over %zu rows; ", to_string(kind).c_str(), worst, r.rows.size());
  }
  // The Pauli-pool gradient norm stays near 1 for thousands of cycles; the
  // collapse to the N = 4 triplet is complete well before 200 parameters.
  AdaptOptions o;
  o.pool = PoolKind::qubit_pauli;
  o.epsilon = 1e-3;
  o.max_params = 200;
  o.fidelity = false;
  const AdaptResult r = run_adapt(sys, o);
  const auto& last = r.rows.back();
  const bool collapse = std::abs(last.n - 4.0) <= 0.2 && std::abs(last.s2 - 2.0) <= 0.2;
  ok = ok && collapse;
  detail += fmt("qubit-pauli ends (%s, %d params) with N %.4f, S2 %.4f", r.stopping_reason.c_str(), last.n_params,
                last.n, last.s2);
  return {ok, detail};
}

// Cumulative CNOTs when the error first drops below 1 mHa; -1 if never.
long long cnot_to_chemical_accuracy(const System& sys, const Eigenpair& fci, PoolKind kind, bool projected) {
  AdaptOptions o;
  o.pool = kind;
  o.epsilon = 1e-6;
  o.max_params = 150;
  o.projection.enabled = projected;
  o.projection.n_grid = 4;
  long long hit = -1;
  o.observer = [&](const TrajectoryRow& row) {
    if (row.energy - fci.energy < 1e-3) hit = row.cnot;
    return hit < 0;
  };
  const AdaptResult r = run_adapt(sys, o, &fci);
  if (hit < 0 && !r.rows.empty() && r.rows.front().energy - fci.energy < 1e-3) hit = 0;
  return hit;
}

Verdict spin_projection_savings() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"h6_chain_2.00", "n2_cas66_2.500"}) {
    const System sys = load_system(name);
    const Eigenpair fci = fci_ground_state(sys);
    for (PoolKind kind : {PoolKind::fermionic_spin, PoolKind::qeb}) {
      const long long plain = cnot_to_chemical_accuracy(sys, fci, kind, false);
      const long long sp = cnot_to_chemical_accuracy(sys, fci, kind, true);
      const bool good = plain > 0 && sp >= 0 && sp <= 0.7 * plain;
      ok = ok && good;
      detail += fmt("%s %s %lld->%lld (%.2f)%s; ", name, to_string(kind).c_str(), plain, sp,
                    plain > 0 ? double(sp) / plain : NAN, good ? "" : " RED");
    }
  }
  return {ok, detail};
}

Verdict projector() {
  std::mt19937 rng(7);
  const SparseOperator s2(build_spin_operators(4).s2);
  const ProjectionGrid grid = make_projection_grid(0, 0, 3);
  double worst_s2 = 0.0, worst_idem = 0.0;
  for (int t = 0; t < 100; ++t) {
    const StateVector psi = random_state(rng, 8, 0);
    const ProjectedState once = apply_projector(psi, grid);
    const ProjectedState twice = apply_projector(once.state, grid);
    worst_s2 = std::max(worst_s2, std::abs(expectation(s2, once.state)));
    for (std::size_t i = 0; i < psi.dim(); ++i) worst_idem = std::max(worst_idem, std::abs(twice.state[i] - once.state[i]));
  }
  return {worst_s2 < 1e-8 && worst_idem < 1e-8,
          fmt("100 states: max |<S2> - 0| %.1e, max idempotency change %.1e", worst_s2, worst_idem)};
}

Verdict gradient_oracles() {
  const System sys = load_system("h4_chain_1.50");
  const ProjectionGrid grid = make_projection_grid(0, 0, 3);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> angle(-0.8, 0.8);
  double worst = 0.0;
  int checks = 0;
  auto compare = [&](double got, double fd) {
    worst = std::max(worst, std::abs(got - fd) / std::max(std::abs(fd), 1e-3));
    ++checks;
  };
  for (PoolKind kind : {PoolKind::fermionic_paired, PoolKind::fermionic_spin, PoolKind::qubit_pauli, PoolKind::qeb,
                        PoolKind::qeb_scheme3}) {
    const Pool pool = build_pool(kind, sys.n_orbitals);
    for (bool projected : {false, true}) {
      if (projected && kind == PoolKind::qubit_pauli) continue;
      const ProjectionGrid* gp = projected ? &grid : nullptr;
      const StateVector psi = random_state(rng, 8, projected ? std::optional<int>(0) : std::nullopt);
      const auto r = projected ? projected_gradient(psi, sys.h, pool.entries, grid)
                               : screen_gradients(psi, sys.h, pool.entries, nullptr);
      for (std::size_t m = 0; m < pool.size(); m += 11) {
        const auto fd = oracle::finite_difference(
            [&](const std::vector<double>& x) {
              StateVector s = psi;
              apply_excitation(s, pool[m], x[0]);
              return gp ? projected_expectation(sys.h, s, *gp) : expectation(sys.h, s);
            },
            {0.0});
        compare(r[m], fd[0]);
      }
      AnsatzState a;
      a.reference = sys.reference;
      a.n_qubits = 8;
      for (int k = 0; k < 5; ++k) {
        a.ops.push_back(pool[rng() % pool.size()]);
        a.thetas.push_back(angle(rng));
      }
      std::vector<double> g;
      (void)ansatz_energy(a, sys.h, gp, &g);
      const auto fd = oracle::finite_difference(
          [&](const std::vector<double>& x) {
            AnsatzState b = a;
            b.thetas = x;
            return ansatz_energy(b, sys.h, gp, nullptr);
          },
          a.thetas);
      for (std::size_t k = 0; k < fd.size(); ++k) compare(g[k], fd[k]);
    }
  }
  return {worst < 1e-6, fmt("%d comparisons, worst relative error %.1e", checks, worst)};
}

Verdict response_dipole() {
  const MolecularIntegrals full = load_fcidump(oracle::fixture_path("water3"));
  const PropertyIntegrals dip = load_property_integrals(oracle::fixture_path("water3", "DIPOLES"));
  const System sys = make_molecular_system(full, "water3");
  bool ok = true;
  std::string detail;
  for (int cap : {1, 3, -1}) {
    AdaptOptions o;
    o.epsilon = 1e-8;
    o.max_params = cap;
    o.optimizer.gtol = 1e-10;
    o.fidelity = false;
    const AdaptResult r = run_adapt(sys, o);
    const PropertyReport rep = compute_properties(full, dip, 0, -1, r.state, nullptr);
    const auto ff = oracle::finite_field_dipole(full, dip, 0, full.n_orbitals, r.ansatz, nullptr);
    double relaxed = 0.0, unrelaxed = 0.0;
    for (int c = 0; c < 3; ++c) {
      relaxed = std::max(relaxed, std::abs(rep.relaxed_dipole[c] - ff[c]));
      unrelaxed = std::max(unrelaxed, std::abs(rep.unrelaxed_dipole[c] - ff[c]));
    }
    const bool truncated = cap > 0;
    ok = ok && relaxed < 1e-5 && (!truncated || unrelaxed > 1e-4);
    detail += fmt("%zu params: |relaxed-ff| %.1e, |unrelaxed-ff| %.1e; ", r.ansatz.ops.size(), relaxed, unrelaxed);
  }
  return {ok, detail};
}

Verdict fci_convergence() {
  bool ok = true;
  double worst = 0.0;
  int runs = 0;
  for (const char* name : {"h2_0.50", "h2_0.74", "h2_1.50", "h4_chain_1.50", "water3"}) {
    const System sys = load_system(name);
    const Eigenpair fci = fci_ground_state(sys);
    for (PoolKind kind : {PoolKind::fermionic_spin, PoolKind::qeb})
      for (bool projected : {false, true}) {
        AdaptOptions o;
        o.pool = kind;
        o.epsilon = 1e-6;
        o.projection.enabled = projected;
        o.projection.n_grid = 3;
        const AdaptResult r = run_adapt(sys, o, &fci);
        const double err = std::abs(r.energy - fci.energy);
        worst = std::max(worst, err);
        ok = ok && err < 1e-7 && r.stopping_reason == "epsilon";
        ++runs;
      }
  }
  return {ok, fmt("%d runs, worst |E - E_FCI| %.1e Ha", runs, worst)};
}

Verdict determinism() {
  const fs::path dir = fs::temp_directory_path() / "adaptvqe_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const nlohmann::json configs[] = {
      {{"system", {{"fcidump", oracle::fixture_path("h4_chain_1.50")}}},
       {"pool", "qeb"},
       {"projection", true},
       {"stopping", {{"epsilon", 1e-6}}}},
      {{"system", {{"hubbard", {{"n_sites", 4}, {"u", 4.0}}}}}, {"pool", "qubit-pauli"}, {"stopping", {{"max_params", 12}}}},
      {{"system", {{"fcidump", oracle::fixture_path("water3")}}}, {"pool", "fermionic-paired"}},
  };
  bool ok = true;
  int k = 0;
  for (nlohmann::json cfg : configs) {
    std::string text[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path csv = dir / fmt("c%d_%d.csv", k, run);
      cfg["outputs"] = {{"trajectory", csv.string()}, {"summary", (dir / "s.json").string()}};
      const fs::path path = dir / "cfg.json";
      std::ofstream(path) << cfg.dump();
      std::ostringstream out, log;
      ok = ok && cli::dispatch("run", path.string(), out, log) == cli::kExitOk;
      std::ifstream in(csv);
      std::stringstream ss;
      ss << in.rdbuf();
      text[run] = ss.str();
    }
    ok = ok && !text[0].empty() && text[0] == text[1];
    ++k;
  }
  fs::remove_all(dir);
  return {ok, fmt("%d configs run twice, trajectories %s", k, ok ? "byte-identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only, known_red;
  app.add_option("--only", only, "criteria to run")->delimiter(',');
  app.add_option("--known-red", known_red, "criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::pair<const char*, std::function<Verdict()>>> criteria = {
      {1, {"pool counts", pool_counts}},
      {2, {"qubit-excitation identity", qubit_excitation_identity}},
      {3, {"CNOT cost model", cnot_model}},
      {4, {"N2 fidelity anchors", n2_fidelity}},
      {5, {"Hubbard symmetry collapse", hubbard_collapse}},
      {6, {"spin-projection CNOT savings", spin_projection_savings}},
      {7, {"projector correctness", projector}},
      {8, {"gradient oracles", gradient_oracles}},
      {9, {"response dipole consistency", response_dipole}},
      {10, {"FCI convergence", fci_convergence}},
      {11, {"determinism", determinism}},
  };
  const std::set<int> wanted(only.begin(), only.end()), red(known_red.begin(), known_red.end());
  int unexpected = 0;
  for (const auto& [id, entry] : criteria) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = entry.second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d (%s): %s - %s [%.1f s]%s\n", id, entry.first, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                seconds_since(t0), red.count(id) ? " (known red)" : "");
    std::fflush(stdout);
    if (v.pass == static_cast<bool>(red.count(id))) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
