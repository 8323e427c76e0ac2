// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "adaptvqe/properties.hpp"

namespace adaptvqe::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

json maybe(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

bool needs_fci(const Variant& v) { return v.options.fidelity; }

std::optional<Eigenpair> oracle_for(const System& system, bool wanted, std::ostream& log) {
  if (!wanted) return std::nullopt;
  const auto t0 = std::chrono::steady_clock::now();
  Eigenpair e = fci_ground_state(system);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log << "exact ground state " << num(e.energy) << " (" << dt << " s)\n";
  return e;
}

std::string output_path(const RunConfig& rc, const std::string& name) {
  const std::string dir = rc.output_dir.empty() ? rc.base_dir : rc.output_dir;
  return (fs::path(dir) / (rc.output_prefix + "_" + name)).string();
}

std::string safe_label(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
  return out;
}

std::string trajectory_text(const std::vector<TrajectoryRow>& rows) {
  std::ostringstream os;
  write_trajectory_csv(os, rows);
  return os.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file_atomic(path, text);
}

const ProjectionGrid* grid_for(const Variant& v, std::optional<ProjectionGrid>& storage) {
  if (v.uccsd || !v.options.projection.enabled) return nullptr;
  const auto& p = v.options.projection;
  storage = make_projection_grid(p.s, p.m, p.n_grid);
  return &*storage;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << content;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

Outcome execute_variant(const System& system, const Variant& variant, const Eigenpair* fci) {
  Outcome out;
  out.label = variant.label;
  const Eigenpair* oracle = variant.options.fidelity ? fci : nullptr;
  if (!variant.uccsd) {
    AdaptResult r = run_adapt(system, variant.options, oracle);
    out.rows = std::move(r.rows);
    out.stopping_reason = r.stopping_reason;
    out.converged = r.converged;
    out.error_message = r.error_message;
    out.ansatz = std::move(r.ansatz);
    out.state = std::move(r.state);
    out.energy = r.energy;
    return out;
  }
  const StateVector ref = system.reference_state();
  TrajectoryRow row0;
  row0.op = "reference";
  row0.max_grad = row0.grad_norm = kNaN;
  row0.energy = expectation(system.h, ref);
  fill_state_metrics(system, ref, oracle, row0);
  out.rows.push_back(row0);
  try {
    UccsdResult u = run_uccsd_baseline(system, variant.uccsd_screen, variant.options.optimizer);
    out.state = prepare_state(u.ansatz);
    TrajectoryRow row;
    row.cycle = 1;
    row.op = "uccsd";
    row.max_grad = row.grad_norm = kNaN;
    row.energy = u.energy;
    fill_state_metrics(system, out.state, oracle, row);
    row.n_params = u.n_params;
    row.cnot = u.n_cnot;
    row.vqe_iterations = u.iterations;
    row.vqe_converged = u.converged;
    out.rows.push_back(row);
    out.stopping_reason = "epsilon";
    out.converged = u.converged;
    out.ansatz = std::move(u.ansatz);
    out.energy = u.energy;
  } catch (const std::exception& e) {
    out.stopping_reason = "error";
    out.error_message = e.what();
    out.converged = false;
    out.state = ref;
    out.energy = row0.energy;
  }
  return out;
}

json summary_json(const System& system, const Variant& variant, const Outcome& outcome, const Eigenpair* fci) {
  const TrajectoryRow& last = outcome.rows.back();
  json j;
  j["system"] = system.name;
  j["label"] = outcome.label;
  j["pool"] = variant.uccsd ? "uccsd" : to_string(variant.options.pool);
  j["projection"] = {{"enabled", variant.options.projection.enabled && !variant.uccsd},
                     {"s", variant.options.projection.s},
                     {"m", variant.options.projection.m},
                     {"n_grid", variant.options.projection.n_grid}};
  j["n_qubits"] = system.n_qubits();
  j["stopping_reason"] = outcome.stopping_reason;
  j["converged"] = outcome.converged;
  j["reference_energy"] = maybe(outcome.rows.front().energy);
  j["final_energy"] = maybe(last.energy);
  j["final_s2"] = maybe(last.s2);
  j["final_sz"] = maybe(last.sz);
  j["final_n"] = maybe(last.n);
  j["final_fidelity"] = maybe(last.fidelity);
  j["n_params"] = last.n_params;
  j["total_cnot"] = last.cnot;
  j["cycles"] = static_cast<int>(outcome.rows.size()) - 1;
  if (fci != nullptr) {
    j["fci_energy"] = fci->energy;
    j["energy_error"] = maybe(last.energy - fci->energy);
  }
  if (!outcome.error_message.empty()) j["error"] = outcome.error_message;
  return j;
}

void write_merged_by_params(std::ostream& out, const std::vector<Outcome>& runs, const Eigenpair* fci) {
  out << "n_params";
  for (const auto& r : runs)
    for (const char* c : {"energy", "error", "s2", "n", "fidelity", "cnot"}) out << ',' << r.label << '_' << c;
  out << '\n';
  int max_params = 0;
  for (const auto& r : runs) max_params = std::max(max_params, r.rows.back().n_params);
  for (int k = 0; k <= max_params; ++k) {
    out << k;
    for (const auto& r : runs) {
      const TrajectoryRow* row = nullptr;
      for (const auto& x : r.rows)
        if (x.n_params == k) row = &x;
      if (row == nullptr) {
        out << ",,,,,,";
        continue;
      }
      out << ',' << num(row->energy) << ',' << (fci ? num(row->energy - fci->energy) : "") << ',' << num(row->s2)
          << ',' << num(row->n) << ',' << num(row->fidelity) << ',' << row->cnot;
    }
    out << '\n';
  }
}

void write_merged_by_cnot(std::ostream& out, const std::vector<Outcome>& runs, const Eigenpair* fci) {
  out << "cnot";
  for (const auto& r : runs)
    for (const char* c : {"energy", "error", "s2", "n", "fidelity", "n_params"}) out << ',' << r.label << '_' << c;
  out << '\n';
  std::set<long long> keys;
  for (const auto& r : runs)
    for (const auto& x : r.rows) keys.insert(x.cnot);
  for (long long key : keys) {
    out << key;
    for (const auto& r : runs) {
      // Latest state whose circuit fits in `key` CNOTs.
      const TrajectoryRow* row = nullptr;
      for (const auto& x : r.rows)
        if (x.cnot <= key) row = &x;
      if (row == nullptr) {
        out << ",,,,,,";
        continue;
      }
      out << ',' << num(row->energy) << ',' << (fci ? num(row->energy - fci->energy) : "") << ',' << num(row->s2)
          << ',' << num(row->n) << ',' << num(row->fidelity) << ',' << row->n_params;
    }
    out << '\n';
  }
}

int cmd_run(const RunConfig& rc, std::ostream& out, std::ostream& log) {
  const System system = build_system(rc.system);
  const auto fci = oracle_for(system, needs_fci(rc.variant), log);
  const Eigenpair* fp = fci ? &*fci : nullptr;
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = execute_variant(system, rc.variant, fp);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log << rc.variant.label << ": " << o.stopping_reason << " after " << o.rows.size() - 1 << " cycles, E = "
      << num(o.energy) << " (" << dt << " s)\n";
  emit(rc.trajectory_path, trajectory_text(o.rows), out);
  emit(rc.summary_path, summary_json(system, rc.variant, o, fp).dump(2) + "\n", out);
  if (o.stopping_reason == "error") {
    log << "error: " << o.error_message << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_compare_pools(const RunConfig& rc, std::ostream& out, std::ostream& log) {
  std::vector<Variant> variants = rc.variants;
  if (variants.empty()) variants.push_back(rc.variant);
  const System system = build_system(rc.system);
  const bool want = std::any_of(variants.begin(), variants.end(), needs_fci);
  const auto fci = oracle_for(system, want, log);
  const Eigenpair* fp = fci ? &*fci : nullptr;
  std::vector<Outcome> runs;
  json summaries = json::array();
  bool failed = false;
  for (const auto& v : variants) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = execute_variant(system, v, fp);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << v.label << ": " << o.stopping_reason << ", n_params " << o.rows.back().n_params << ", cnot "
        << o.rows.back().cnot << ", E = " << num(o.energy) << " (" << dt << " s)\n";
    if (o.stopping_reason == "error") {
      log << "error in " << v.label << ": " << o.error_message << '\n';
      failed = true;
    }
    write_file_atomic(output_path(rc, safe_label(v.label) + ".csv"), trajectory_text(o.rows));
    summaries.push_back(summary_json(system, v, o, fp));
    runs.push_back(std::move(o));
  }
  std::ostringstream by_params, by_cnot;
  write_merged_by_params(by_params, runs, fp);
  write_merged_by_cnot(by_cnot, runs, fp);
  write_file_atomic(output_path(rc, "by_params.csv"), by_params.str());
  write_file_atomic(output_path(rc, "by_cnot.csv"), by_cnot.str());
  const std::string summary = json{{"system", system.name}, {"runs", summaries}}.dump(2) + "\n";
  write_file_atomic(output_path(rc, "summary.json"), summary);
  if (!rc.summary_path.empty()) write_file_atomic(rc.summary_path, summary);
  if (runs.size() == 1 && !rc.trajectory_path.empty())
    write_file_atomic(rc.trajectory_path, trajectory_text(runs.front().rows));
  out << summary;
  return failed ? kExitRuntime : kExitOk;
}

int cmd_scan(const RunConfig& rc, std::ostream& out, std::ostream& log) {
  if (rc.scan.empty()) throw ConfigError("scan needs a 'scan' list");
  if (rc.variant.options.projection.enabled && rc.variant.uccsd) throw ConfigError("uccsd has no projection");
  std::ostringstream csv;
  csv << "tag,final_energy,fci_energy,error,n_params,cnot,stopping_reason\n";
  json points = json::array();
  double max_err = -std::numeric_limits<double>::infinity();
  double min_err = std::numeric_limits<double>::infinity();
  bool failed = false;
  for (const auto& p : rc.scan) {
    SystemConfig sc = rc.system;
    sc.fcidump = p.fcidump;
    sc.hubbard.reset();
    sc.name = p.tag;
    const System system = build_system(sc);
    const Eigenpair fci = fci_ground_state(system);
    const Outcome o = execute_variant(system, rc.variant, &fci);
    const TrajectoryRow& last = o.rows.back();
    const double err = last.energy - fci.energy;
    if (o.stopping_reason == "error") {
      log << "error at " << p.tag << ": " << o.error_message << '\n';
      failed = true;
    }
    max_err = std::max(max_err, err);
    min_err = std::min(min_err, err);
    log << p.tag << ": error " << num(err) << ", n_params " << last.n_params << '\n';
    csv << p.tag << ',' << num(last.energy) << ',' << num(fci.energy) << ',' << num(err) << ',' << last.n_params << ','
        << last.cnot << ',' << o.stopping_reason << '\n';
    write_file_atomic(output_path(rc, safe_label(p.tag) + ".csv"), trajectory_text(o.rows));
    points.push_back({{"tag", p.tag},
                      {"final_energy", maybe(last.energy)},
                      {"fci_energy", fci.energy},
                      {"error", maybe(err)},
                      {"n_params", last.n_params},
                      {"total_cnot", last.cnot},
                      {"stopping_reason", o.stopping_reason},
                      {"converged", o.converged}});
  }
  const json summary{{"label", rc.variant.label},
                     {"points", points},
                     {"max_error", maybe(max_err)},
                     {"min_error", maybe(min_err)},
                     {"npe", maybe(max_err - min_err)}};
  write_file_atomic(output_path(rc, "scan.csv"), csv.str());
  const std::string text = summary.dump(2) + "\n";
  write_file_atomic(output_path(rc, "scan.json"), text);
  if (!rc.summary_path.empty()) write_file_atomic(rc.summary_path, text);
  out << text;
  return failed ? kExitRuntime : kExitOk;
}

int cmd_props(const RunConfig& rc, std::ostream& out, std::ostream& log) {
  if (!rc.system.fcidump) throw ConfigError("props needs an FCIDUMP system");
  if (!rc.dipoles_path) throw ConfigError("props needs properties.dipoles");
  MolecularIntegrals full;
  const System system = build_system(rc.system, &full);
  const PropertyIntegrals dip = load_property_integrals(*rc.dipoles_path);
  if (dip.n_orbitals != full.n_orbitals) throw ConfigError("dipole integrals do not match the FCIDUMP orbitals");
  const auto fci = oracle_for(system, needs_fci(rc.variant), log);
  const Eigenpair* fp = fci ? &*fci : nullptr;
  const Outcome o = execute_variant(system, rc.variant, fp);
  if (!rc.trajectory_path.empty()) write_file_atomic(rc.trajectory_path, trajectory_text(o.rows));
  if (o.stopping_reason == "error") {
    log << "error: " << o.error_message << '\n';
    return kExitRuntime;
  }
  std::optional<ProjectionGrid> storage;
  const ProjectionGrid* grid = grid_for(rc.variant, storage);
  const int n_active = system.n_orbitals;
  json report = summary_json(system, rc.variant, o, fp);
  auto vec = [](const std::array<double, 3>& v) { return json::array({v[0], v[1], v[2]}); };
  if (rc.response) {
    try {
      const PropertyReport p = compute_properties(full, dip, rc.system.n_core, n_active, o.state, grid);
      report["unrelaxed_dipole"] = vec(p.unrelaxed_dipole);
      report["relaxed_dipole"] = vec(p.relaxed_dipole);
      report["density_energy"] = p.energy;
      report["lagrangian_energy"] = p.lagrangian;
      report["orbital_gradient_norm"] = p.gradient_norm;
      report["multiplier_norm"] = p.multiplier_norm;
      report["solver_residual"] = p.residual;
      report["smallest_singular_value"] = p.smallest_singular_value;
    } catch (const SingularResponseError& e) {
      log << "error: " << e.what() << " (smallest singular value " << num(e.smallest_singular_value()) << ")\n";
      report["error"] = e.what();
      report["smallest_singular_value"] = e.smallest_singular_value();
      emit(rc.summary_path, report.dump(2) + "\n", out);
      return kExitRuntime;
    }
  } else {
    const ResponseModel model = make_response_model(full, rc.system.n_core, n_active);
    const SpinDensities d = embed_densities(model, state_densities(o.state, grid));
    report["unrelaxed_dipole"] = vec(dipole_moment(d, dip));
  }
  if (fp != nullptr) {
    const ResponseModel model = make_response_model(full, rc.system.n_core, n_active);
    const SpinDensities d = embed_densities(model, state_densities(fp->state, nullptr));
    report["fci_dipole"] = vec(dipole_moment(d, dip));
  }
  emit(rc.summary_path, report.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_fci(const RunConfig& rc, std::ostream& out, std::ostream& log) {
  const System system = build_system(rc.system);
  const auto t0 = std::chrono::steady_clock::now();
  const Eigenpair e = fci_ground_state(system);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log << "exact ground state in " << dt << " s\n";
  const StateVector ref = system.reference_state();
  const json j{{"system", system.name},
               {"n_qubits", system.n_qubits()},
               {"n_alpha", system.n_alpha},
               {"n_beta", system.n_beta},
               {"fci_energy", e.energy},
               {"reference_energy", expectation(system.h, ref)},
               {"reference_fidelity", fidelity(e.state, ref)},
               {"fci_s2", expectation(system.s2, e.state)},
               {"fci_n", expectation(system.n, e.state)}};
  emit(rc.summary_path, j.dump(2) + "\n", out);
  return kExitOk;
}

int dispatch(const std::string& verb, const std::string& config_path, std::ostream& out, std::ostream& log) {
  try {
    const RunConfig rc = load_config(config_path);
    if (verb != "scan" && !rc.system.fcidump && !rc.system.hubbard) throw ConfigError("config has no 'system'");
    if (verb == "run") return cmd_run(rc, out, log);
    if (verb == "compare-pools") return cmd_compare_pools(rc, out, log);
    if (verb == "scan") return cmd_scan(rc, out, log);
    if (verb == "props") return cmd_props(rc, out, log);
    if (verb == "fci") return cmd_fci(rc, out, log);
    log << "error: unknown command '" << verb << "'\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    log << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    log << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace adaptvqe::cli
