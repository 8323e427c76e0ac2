// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace adaptvqe::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string resolve(const std::string& base, const std::string& p) {
  const fs::path path(p);
  if (path.is_absolute() || base.empty()) return path.lexically_normal().string();
  return (fs::path(base) / path).lexically_normal().string();
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

template <typename T>
T get(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "' in " + where);
  }
}

const json& object(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_object()) throw ConfigError(std::string("'") + key + "' in " + where + " must be an object");
  return v;
}

SystemConfig parse_system(const json& j, const std::string& base) {
  if (!j.is_object()) throw ConfigError("'system' must be an object");
  reject_unknown(j, {"fcidump", "hubbard", "n_core", "n_active", "name"}, "system");
  SystemConfig sc;
  const bool has_file = j.contains("fcidump");
  const bool has_model = j.contains("hubbard");
  if (has_file == has_model) throw ConfigError("system needs exactly one of 'fcidump' or 'hubbard'");
  if (has_file) {
    sc.fcidump = resolve(base, get<std::string>(j, "fcidump", "", "system"));
    if (!fs::exists(*sc.fcidump)) throw ConfigError("FCIDUMP not found: " + *sc.fcidump);
    sc.n_core = get<int>(j, "n_core", 0, "system");
    sc.n_active = get<int>(j, "n_active", -1, "system");
    sc.name = get<std::string>(j, "name", fs::path(*sc.fcidump).parent_path().filename().string(), "system");
  } else {
    const json& h = object(j, "hubbard", "system");
    reject_unknown(h, {"n_sites", "t", "u", "periodic", "n_alpha", "n_beta"}, "system.hubbard");
    HubbardSpec spec;
    spec.n_sites = get<int>(h, "n_sites", spec.n_sites, "system.hubbard");
    spec.t = get<double>(h, "t", spec.t, "system.hubbard");
    spec.u = get<double>(h, "u", spec.u, "system.hubbard");
    spec.periodic = get<bool>(h, "periodic", spec.periodic, "system.hubbard");
    spec.n_alpha = get<int>(h, "n_alpha", spec.n_sites / 2, "system.hubbard");
    spec.n_beta = get<int>(h, "n_beta", spec.n_sites / 2, "system.hubbard");
    try {
      spec.validate();
    } catch (const std::exception& e) {
      throw ConfigError(std::string("system.hubbard: ") + e.what());
    }
    sc.hubbard = spec;
    sc.name = get<std::string>(j, "name", "hubbard", "system");
    if (j.contains("n_core") || j.contains("n_active")) throw ConfigError("active spaces apply to FCIDUMP systems only");
  }
  return sc;
}

// Reads the keys shared by a top-level run and a compare-pools variant.
Variant parse_variant(const json& j, const Variant& defaults, const std::string& where) {
  Variant v = defaults;
  if (j.contains("pool")) {
    const std::string name = get<std::string>(j, "pool", "", where);
    v.uccsd = name == "uccsd";
    if (!v.uccsd) {
      try {
        v.options.pool = parse_pool_kind(name);
      } catch (const std::exception&) {
        throw ConfigError("unknown pool '" + name + "' in " + where);
      }
    }
    v.label = name;
  }
  v.uccsd_screen = get<bool>(j, "uccsd_screen", v.uccsd_screen, where);
  if (j.contains("projection")) {
    const json& p = j.at("projection");
    if (p.is_boolean()) {
      v.options.projection.enabled = p.get<bool>();
    } else {
      if (!p.is_object()) throw ConfigError("'projection' in " + where + " must be an object or boolean");
      reject_unknown(p, {"enabled", "s", "m", "n_grid"}, where + ".projection");
      auto& po = v.options.projection;
      po.enabled = get<bool>(p, "enabled", true, where + ".projection");
      po.s = get<double>(p, "s", po.s, where + ".projection");
      po.m = get<double>(p, "m", po.m, where + ".projection");
      po.n_grid = get<int>(p, "n_grid", po.n_grid, where + ".projection");
      if (po.n_grid < 1) throw ConfigError("projection.n_grid must be positive");
    }
  }
  if (j.contains("stopping")) {
    const json& s = object(j, "stopping", where);
    reject_unknown(s, {"epsilon", "max_params", "max_cnot"}, where + ".stopping");
    v.options.epsilon = get<double>(s, "epsilon", v.options.epsilon, where + ".stopping");
    v.options.max_params = get<int>(s, "max_params", v.options.max_params, where + ".stopping");
    v.options.max_cnot = get<long long>(s, "max_cnot", v.options.max_cnot, where + ".stopping");
    if (!(v.options.epsilon >= 0.0)) throw ConfigError("stopping.epsilon must be non-negative");
  }
  if (j.contains("optimizer")) {
    const json& o = object(j, "optimizer", where);
    reject_unknown(o, {"gtol", "max_iterations"}, where + ".optimizer");
    v.options.optimizer.gtol = get<double>(o, "gtol", v.options.optimizer.gtol, where + ".optimizer");
    v.options.optimizer.max_iterations =
        get<int>(o, "max_iterations", v.options.optimizer.max_iterations, where + ".optimizer");
  }
  if (j.contains("oracle")) {
    const json& o = object(j, "oracle", where);
    reject_unknown(o, {"fidelity"}, where + ".oracle");
    v.options.fidelity = get<bool>(o, "fidelity", v.options.fidelity, where + ".oracle");
  }
  if (j.contains("label")) v.label = get<std::string>(j, "label", v.label, where);
  return v;
}

std::string default_label(const Variant& v) {
  if (v.uccsd) return "uccsd";
  return to_string(v.options.pool) + (v.options.projection.enabled ? "-sp" : "");
}

}  // namespace

RunConfig parse_config(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"system", "pool", "uccsd_screen", "projection", "stopping", "optimizer", "oracle", "outputs",
                  "properties", "variants", "scan", "label"},
                 "config");
  RunConfig rc;
  rc.base_dir = base_dir;
  try {
    if (j.contains("system")) rc.system = parse_system(j.at("system"), base_dir);
    rc.variant = parse_variant(j, Variant{}, "config");
    if (rc.variant.label.empty()) rc.variant.label = default_label(rc.variant);

    if (j.contains("variants")) {
      const json& vs = j.at("variants");
      if (!vs.is_array() || vs.empty()) throw ConfigError("'variants' must be a non-empty array");
      Variant base = rc.variant;
      base.label.clear();
      std::set<std::string> labels;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        const std::string where = "variants[" + std::to_string(k) + "]";
        if (!vs[k].is_object()) throw ConfigError(where + " must be an object");
        reject_unknown(vs[k], {"pool", "uccsd_screen", "projection", "stopping", "optimizer", "oracle", "label"},
                       where);
        Variant v = parse_variant(vs[k], base, where);
        if (!vs[k].contains("label")) v.label = default_label(v);
        if (!labels.insert(v.label).second) throw ConfigError("duplicate variant label '" + v.label + "'");
        rc.variants.push_back(std::move(v));
      }
    }

    if (j.contains("scan")) {
      const json& sc = j.at("scan");
      if (!sc.is_array() || sc.empty()) throw ConfigError("'scan' must be a non-empty array");
      for (std::size_t k = 0; k < sc.size(); ++k) {
        const std::string where = "scan[" + std::to_string(k) + "]";
        if (!sc[k].is_object()) throw ConfigError(where + " must be an object");
        reject_unknown(sc[k], {"tag", "fcidump"}, where);
        ScanPoint p;
        p.tag = get<std::string>(sc[k], "tag", "", where);
        p.fcidump = resolve(base_dir, get<std::string>(sc[k], "fcidump", "", where));
        if (p.tag.empty()) throw ConfigError(where + " needs a 'tag'");
        if (!fs::exists(p.fcidump)) throw ConfigError("FCIDUMP not found: " + p.fcidump);
        rc.scan.push_back(std::move(p));
      }
    }

    if (j.contains("outputs")) {
      const json& o = object(j, "outputs", "config");
      reject_unknown(o, {"trajectory", "summary", "directory", "prefix"}, "outputs");
      if (o.contains("trajectory")) rc.trajectory_path = resolve(base_dir, get<std::string>(o, "trajectory", "", "outputs"));
      if (o.contains("summary")) rc.summary_path = resolve(base_dir, get<std::string>(o, "summary", "", "outputs"));
      if (o.contains("directory")) rc.output_dir = resolve(base_dir, get<std::string>(o, "directory", "", "outputs"));
      rc.output_prefix = get<std::string>(o, "prefix", rc.output_prefix, "outputs");
    }

    if (j.contains("properties")) {
      const json& p = object(j, "properties", "config");
      reject_unknown(p, {"dipoles", "response"}, "properties");
      if (p.contains("dipoles")) {
        rc.dipoles_path = resolve(base_dir, get<std::string>(p, "dipoles", "", "properties"));
        if (!fs::exists(*rc.dipoles_path)) throw ConfigError("dipole integrals not found: " + *rc.dipoles_path);
      }
      rc.response = get<bool>(p, "response", true, "properties");
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  const fs::path dir = fs::absolute(fs::path(path)).parent_path();
  return parse_config(j, dir.string());
}

System build_system(const SystemConfig& sc, MolecularIntegrals* full) {
  if (sc.hubbard) return make_hubbard_system(*sc.hubbard, sc.name);
  if (!sc.fcidump) throw ConfigError("config has no system");
  const MolecularIntegrals ints = load_fcidump(*sc.fcidump);
  const int n_active = sc.n_active < 0 ? ints.n_orbitals - sc.n_core : sc.n_active;
  if (full != nullptr) *full = ints;
  return make_molecular_system(active_space(ints, sc.n_core, n_active), sc.name);
}

}  // namespace adaptvqe::cli
