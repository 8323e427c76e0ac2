// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief JSON run configuration for the command-line front end.
 *
 * Relative paths inside a config resolve against the config file's
 * directory. The schema is documented in README.md.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "adaptvqe/adapt.hpp"
#include "adaptvqe/hamiltonian.hpp"
#include "adaptvqe/system.hpp"

namespace adaptvqe::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SystemConfig {
  std::optional<std::string> fcidump;
  std::optional<HubbardSpec> hubbard;
  int n_core = 0;
  int n_active = -1;  // all orbitals after the core
  std::string name;
};

struct Variant {
  std::string label;
  bool uccsd = false;
  bool uccsd_screen = true;
  AdaptOptions options;
};

struct ScanPoint {
  std::string tag;
  std::string fcidump;
};

struct RunConfig {
  std::string base_dir;
  SystemConfig system;
  Variant variant;                 // run, props
  std::vector<Variant> variants;   // compare-pools
  std::vector<ScanPoint> scan;     // scan
  std::string trajectory_path;
  std::string summary_path;
  std::string output_dir;
  std::string output_prefix = "run";
  std::optional<std::string> dipoles_path;
  bool response = true;
};

// Throws ConfigError with a readable message.
[[nodiscard]] RunConfig parse_config(const nlohmann::json& j, const std::string& base_dir);
[[nodiscard]] RunConfig load_config(const std::string& path);

// Molecular systems use the active space of the FCIDUMP; the full
// integrals are returned through `full` when requested.
[[nodiscard]] System build_system(const SystemConfig& sc, MolecularIntegrals* full = nullptr);

}  // namespace adaptvqe::cli
