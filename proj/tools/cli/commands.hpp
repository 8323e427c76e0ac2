// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file commands.hpp
 * @brief Verbs of the command-line front end.
 *
 * Exit codes: 0 success (including runs whose inner optimizations did not
 * meet their tolerance; see "converged" in the summary), 1 configuration or
 * input errors, 2 failures during a calculation.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace adaptvqe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

struct Outcome {
  std::string label;
  std::vector<TrajectoryRow> rows;
  std::string stopping_reason;
  bool converged = true;
  std::string error_message;
  AnsatzState ansatz;
  StateVector state;
  double energy = 0.0;
};

// ADAPT or the UCCSD baseline for one variant.
[[nodiscard]] Outcome execute_variant(const System& system, const Variant& variant, const Eigenpair* fci);

[[nodiscard]] nlohmann::json summary_json(const System& system, const Variant& variant, const Outcome& outcome,
                                          const Eigenpair* fci);

// Wide tables for plotting several trajectories on one axis.
void write_merged_by_params(std::ostream& out, const std::vector<Outcome>& runs, const Eigenpair* fci);
void write_merged_by_cnot(std::ostream& out, const std::vector<Outcome>& runs, const Eigenpair* fci);

// Writes to a temporary file next to `path`, then renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_compare_pools(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_props(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_fci(const RunConfig& config, std::ostream& out, std::ostream& log);

// Loads the config and dispatches; catches every error and maps it to an
// exit code with a message on `log`.
int dispatch(const std::string& verb, const std::string& config_path, std::ostream& out, std::ostream& log);

}  // namespace adaptvqe::cli
