// Copyright 2026 The adaptvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ADAPT-VQE and spin-projected ADAPT-VQE statevector simulator"};
  app.require_subcommand(1);
  std::string config;
  const std::pair<const char*, const char*> verbs[] = {
      {"run", "run one ADAPT (or UCCSD) calculation"},
      {"compare-pools", "run several pool/projection variants on one system"},
      {"scan", "run one variant over a list of geometries and report the non-parallelity error"},
      {"props", "run, then report unrelaxed and relaxed dipole moments"},
      {"fci", "exact ground state of the configured system"},
  };
  for (const auto& [name, help] : verbs)
    app.add_subcommand(name, help)->add_option("config", config, "JSON run configuration")->required();
  CLI11_PARSE(app, argc, argv);
  const std::string verb = app.get_subcommands().front()->get_name();
  return adaptvqe::cli::dispatch(verb, config, std::cout, std::cerr);
}
