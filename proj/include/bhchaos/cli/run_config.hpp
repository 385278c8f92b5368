// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhchaos/common.hpp"
#include "bhchaos/core/hamiltonian.hpp"

namespace bhchaos::cli {

enum class Command {
  basis,
  spectrum,
  sweep_u,
  stats,
  rmt,
  overlap,
  bloch_quantum,
  bloch_classical,
  stability,
  bogoliubov,
};

const char* to_string(Command c) noexcept;
std::optional<Command> parse_command(const std::string& name);
std::vector<std::string> command_names();

/// Fully resolved settings of one run. JSON keys equal the long flag names.
struct RunConfig {
  Command command = Command::basis;

  // Physical parameters.
  int atoms = 5;                    // n
  int sites = 5;                    // l
  Real hopping = 1.0;               // j
  Real interaction = 0.0;           // u
  std::optional<Real> u_param;      // u-param: J = 1 - u, U = u
  std::optional<Real> g;            // g = U N / L; overrides u where used
  Real epsilon_max = 0.0;           // epsilon-max
  Real theta = 0.0;                 // theta
  Real field = 0.0;                 // f

  // Numerical parameters.
  std::optional<Real> dt;
  std::string t_max = "10-periods";  // number, or "<x>-periods" of 2 pi / F
  Real trim = 0.1;
  int members = 400;
  int n_max = 10;
  std::vector<int> dims = {2};
  int samples = 100000;
  int points = 101;
  Real u_min = 0.0;
  Real u_max = 1.0;
  Real u_prime = 0.0;
  std::vector<Real> fields;  // stability scan
  std::string sector = "all";
  std::string ensemble = "goe";
  std::string initial = "ground";
  int sample_every = 1;
  int order = 4;
  std::uint64_t seed = 1;
  std::string out;

  /// Hamiltonian parameters after applying u-param and g.
  core::HamiltonianSpec hamiltonian() const;
  /// t_max in time units.
  Real resolved_t_max() const;
  /// Throws ErrorKind::usage on inconsistent values.
  void validate() const;

  nlohmann::json to_json() const;
  /// Overwrites the fields present in j.
  void merge_json(const nlohmann::json& j);
};

/// Parses "<x>-periods" (period 2 pi / F) or a plain number.
Real parse_duration(const std::string& text, Real field);

}  // namespace bhchaos::cli
