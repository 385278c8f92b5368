// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/cli/run_config.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace bhchaos::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 10> kCommands = {{
    {Command::basis, "basis"},
    {Command::spectrum, "spectrum"},
    {Command::sweep_u, "sweep-u"},
    {Command::stats, "stats"},
    {Command::rmt, "rmt"},
    {Command::overlap, "overlap"},
    {Command::bloch_quantum, "bloch-quantum"},
    {Command::bloch_classical, "bloch-classical"},
    {Command::stability, "stability"},
    {Command::bogoliubov, "bogoliubov"},
}};

}  // namespace

const char* to_string(Command c) noexcept {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [cmd, name] : kCommands) out.emplace_back(name);
  return out;
}

Real parse_duration(const std::string& text, Real field) {
  static const std::string suffix = "-periods";
  try {
    if (text.size() > suffix.size() &&
        text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
      if (!(field > 0.0)) fail(ErrorKind::usage, "a duration in periods needs F > 0");
      std::size_t used = 0;
      const std::string head = text.substr(0, text.size() - suffix.size());
      const Real periods = std::stod(head, &used);
      if (used != head.size()) throw std::invalid_argument(text);
      return periods * 2.0 * kPi / field;
    }
    std::size_t used = 0;
    const Real t = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return t;
  } catch (const std::logic_error&) {
    fail(ErrorKind::usage, "cannot parse duration '" + text + "'");
  }
}

core::HamiltonianSpec RunConfig::hamiltonian() const {
  core::HamiltonianSpec spec;
  if (u_param) {
    spec = core::HamiltonianSpec::from_u(atoms, sites, *u_param);
  } else {
    spec.atoms = atoms;
    spec.sites = sites;
    spec.hopping = hopping;
    spec.interaction = interaction;
  }
  if (g) spec.interaction = *g * sites / atoms;
  if (epsilon_max > 0.0) spec.with_disorder(epsilon_max, seed);
  spec.phase = theta;
  spec.field = field;
  return spec;
}

Real RunConfig::resolved_t_max() const { return parse_duration(t_max, field); }

void RunConfig::validate() const {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::usage, what);
  };
  need(atoms >= 1, "--n must be at least 1");
  need(sites >= 2, "--l must be at least 2");
  need(std::isfinite(hopping) && std::isfinite(interaction), "--j and --u must be finite");
  need(epsilon_max >= 0.0, "--epsilon-max must be non-negative");
  need(field >= 0.0, "--f must be non-negative");
  need(!dt || *dt > 0.0, "--dt must be positive");
  need(trim >= 0.0 && trim <= 0.4, "--trim must lie in [0, 0.4]");
  need(members >= 1, "--members must be at least 1");
  need(n_max >= 0, "--n-max must be non-negative");
  need(samples >= 1, "--samples must be at least 1");
  need(points >= 1, "--points must be at least 1");
  need(sample_every >= 1, "--sample-every must be at least 1");
  need(order == 2 || order == 4 || order == 6, "--order must be 2, 4 or 6");
  need(ensemble == "goe" || ensemble == "gue", "--ensemble must be goe or gue");
  need(initial == "ground" || initial == "bec", "--initial must be ground or bec");
  for (int d : dims) need(d >= 2, "--dims entries must be at least 2");
  if (u_param) need(*u_param >= 0.0 && *u_param <= 1.0, "--u-param must lie in [0, 1]");
  if (g) need(*g >= 0.0, "--g must be non-negative");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = to_string(command);
  j["n"] = atoms;
  j["l"] = sites;
  j["j"] = hopping;
  j["u"] = interaction;
  j["u-param"] = u_param ? nlohmann::json(*u_param) : nlohmann::json();
  j["g"] = g ? nlohmann::json(*g) : nlohmann::json();
  j["epsilon-max"] = epsilon_max;
  j["theta"] = theta;
  j["f"] = field;
  j["dt"] = dt ? nlohmann::json(*dt) : nlohmann::json();
  j["t-max"] = t_max;
  j["trim"] = trim;
  j["members"] = members;
  j["n-max"] = n_max;
  j["dims"] = dims;
  j["samples"] = samples;
  j["points"] = points;
  j["u-min"] = u_min;
  j["u-max"] = u_max;
  j["u-prime"] = u_prime;
  j["fields"] = fields;
  j["sector"] = sector;
  j["ensemble"] = ensemble;
  j["initial"] = initial;
  j["sample-every"] = sample_every;
  j["order"] = order;
  j["seed"] = seed;
  j["out"] = out;
  return j;
}

void RunConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::usage, "config file must hold a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const auto& v = it.value();
      if (k == "command") {
        auto c = parse_command(v.get<std::string>());
        if (!c) fail(ErrorKind::usage, "unknown command '" + v.get<std::string>() + "' in config");
        command = *c;
      } else if (k == "n") atoms = v.get<int>();
      else if (k == "l") sites = v.get<int>();
      else if (k == "j") hopping = v.get<Real>();
      else if (k == "u") interaction = v.get<Real>();
      else if (k == "u-param") u_param = v.is_null() ? std::nullopt : std::optional<Real>(v.get<Real>());
      else if (k == "g") g = v.is_null() ? std::nullopt : std::optional<Real>(v.get<Real>());
      else if (k == "epsilon-max") epsilon_max = v.get<Real>();
      else if (k == "theta") theta = v.get<Real>();
      else if (k == "f") field = v.get<Real>();
      else if (k == "dt") dt = v.is_null() ? std::nullopt : std::optional<Real>(v.get<Real>());
      else if (k == "t-max") t_max = v.is_string() ? v.get<std::string>() : nlohmann::json(v.get<Real>()).dump();
      else if (k == "trim") trim = v.get<Real>();
      else if (k == "members") members = v.get<int>();
      else if (k == "n-max") n_max = v.get<int>();
      else if (k == "dims") dims = v.get<std::vector<int>>();
      else if (k == "samples") samples = v.get<int>();
      else if (k == "points") points = v.get<int>();
      else if (k == "u-min") u_min = v.get<Real>();
      else if (k == "u-max") u_max = v.get<Real>();
      else if (k == "u-prime") u_prime = v.get<Real>();
      else if (k == "fields") fields = v.get<std::vector<Real>>();
      else if (k == "sector") sector = v.get<std::string>();
      else if (k == "ensemble") ensemble = v.get<std::string>();
      else if (k == "initial") initial = v.get<std::string>();
      else if (k == "sample-every") sample_every = v.get<int>();
      else if (k == "order") order = v.get<int>();
      else if (k == "seed") seed = v.get<std::uint64_t>();
      else if (k == "out") out = v.get<std::string>();
      else if (k.rfind("_", 0) == 0) continue;  // comment keys
      else fail(ErrorKind::usage, "unknown config key '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::usage, std::string("bad config value: ") + e.what());
  }
}

}  // namespace bhchaos::cli
