// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "bhchaos/bogoliubov/bogoliubov.hpp"
#include "bhchaos/classical/dnlse.hpp"
#include "bhchaos/classical/husimi.hpp"
#include "bhchaos/classical/stability.hpp"
#include "bhchaos/core/sectors.hpp"
#include "bhchaos/csv.hpp"
#include "bhchaos/qdyn/decay.hpp"
#include "bhchaos/qdyn/evolve.hpp"
#include "bhchaos/spectra/overlap.hpp"
#include "bhchaos/spectra/rmt.hpp"
#include "bhchaos/spectra/statistics.hpp"

namespace bhchaos::cli {

using nlohmann::json;

namespace {

std::unique_ptr<CsvWriter> open_csv(const RunConfig& c, const std::vector<std::string>& header) {
  if (c.out.empty()) return nullptr;
  return std::make_unique<CsvWriter>(c.out + ".csv", header);
}

core::HamiltonianSpec static_spec(const RunConfig& c) {
  auto spec = c.hamiltonian();
  spec.field = 0.0;
  return spec;
}

// Blocks selected by --sector: "all" (every symmetry block), "full", or a label such as "k=0,odd".
std::vector<core::SparseHermitian> selected_blocks(const core::HamiltonianSpec& spec,
                                                   const core::BasisSet& basis,
                                                   const std::string& which) {
  auto h = core::build_hamiltonian(spec, basis);
  std::vector<core::SparseHermitian> out;
  if (which == "full" || (which == "all" && spec.disordered())) {
    out.push_back(std::move(h));
    return out;
  }
  if (spec.disordered()) fail(ErrorKind::usage, "disorder leaves only the full space");
  for (const auto& s : core::build_sectors(basis, h.tag.reflection_invariant())) {
    if (which == "all" || which == s.label()) out.push_back(core::project_to_sector(h, s));
  }
  if (out.empty()) fail(ErrorKind::usage, "no sector labelled '" + which + "'");
  return out;
}

json cmd_basis(const RunConfig& c, std::ostream& log) {
  const auto dim = core::hilbert_dimension(c.atoms, c.sites);
  auto basis = core::enumerate_basis(c.atoms, c.sites);
  auto sectors = core::build_sectors(basis);
  log << "dimension " << dim << "\n";
  log << "sector      dimension\n";
  auto csv = open_csv(c, {"sector", "kappa_index", "parity", "dimension"});
  json table = json::array();
  for (const auto& s : sectors) {
    log << s.label() << std::string(s.label().size() < 12 ? 12 - s.label().size() : 1, ' ')
        << s.dim << "\n";
    if (csv) {
      csv->raw_row({s.label(), std::to_string(s.kappa_index), core::to_string(s.parity),
                    std::to_string(s.dim)});
    }
    table.push_back({{"sector", s.label()}, {"dimension", s.dim}});
  }
  return {{"dimension", dim}, {"sectors", table}};
}

json cmd_spectrum(const RunConfig& c, std::ostream& log) {
  const auto spec = static_spec(c);
  auto basis = core::enumerate_basis(c.atoms, c.sites);
  auto csv = open_csv(c, {"sector", "index", "eigenvalue"});
  json blocks = json::array();
  Real ground = INFINITY;
  for (const auto& h : selected_blocks(spec, basis, c.sector)) {
    auto s = spectra::eigenvalues_of(h);
    for (Index i = 0; i < s.size(); ++i) {
      if (csv) csv->raw_row({h.tag.sector, std::to_string(i), format_real(s.eigenvalues(i))});
    }
    if (s.size()) ground = std::min(ground, s.eigenvalues(0));
    blocks.push_back({{"sector", h.tag.sector}, {"levels", s.size()}});
    log << h.tag.sector << ": " << s.size() << " levels\n";
  }
  return {{"blocks", blocks}, {"ground_energy", ground}};
}

json cmd_sweep_u(const RunConfig& c, std::ostream& log) {
  auto basis = core::enumerate_basis(c.atoms, c.sites);
  const std::string which = c.sector == "all" ? "full" : c.sector;
  auto csv = open_csv(c, {"u", "index", "eigenvalue"});
  json gaps = json::array();
  for (int p = 0; p < c.points; ++p) {
    const Real u = c.points == 1 ? c.u_min : c.u_min + (c.u_max - c.u_min) * p / (c.points - 1);
    auto spec = core::HamiltonianSpec::from_u(c.atoms, c.sites, u);
    if (c.epsilon_max > 0.0) spec.with_disorder(c.epsilon_max, c.seed);
    spec.phase = c.theta;
    std::vector<Real> levels;
    for (const auto& h : selected_blocks(spec, basis, which)) {
      auto s = spectra::eigenvalues_of(h);
      levels.insert(levels.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    }
    std::sort(levels.begin(), levels.end());
    Real min_gap = INFINITY;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (csv) csv->row({u, static_cast<Real>(i), levels[i]});
      if (i) min_gap = std::min(min_gap, levels[i] - levels[i - 1]);
    }
    gaps.push_back(min_gap);
  }
  log << "swept " << c.points << " points of u in [" << c.u_min << ", " << c.u_max << "] ("
      << which << ")\n";
  return {{"points", c.points}, {"sector", which}, {"min_gap_per_point", gaps}};
}

json cmd_stats(const RunConfig& c, std::ostream& log) {
  const auto spec = static_spec(c);
  std::vector<spectra::UnfoldedSpacings> parts;
  json blocks = json::array();
  for (auto& s : spectra::block_spectra(spec)) {
    if (s.size() < 50) {
      blocks.push_back({{"sector", s.tag.sector}, {"levels", s.size()}, {"used", false}});
      continue;
    }
    auto model = spectra::fit_density(s.eigenvalues);
    parts.push_back(spectra::unfold(s.eigenvalues, model, c.trim));
    blocks.push_back({{"sector", s.tag.sector}, {"levels", s.size()}, {"used", true}});
  }
  if (parts.empty()) fail(ErrorKind::insufficient_data, "no block has 50 or more levels");
  auto pooled = spectra::pool(parts);
  json ks;
  for (auto law : {spectra::SpacingLaw::poisson, spectra::SpacingLaw::goe, spectra::SpacingLaw::gue}) {
    ks[spectra::to_string(law)] = spectra::ks_distance(pooled, law);
  }
  auto csv = open_csv(c, {"s", "I_empirical", "I_poisson", "I_goe", "I_gue"});
  if (csv) {
    auto cdf = spectra::integrated_distribution(pooled);
    for (Real s : cdf.sorted()) {
      csv->row({s, cdf(s), spectra::reference_cdf(spectra::SpacingLaw::poisson, s),
                spectra::reference_cdf(spectra::SpacingLaw::goe, s),
                spectra::reference_cdf(spectra::SpacingLaw::gue, s)});
    }
  }
  log << "pooled " << pooled.size() << " spacings; KS poisson " << ks["poisson"].get<Real>()
      << ", goe " << ks["goe"].get<Real>() << ", gue " << ks["gue"].get<Real>() << "\n";
  return {{"blocks", blocks}, {"spacings", pooled.size()}, {"ks", ks}};
}

json cmd_rmt(const RunConfig& c, std::ostream& log) {
  const auto kind = c.ensemble == "goe" ? spectra::Ensemble::goe : spectra::Ensemble::gue;
  const auto law = c.ensemble == "goe" ? spectra::SpacingLaw::goe : spectra::SpacingLaw::gue;
  auto csv = open_csv(c, {"dim", "s"});
  json per_dim = json::array();
  for (int d : c.dims) {
    spectra::UnfoldedSpacings sp;
    json entry = {{"dim", d}};
    if (d == 2) {
      sp = spectra::two_level_spacings(kind, c.samples, c.seed);
    } else {
      auto s = spectra::sample_rmt(kind, d, c.seed);
      const Real edge = 2.0 * d / kPi;
      std::vector<Real> ev(s.eigenvalues.begin(), s.eigenvalues.end());
      entry["semicircle_l1"] = spectra::histogram_l1(
          ev, [d](Real e) { return spectra::semicircle_density(e, d); }, -edge, edge, 40);
      sp = spectra::unfold(
          s.eigenvalues, [d](Real e) { return spectra::semicircle_density(e, d); }, c.trim);
    }
    if (sp.size() >= 20) entry["ks"] = spectra::ks_distance(sp, law);
    if (csv) {
      for (Real s : sp.s) csv->row({static_cast<Real>(d), s});
    }
    log << c.ensemble << " dim " << d << ": " << entry.dump() << "\n";
    per_dim.push_back(entry);
  }
  return {{"ensemble", c.ensemble}, {"results", per_dim}};
}

json cmd_overlap(const RunConfig& c, std::ostream& log) {
  auto spec = static_spec(c);
  auto spec_p = spec;
  spec_p.interaction = c.u_prime;
  auto basis = core::enumerate_basis(c.atoms, c.sites);
  auto h = core::build_hamiltonian(spec, basis);
  auto hp = core::build_hamiltonian(spec_p, basis);
  json res;
  spectra::OverlapMatrix r;
  if (h.is_real() && hp.is_real()) {
    r = spectra::overlap_matrix(spectra::eigh<Real>(hp, true), spectra::eigh<Real>(h, true));
  } else {
    r = spectra::overlap_matrix(spectra::eigh<Complex>(hp, true), spectra::eigh<Complex>(h, true));
  }
  const int d_max = std::min<int>(50, static_cast<int>(r.R.rows() / 3));
  auto fit = spectra::breit_wigner_fit(r, spectra::central_third(r.R.rows()), d_max);
  auto csv = open_csv(c, {"d", "R_mean", "fit"});
  if (csv) {
    for (int d = -d_max; d <= d_max; ++d) {
      csv->row({static_cast<Real>(d), fit.at(d), spectra::breit_wigner(d, fit.gamma)});
    }
  }
  log << "Gamma " << fit.gamma << ", relative residual " << fit.relative_residual << "\n";
  return {{"gamma", fit.gamma},
          {"relative_residual", fit.relative_residual},
          {"d_max", d_max},
          {"stochasticity_defect", r.stochasticity_defect()}};
}

json cmd_bloch_quantum(const RunConfig& c, std::ostream& log) {
  auto spec = c.hamiltonian();
  const Real t_max = c.resolved_t_max();
  const Real dt = c.dt.value_or(qdyn::default_time_step(spec));
  auto basis = core::enumerate_basis(c.atoms, c.sites);
  qdyn::StateVector psi0;
  json warnings = json::array();
  if (c.initial == "bec") {
    psi0 = qdyn::bec_state(basis);
  } else {
    auto stat = spec;
    stat.field = 0.0;
    stat.phase = 0.0;
    auto gs = qdyn::ground_state(core::build_hamiltonian(stat, basis));
    for (auto& w : gs.warnings) warnings.push_back(w);
    psi0 = gs.state;
  }
  log << "evolving dim " << basis.size() << " to t = " << t_max << " with dt = " << dt << "\n";
  auto rec = qdyn::evolve(psi0, spec, t_max, dt, c.sample_every);
  auto csv = open_csv(c, {"t", "p", "S"});
  if (csv) {
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
      csv->row({rec.times[i], rec.momentum[i], rec.entropy[i]});
    }
  }
  json res = {{"dimension", basis.size()},
              {"dt", rec.dt},
              {"steps", rec.steps},
              {"t_max", t_max},
              {"norm_drift", rec.norm_drift},
              {"final_entropy", rec.entropy.back()}};
  if (spec.field > 0.0) {
    try {
      auto fit = qdyn::fit_decay(rec);
      res["gamma"] = fit.gamma;
      res["decay_residual"] = fit.residual;
      res["extrema"] = fit.extrema.size();
      log << "gamma " << fit.gamma << " (log residual " << fit.residual << ")\n";
    } catch (const Error& e) {
      warnings.push_back(std::string("decay fit skipped: ") + e.what());
    }
  }
  res["warnings"] = warnings;
  return res;
}

json cmd_bloch_classical(const RunConfig& c, std::ostream& log) {
  auto spec = c.hamiltonian();
  const Real t_max = c.resolved_t_max();
  const Real lambda = spec.interaction * spec.atoms;
  const Real g = lambda / spec.sites;
  classical::DnlseParams params{spec.hopping, spec.field, lambda, spec.phase};
  const Real dt = c.dt.value_or(spec.field > 0.0
                                    ? std::min(classical::default_classical_step(spec.hopping),
                                               2.0 * kPi / spec.field / 500.0)
                                    : classical::default_classical_step(spec.hopping));
  auto ens = classical::sample_husimi_bec(c.atoms, c.sites, c.members, c.seed);
  log << "evolving " << c.members << " Husimi members to t = " << t_max << "\n";
  auto rec = classical::ensemble_evolve(ens, params, t_max, dt, c.sample_every, c.order);
  auto csv = open_csv(c, {"t", "p_mean", "p_stderr"});
  if (csv) {
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
      csv->row({rec.times[i], rec.p_mean[i], rec.p_stderr[i]});
    }
  }
  json res = {{"lambda", lambda}, {"g", g},         {"members", rec.members},
              {"dt", dt},         {"t_max", t_max}, {"ordering_scale", rec.scale}};
  if (spec.hopping > 0.0) {
    auto fc = classical::critical_field(spec.hopping, g);
    res["F_cr_weak"] = fc.weak;
    res["F_cr_strong"] = fc.strong;
  }
  if (spec.field > 0.0 && spec.sites >= 3) {
    auto m = classical::monodromy(spec.hopping, g, spec.field, spec.sites);
    res["classification"] = classical::to_string(m.classification);
    res["max_exponent"] = m.max_exponent;
  }
  return res;
}

json cmd_stability(const RunConfig& c, std::ostream& log) {
  auto spec = c.hamiltonian();
  const Real g = c.g.value_or(spec.interaction * spec.atoms / spec.sites);
  std::vector<Real> fields = c.fields;
  if (fields.empty()) fields.push_back(c.field);
  auto csv = open_csv(c, {"F", "max_abs_multiplier", "max_exponent", "stable"});
  json rows = json::array();
  for (Real f : fields) {
    if (!(f > 0.0)) fail(ErrorKind::usage, "stability needs F > 0");
    auto m = classical::monodromy(spec.hopping, g, f, spec.sites);
    const Real top = m.multipliers.cwiseAbs().maxCoeff();
    if (csv) csv->row({f, top, m.max_exponent, m.classification == classical::Stability::stable ? 1.0 : 0.0});
    log << "F = " << f << ": " << classical::to_string(m.classification) << " (max |lambda| "
        << top << ")\n";
    rows.push_back({{"F", f},
                    {"classification", classical::to_string(m.classification)},
                    {"max_abs_multiplier", top},
                    {"pairing_defect", m.pairing_defect}});
  }
  auto fc = classical::critical_field(spec.hopping, g);
  return {{"g", g}, {"F_cr_weak", fc.weak}, {"F_cr_strong", fc.strong}, {"scan", rows}};
}

json cmd_bogoliubov(const RunConfig& c, std::ostream& log) {
  auto spec = static_spec(c);
  auto levels = bogoliubov::semiclassical_levels(spec.atoms, spec.sites, spec.hopping,
                                                 spec.interaction, c.n_max);
  auto basis = core::enumerate_basis(spec.atoms, spec.sites);
  auto exact = spectra::eigenvalues_of(core::build_hamiltonian(spec, basis));
  auto rep = bogoliubov::compare_with_exact(levels, exact);
  auto csv = open_csv(c, {"n", "predicted", "exact_mean", "deviation", "multiplicity"});
  json rows = json::array();
  for (const auto& r : rep.rows) {
    if (csv) {
      csv->row({static_cast<Real>(r.n), r.predicted, r.exact_mean, r.deviation,
                static_cast<Real>(r.multiplicity)});
    }
    rows.push_back({{"n", r.n}, {"deviation", r.deviation}, {"multiplicity", r.multiplicity}});
  }
  log << "Omega " << levels.omega << ", g " << levels.g;
  if (rep.breakdown) log << ", breakdown at n = " << *rep.breakdown;
  log << "\n";
  json res = {{"omega", levels.omega}, {"g", levels.g}, {"U", spec.interaction}, {"rows", rows}};
  res["breakdown"] = rep.breakdown ? json(*rep.breakdown) : json();
  return res;
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::domain:
    case ErrorKind::capacity:
    case ErrorKind::representation:
    case ErrorKind::dimension:
    case ErrorKind::symmetry:
    case ErrorKind::provenance:
      return 2;
    default:
      return 3;
  }
}

json run(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  json results;
  switch (config.command) {
    case Command::basis: results = cmd_basis(config, log); break;
    case Command::spectrum: results = cmd_spectrum(config, log); break;
    case Command::sweep_u: results = cmd_sweep_u(config, log); break;
    case Command::stats: results = cmd_stats(config, log); break;
    case Command::rmt: results = cmd_rmt(config, log); break;
    case Command::overlap: results = cmd_overlap(config, log); break;
    case Command::bloch_quantum: results = cmd_bloch_quantum(config, log); break;
    case Command::bloch_classical: results = cmd_bloch_classical(config, log); break;
    case Command::stability: results = cmd_stability(config, log); break;
    case Command::bogoliubov: results = cmd_bogoliubov(config, log); break;
  }
  const auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json summary = {{"command", to_string(config.command)},
                  {"config", config.to_json()},
                  {"seed", config.seed},
                  {"results", results},
                  {"wall_time_s", wall}};
  if (!config.out.empty()) {
    std::ofstream f(config.out + ".json");
    if (!f) fail(ErrorKind::usage, "cannot write " + config.out + ".json");
    f << summary.dump(2) << "\n";
  }
  return summary;
}

int run_main(int argc, char** argv) {
  RunConfig cfg;
  try {
    // The config file is read first so that flags override it.
    for (int i = 1; i + 1 < argc; ++i) {
      if (std::string(argv[i]) == "--config") {
        std::ifstream f(argv[i + 1]);
        if (!f) fail(ErrorKind::usage, std::string("cannot open config ") + argv[i + 1]);
        json j;
        try {
          f >> j;
        } catch (const json::exception& e) {
          fail(ErrorKind::usage, std::string("config is not valid JSON: ") + e.what());
        }
        cfg.merge_json(j);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }

  CLI::App app{"Bose-Hubbard quantum-chaos laboratory"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with keys named like the flags");
  app.add_option("--n", cfg.atoms, "number of atoms N");
  app.add_option("--l", cfg.sites, "number of sites L");
  app.add_option("--j", cfg.hopping, "hopping J");
  app.add_option("--u", cfg.interaction, "interaction U");
  app.add_option_function<double>("--u-param", [&](double v) { cfg.u_param = v; },
                                  "u with J = 1 - u, U = u");
  app.add_option_function<double>("--g", [&](double v) { cfg.g = v; },
                                  "macroscopic coupling g = U N / L (sets U)");
  app.add_option("--epsilon-max", cfg.epsilon_max, "on-site disorder bound");
  app.add_option("--theta", cfg.theta, "Peierls phase");
  app.add_option("--f", cfg.field, "static force F");
  app.add_option_function<double>("--dt", [&](double v) { cfg.dt = v; }, "time step");
  app.add_option("--t-max", cfg.t_max, "duration, a number or '<x>-periods'");
  app.add_option("--trim", cfg.trim, "fraction of levels cut at each spectrum edge");
  app.add_option("--members", cfg.members, "Husimi ensemble size");
  app.add_option("--n-max", cfg.n_max, "highest semiclassical level");
  app.add_option("--dims", cfg.dims, "random-matrix dimensions")->delimiter(',');
  app.add_option("--samples", cfg.samples, "random-matrix samples for dimension 2");
  app.add_option("--points", cfg.points, "grid points of sweep-u");
  app.add_option("--u-min", cfg.u_min, "sweep-u lower end");
  app.add_option("--u-max", cfg.u_max, "sweep-u upper end");
  app.add_option("--u-prime", cfg.u_prime, "second interaction U' of overlap");
  app.add_option("--fields", cfg.fields, "forces scanned by stability")->delimiter(',');
  app.add_option("--sector", cfg.sector, "all, full, or a label such as k=0,odd");
  app.add_option("--ensemble", cfg.ensemble, "goe or gue");
  app.add_option("--initial", cfg.initial, "ground or bec");
  app.add_option("--sample-every", cfg.sample_every, "record every n-th step");
  app.add_option("--order", cfg.order, "DNLSE splitting order (2, 4, 6)");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--out", cfg.out, "artifact prefix: writes <out>.csv and <out>.json");

  std::vector<CLI::App*> subs;
  for (const auto& name : command_names()) subs.push_back(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (auto* s : subs) {
    if (s->parsed()) cfg.command = *parse_command(s->get_name());
  }
  if (app.get_subcommands().empty() && config_path.empty()) {
    std::cerr << "error: usage: no command given\n" << app.help();
    return 2;
  }

  try {
    auto summary = run(cfg, std::cout);
    if (cfg.out.empty()) std::cout << summary.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bhchaos::cli
