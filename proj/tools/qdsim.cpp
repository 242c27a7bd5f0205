#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qdsim/cnot.hpp"
#include "qdsim/config.hpp"
#include "qdsim/error.hpp"
#include "qdsim/constants.hpp"
#include "qdsim/decoherence.hpp"
#include "qdsim/figures.hpp"
#include "qdsim/qubit.hpp"
#include "qdsim/sweep.hpp"
#include "qdsim/version.hpp"

namespace {

using namespace qdsim;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdsim::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig load_config(const std::string& config_path, const std::string& out_dir,
                      bool longitudinal_cos4) {
  RunConfig cfg =
      parse_config(config_path.empty() ? std::string() : read_file(config_path));
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (longitudinal_cos4) cfg.longitudinal_cos4 = true;
  for (const std::string& w : cfg.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return cfg;
}

SpectrumResult solve_default_dot(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const ScalarField v = double_well_potential(cfg.well, grid);
  return lowest_states(v, cfg.well.m_eff, cfg.solver);
}

void print_spectrum(const SpectrumResult& sp) {
  std::printf("state     energy (J)        energy (meV)     residual\n");
  for (std::size_t i = 0; i < sp.energies.size(); ++i) {
    std::printf("%5zu  %16.9e  %14.9f  %10.3e\n", i, sp.energies[i],
                sp.energies[i] / constants::elementary_charge * 1e3,
                sp.residuals[i]);
  }
  std::printf("iterations: %ld\n", sp.iterations);
  std::printf("eps10 = %.9e J (%.6f ueV)\n", sp.eps10(),
              sp.eps10() / constants::elementary_charge * 1e6);
}

int cmd_solve(const RunConfig& cfg) {
  print_spectrum(solve_default_dot(cfg));
  return 0;
}

int cmd_characterize(const RunConfig& cfg) {
  const SpectrumResult sp = solve_default_dot(cfg);
  const QubitCharacterization qc = characterize(sp);
  std::printf("eps10       = %.9e J (%.6f ueV)\n", qc.eps10,
              qc.eps10 / constants::elementary_charge * 1e6);
  std::printf("delta_omega = %.9e rad/s\n", qc.delta_omega);
  std::printf("t_NOT       = %.9e s\n", qc.t_not);
  std::printf("1/t_NOT     = %.6f GHz\n", 1e-9 / qc.t_not);
  std::printf("r           = %.6f nm\n", qc.r / constants::nm);
  std::printf("loc(|0>, x>0) = %.9f\n", qc.loc0);
  std::printf("loc(|1>, x<0) = %.9f\n", qc.loc1);
  return 0;
}

int cmd_cnot(const RunConfig& cfg) {
  if (cfg.cnot.R.empty()) {
    throw qdsim::ConfigError("cnot: set cnot.R_nm in the config");
  }
  const Grid grid = cfg.make_grid();
  const SpectrumResult sp = solve_default_dot(cfg);
  const QubitCharacterization qc = characterize(sp);
  const LogicalBasis basis = logical_basis(sp.states[0], sp.states[1]);
  ScalarField d0(grid, FieldKind::Density);
  ScalarField d1(grid, FieldKind::Density);
  for (std::size_t i = 0; i < d0.values().size(); ++i) {
    d0.values()[i] = basis.zero.values()[i] * basis.zero.values()[i];
    d1.values()[i] = basis.one.values()[i] * basis.one.values()[i];
  }
  for (double R : cfg.cnot.R) {
    const CnotGeometry geom{qc.r, R, cfg.cnot.kappa};
    const CnotTimings t = tune_amplitude(
        cfg.well, geom, d0, d1,
        {cfg.cnot.tune_lo * cfg.well.v_b, cfg.cnot.tune_hi * cfg.well.v_b},
        grid, cfg.solver);
    const auto [fid_id, fid_not] = verify_cnot(t);
    std::printf("R = %.3f nm (r = %.3f nm, kappa = %.3f)\n",
                R / constants::nm, qc.r / constants::nm, cfg.cnot.kappa);
    std::printf("  t_NOT0   = %.9e s\n", t.t_not0);
    std::printf("  t_NOT1   = %.9e s\n", t.t_not1);
    std::printf("  t_CNOT   = %.9e s\n", t.t_cnot);
    std::printf("  n        = %ld (n_real = %.9f)%s\n", t.n, t.n_real,
                t.relabeled ? " [branches relabeled]" : "");
    std::printf("  v_b      = %.9e J\n", t.v_b_tuned);
    std::printf("  fidelity = identity %.9f, NOT %.9f\n", fid_id, fid_not);
  }
  return 0;
}

int cmd_rates(const RunConfig& cfg) {
  const SpectrumResult sp = solve_default_dot(cfg);
  const QubitCharacterization qc = characterize(sp);
  const RateBreakdown rb = rate_breakdown(sp, cfg.materials, qc.r,
                                          cfg.quadrature, cfg.longitudinal_cos4);
  std::printf("eps10          = %.9e J\n", qc.eps10);
  std::printf("r              = %.6f nm\n", qc.r / constants::nm);
  std::printf("W_photon       = %.9e 1/s\n", rb.w_photon);
  std::printf("W_photon_bound = %.9e 1/s\n", rb.w_photon_bound);
  std::printf("W_DA           = %.9e 1/s\n", rb.w_da);
  std::printf("W_PA(T)        = %.9e 1/s\n", rb.w_pa_t);
  std::printf("W_PA(L)        = %.9e 1/s\n", rb.w_pa_l);
  std::printf("total          = %.9e 1/s\n", rb.total);
  std::printf("dominant       = %s\n", mechanism_name(rb.dominant).c_str());
  return 0;
}

int cmd_sweep(const RunConfig& cfg, int threads, bool no_timestamp) {
  SweepOptions opts;
  opts.threads = threads;
  opts.no_timestamp = no_timestamp;
  const SweepResult result = run_sweep(cfg, opts);
  std::printf("wrote %s/sweep.csv (%zu points)\n", cfg.output_dir.c_str(),
              result.rows.size());
  for (const SweepRow& r : result.rows) {
    if (!r.error.empty()) {
      std::fprintf(stderr, "point %d (w = %g) failed: %s\n", r.index, r.w,
                   r.error.c_str());
    }
  }
  if (cfg.emit_svg) {
    const FigureReport rep = emit_figures(result.rows, cfg.output_dir);
    for (const std::string& f : rep.written) std::printf("wrote %s\n", f.c_str());
    for (const std::string& n : rep.notices) std::printf("%s\n", n.c_str());
  }
  return result.all_ok ? 0 : 1;
}

int cmd_figures(const RunConfig& cfg, const std::string& csv_path) {
  const auto rows = parse_sweep_csv(read_file(csv_path));
  const FigureReport rep = emit_figures(rows, cfg.output_dir);
  for (const std::string& f : rep.written) std::printf("wrote %s\n", f.c_str());
  for (const std::string& n : rep.notices) std::printf("%s\n", n.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdsim: double-well charge-qubit gate timing and decoherence"};
  app.set_version_flag("--version", std::string("qdsim ") + qdsim::version);

  std::string config_path;
  std::string out_dir;
  std::string csv_path;
  bool longitudinal_cos4 = false;
  bool no_timestamp = false;
  int threads = 1;

  app.add_option("--config", config_path, "configuration file (key = value lines)");
  app.add_option("--out", out_dir, "output directory (overrides output.dir)");
  app.add_flag("--longitudinal-cos4", longitudinal_cos4,
               "use the cos^4 theta longitudinal piezo integrand variant");
  app.add_flag("--no-timestamp", no_timestamp,
               "omit the timestamp line from CSV metadata");
  app.add_option("--threads", threads, "concurrent sweep points")
      ->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "solve the dot spectrum");
  auto* characterize_cmd =
      app.add_subcommand("characterize", "qubit characterization table");
  auto* cnot = app.add_subcommand("cnot", "conditional gate timings");
  auto* rates = app.add_subcommand("rates", "spontaneous emission rates");
  auto* sweep = app.add_subcommand("sweep", "full design-curve sweep");
  auto* figures = app.add_subcommand("figures", "re-plot SVG figures from a CSV");
  figures->add_option("--csv", csv_path, "sweep CSV file")->required();
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    const qdsim::RunConfig cfg =
        load_config(config_path, out_dir, longitudinal_cos4);
    if (solve->parsed()) return cmd_solve(cfg);
    if (characterize_cmd->parsed()) return cmd_characterize(cfg);
    if (cnot->parsed()) return cmd_cnot(cfg);
    if (rates->parsed()) return cmd_rates(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg, threads, no_timestamp);
    if (figures->parsed()) return cmd_figures(cfg, csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
