#ifndef QDSIM_CONFIG_HPP
#define QDSIM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdsim/decoherence.hpp"
#include "qdsim/eigensolver.hpp"
#include "qdsim/potentials.hpp"

namespace qdsim {

struct SweepSpec {
  std::string parameter = "w";  // "w" or "R"
  double start = 0.08;
  double stop = 0.34;
  int count = 6;
};

struct CnotConfig {
  std::vector<double> R;     // m; empty disables CNOT timing in sweeps
  double kappa = 12.8;
  double tune_lo = 0.97;     // v_b interval as factors of well.v_b
  double tune_hi = 1.03;
};

// Fully-validated run configuration with paper-silent values defaulted.
struct RunConfig {
  double grid_half_width_x = 30e-9;  // m
  double grid_half_width_y = 20e-9;  // m
  double grid_step = 0.5e-9;         // m

  DoubleWellParams well = DoubleWellParams::defaults();
  Materials materials = Materials::gaas();
  CnotConfig cnot;
  SweepSpec sweep;
  SolverOptions solver;
  QuadratureSpec quadrature;

  std::string output_dir = "out";
  bool longitudinal_cos4 = false;
  bool emit_svg = true;

  std::vector<std::string> warnings;            // non-fatal validity notes
  std::map<std::string, bool> provenance;       // key -> explicitly set
  std::uint64_t hash = 0;                       // of the effective settings

  Grid make_grid() const;
  bool is_explicit(const std::string& key) const;
};

// Parses line-oriented `key = value` text with `#` comments and dotted
// section prefixes. Unknown keys, unparsable values and invariant
// violations raise ConfigError with the offending line number.
RunConfig parse_config(const std::string& text);

// Canonical `key = value` rendering of the effective configuration.
std::string render_config(const RunConfig& cfg);

}  // namespace qdsim

#endif
