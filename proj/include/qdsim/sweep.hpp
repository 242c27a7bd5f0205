#ifndef QDSIM_SWEEP_HPP
#define QDSIM_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "qdsim/config.hpp"

namespace qdsim {

// One design point of a parameter sweep. Optional fields stay empty in the
// CSV when the quantity was not computed (no geometry, or the point failed).
struct SweepRow {
  int index = 0;
  double w = 0;                    // barrier width parameter of the point
  std::optional<double> R_nm;      // dot separation, R-sweeps / geometry runs
  std::optional<double> r_nm;      // measured density-maxima separation
  std::optional<double> eps10_J;
  std::optional<double> t_not_s;
  std::optional<double> t_cnot_s;
  std::optional<double> w_photon;
  std::optional<double> w_da;
  std::optional<double> w_pa_t;
  std::optional<double> w_pa_l;
  std::optional<double> total;
  std::string dominant;
  long solver_iterations = 0;
  std::string quadrature_nodes;    // "n_theta x n_phi"
  std::string error;               // empty on success
};

struct SweepOptions {
  int threads = 1;
  bool no_timestamp = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_ok = true;
  std::string csv;  // full CSV text as written
};

// Runs the configured sweep: per point a full solve, characterization,
// optional CNOT tuning, and the decoherence rate breakdown. Per-point
// failures land in the row's error column and the sweep continues.
SweepResult run_sweep(const RunConfig& cfg, const SweepOptions& opts = {});

// CSV with a '#' metadata header block; values printed with 17 significant
// digits so parsing reproduces them exactly.
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const RunConfig& cfg, bool with_timestamp);
std::vector<SweepRow> parse_sweep_csv(const std::string& text);

}  // namespace qdsim

#endif
