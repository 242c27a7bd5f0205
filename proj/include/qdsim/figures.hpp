#ifndef QDSIM_FIGURES_HPP
#define QDSIM_FIGURES_HPP

#include <string>
#include <vector>

#include "qdsim/sweep.hpp"

namespace qdsim {

struct FigureReport {
  std::vector<std::string> written;  // file paths
  std::vector<std::string> notices;  // skipped plots with reasons
};

// Emits the design-curve plots as self-contained SVG 1.1 files:
//   t_not_vs_r.svg, t_cnot_vs_R.svg, rates_vs_r.svg (log y), eps10_vs_r.svg.
// Plots lacking data (missing column or fewer than two points) are skipped
// with a notice. Output is byte-deterministic for identical rows.
FigureReport emit_figures(const std::vector<SweepRow>& rows,
                          const std::string& out_dir);

}  // namespace qdsim

#endif
