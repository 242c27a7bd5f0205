#include "qdsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "qdsim/cnot.hpp"
#include "qdsim/constants.hpp"
#include "qdsim/decoherence.hpp"
#include "qdsim/error.hpp"
#include "qdsim/qubit.hpp"
#include "qdsim/version.hpp"

namespace qdsim {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? fmt17(*v) : std::string();
}

std::string iso_utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// One sweep point: solve, characterize, rates, optional CNOT tuning.
SweepRow compute_point(int index, double value, const RunConfig& cfg,
                       const Grid& grid) {
  SweepRow row;
  row.index = index;
  const bool r_sweep = cfg.sweep.parameter == "R";
  const double w = r_sweep ? cfg.well.w : value;
  row.w = w;
  row.quadrature_nodes = std::to_string(cfg.quadrature.n_theta) + "x" +
                         std::to_string(cfg.quadrature.n_phi);
  try {
    const DoubleWellParams params = cfg.well.with_w(w);
    ScalarField v = double_well_potential(params, grid);
    const SpectrumResult spectrum = lowest_states(v, params.m_eff, cfg.solver);
    row.solver_iterations = spectrum.iterations;

    const QubitCharacterization qc = characterize(spectrum);
    row.r_nm = qc.r / constants::nm;
    row.eps10_J = qc.eps10;
    row.t_not_s = qc.t_not;

    const RateBreakdown rates =
        rate_breakdown(spectrum, cfg.materials, qc.r, cfg.quadrature,
                       cfg.longitudinal_cos4);
    row.w_photon = rates.w_photon;
    row.w_da = rates.w_da;
    row.w_pa_t = rates.w_pa_t;
    row.w_pa_l = rates.w_pa_l;
    row.total = rates.total;
    row.dominant = mechanism_name(rates.dominant);

    const bool want_cnot = r_sweep || !cfg.cnot.R.empty();
    if (want_cnot) {
      const double R = r_sweep ? value * constants::nm : cfg.cnot.R.front();
      row.R_nm = R / constants::nm;
      // the control dot is an identical copy; its logical densities come
      // from this point's own solve
      const LogicalBasis basis =
          logical_basis(spectrum.states[0], spectrum.states[1]);
      ScalarField d0(grid, FieldKind::Density);
      ScalarField d1(grid, FieldKind::Density);
      for (std::size_t i = 0; i < d0.values().size(); ++i) {
        d0.values()[i] = basis.zero.values()[i] * basis.zero.values()[i];
        d1.values()[i] = basis.one.values()[i] * basis.one.values()[i];
      }
      const CnotGeometry geom{qc.r, R, cfg.cnot.kappa};
      const CnotTimings timings = tune_amplitude(
          params, geom, d0, d1,
          {cfg.cnot.tune_lo * params.v_b, cfg.cnot.tune_hi * params.v_b}, grid,
          cfg.solver);
      row.t_cnot_s = timings.t_cnot;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const RunConfig& cfg, bool with_timestamp) {
  std::ostringstream o;
  char hash_buf[24];
  std::snprintf(hash_buf, sizeof hash_buf, "%016llx",
                static_cast<unsigned long long>(cfg.hash));
  o << "# qdsim sweep v" << version << "\n"
    << "# config_hash: " << hash_buf << "\n";
  if (with_timestamp) {
    o << "# generated: " << iso_utc_now() << " (non-deterministic line)\n";
  }
  o << "# convention: control |1> density maximum nearer the target (distance R - r/2)\n"
    << "# longitudinal_integrand: " << (cfg.longitudinal_cos4 ? "cos4" : "cos5")
    << "\n"
    << "# units: w=1 R_nm=nm r_nm=nm eps10_J=J t_not_s=s t_cnot_s=s "
       "w_photon=1/s w_da=1/s w_pa_t=1/s w_pa_l=1/s total=1/s dominant=tag "
       "solver_iterations=count quadrature_nodes=theta_x_phi error=text\n";
  o << "w,R_nm,r_nm,eps10_J,t_not_s,t_cnot_s,w_photon,w_da,w_pa_t,w_pa_l,"
       "total,dominant,solver_iterations,quadrature_nodes,error\n";
  for (const SweepRow& r : rows) {
    o << fmt17(r.w) << ',' << opt_cell(r.R_nm) << ',' << opt_cell(r.r_nm) << ','
      << opt_cell(r.eps10_J) << ',' << opt_cell(r.t_not_s) << ','
      << opt_cell(r.t_cnot_s) << ',' << opt_cell(r.w_photon) << ','
      << opt_cell(r.w_da) << ',' << opt_cell(r.w_pa_t) << ','
      << opt_cell(r.w_pa_l) << ',' << opt_cell(r.total) << ','
      << csv_escape(r.dominant) << ',' << r.solver_iterations << ','
      << csv_escape(r.quadrature_nodes) << ',' << csv_escape(r.error) << "\n";
  }
  return o.str();
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<SweepRow> rows;

  auto split_csv = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      if (quoted) {
        if (c == '"' && i + 1 < s.size() && s[i + 1] == '"') {
          cur += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cur += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };

  int index = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (header.empty()) {
      header = cells;
      continue;
    }
    if (cells.size() != header.size()) {
      throw Error("sweep csv: row has " + std::to_string(cells.size()) +
                  " cells, header has " + std::to_string(header.size()));
    }
    SweepRow r;
    r.index = index++;
    auto cell = [&](const std::string& name) -> const std::string& {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return cells[i];
      }
      throw Error("sweep csv: missing column '" + name + "'");
    };
    auto opt_num = [&](const std::string& name) -> std::optional<double> {
      const std::string& s = cell(name);
      if (s.empty()) return std::nullopt;
      return std::stod(s);
    };
    r.w = std::stod(cell("w"));
    r.R_nm = opt_num("R_nm");
    r.r_nm = opt_num("r_nm");
    r.eps10_J = opt_num("eps10_J");
    r.t_not_s = opt_num("t_not_s");
    r.t_cnot_s = opt_num("t_cnot_s");
    r.w_photon = opt_num("w_photon");
    r.w_da = opt_num("w_da");
    r.w_pa_t = opt_num("w_pa_t");
    r.w_pa_l = opt_num("w_pa_l");
    r.total = opt_num("total");
    r.dominant = cell("dominant");
    r.solver_iterations = cell("solver_iterations").empty()
                              ? 0
                              : std::stol(cell("solver_iterations"));
    r.quadrature_nodes = cell("quadrature_nodes");
    r.error = cell("error");
    rows.push_back(std::move(r));
  }
  return rows;
}

SweepResult run_sweep(const RunConfig& cfg, const SweepOptions& opts) {
  const Grid grid = cfg.make_grid();
  const int count = cfg.sweep.count;
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) {
    values[i] = cfg.sweep.start +
                (cfg.sweep.stop - cfg.sweep.start) * i / (count - 1);
  }

  std::vector<SweepRow> rows(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      rows[i] = compute_point(i, values[i], cfg, grid);
    }
  };
  const int threads = std::max(1, opts.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads && t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult result;
  result.rows = std::move(rows);
  result.all_ok = true;
  for (const SweepRow& r : result.rows) {
    if (!r.error.empty()) result.all_ok = false;
  }
  result.csv = sweep_to_csv(result.rows, cfg, !opts.no_timestamp);

  std::filesystem::create_directories(cfg.output_dir);
  const std::string path = cfg.output_dir + "/sweep.csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("run_sweep: cannot write " + path);
  out << result.csv;
  return result;
}

}  // namespace qdsim
