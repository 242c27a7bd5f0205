#include "qdsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"

namespace qdsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || !std::isfinite(x)) {
    throw Error("not a number: '" + v + "'");
  }
  return x;
}

long parse_long(const std::string& v) {
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0') {
    throw Error("not an integer: '" + v + "'");
  }
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error("not a boolean: '" + v + "'");
}

std::vector<double> parse_double_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw Error("empty list element");
    out.push_back(parse_double(item));
  }
  if (out.empty()) throw Error("empty list");
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Grid RunConfig::make_grid() const {
  return Grid::from_nm(grid_half_width_x / constants::nm,
                       grid_half_width_y / constants::nm,
                       grid_step / constants::nm);
}

bool RunConfig::is_explicit(const std::string& key) const {
  auto it = provenance.find(key);
  return it != provenance.end() && it->second;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool omega_explicit = false;

  using Setter = std::function<void(RunConfig&, const std::string&)>;
  const std::vector<std::pair<std::string, Setter>> registry = {
      {"grid.half_width_x_nm", [](RunConfig& c, const std::string& v) {
         c.grid_half_width_x = parse_double(v) * constants::nm; }},
      {"grid.half_width_y_nm", [](RunConfig& c, const std::string& v) {
         c.grid_half_width_y = parse_double(v) * constants::nm; }},
      {"grid.step_nm", [](RunConfig& c, const std::string& v) {
         c.grid_step = parse_double(v) * constants::nm; }},
      {"well.m_eff_rel", [](RunConfig& c, const std::string& v) {
         c.well.m_eff = parse_double(v) * constants::electron_mass; }},
      {"well.l_nm", [](RunConfig& c, const std::string& v) {
         c.well.l = parse_double(v) * constants::nm; }},
      {"well.v_b", [](RunConfig& c, const std::string& v) {
         c.well.v_b = parse_double(v); }},
      {"well.w", [](RunConfig& c, const std::string& v) {
         c.well.w = parse_double(v); }},
      {"well.omega", [&omega_explicit](RunConfig& c, const std::string& v) {
         c.well.omega = parse_double(v);
         omega_explicit = true; }},
      {"material.sound_speed", [](RunConfig& c, const std::string& v) {
         c.materials.s = parse_double(v); }},
      {"material.rho", [](RunConfig& c, const std::string& v) {
         c.materials.rho = parse_double(v); }},
      {"material.e14", [](RunConfig& c, const std::string& v) {
         c.materials.e14 = parse_double(v); }},
      {"material.kappa0", [](RunConfig& c, const std::string& v) {
         c.materials.kappa0 = parse_double(v); }},
      {"material.xi_ev", [](RunConfig& c, const std::string& v) {
         c.materials.xi = parse_double(v) * constants::electron_volt; }},
      {"material.kappa", [](RunConfig& c, const std::string& v) {
         c.materials.kappa = parse_double(v); }},
      {"cnot.R_nm", [](RunConfig& c, const std::string& v) {
         c.cnot.R.clear();
         for (double r : parse_double_list(v)) c.cnot.R.push_back(r * constants::nm); }},
      {"cnot.kappa", [](RunConfig& c, const std::string& v) {
         c.cnot.kappa = parse_double(v); }},
      {"cnot.tune_lo", [](RunConfig& c, const std::string& v) {
         c.cnot.tune_lo = parse_double(v); }},
      {"cnot.tune_hi", [](RunConfig& c, const std::string& v) {
         c.cnot.tune_hi = parse_double(v); }},
      {"sweep.parameter", [](RunConfig& c, const std::string& v) {
         if (v != "w" && v != "R") throw Error("must be 'w' or 'R'");
         c.sweep.parameter = v; }},
      {"sweep.start", [](RunConfig& c, const std::string& v) {
         c.sweep.start = parse_double(v); }},
      {"sweep.stop", [](RunConfig& c, const std::string& v) {
         c.sweep.stop = parse_double(v); }},
      {"sweep.count", [](RunConfig& c, const std::string& v) {
         c.sweep.count = static_cast<int>(parse_long(v)); }},
      {"solver.tol", [](RunConfig& c, const std::string& v) {
         c.solver.tol = parse_double(v); }},
      {"solver.max_iter", [](RunConfig& c, const std::string& v) {
         c.solver.max_iter = parse_long(v); }},
      {"solver.k", [](RunConfig& c, const std::string& v) {
         c.solver.k = static_cast<int>(parse_long(v)); }},
      {"quadrature.n_theta", [](RunConfig& c, const std::string& v) {
         c.quadrature.n_theta = static_cast<int>(parse_long(v)); }},
      {"quadrature.n_phi", [](RunConfig& c, const std::string& v) {
         c.quadrature.n_phi = static_cast<int>(parse_long(v)); }},
      {"output.dir", [](RunConfig& c, const std::string& v) {
         if (v.empty()) throw Error("empty path");
         c.output_dir = v; }},
      {"output.emit_svg", [](RunConfig& c, const std::string& v) {
         c.emit_svg = parse_bool(v); }},
      {"decoherence.longitudinal_cos4", [](RunConfig& c, const std::string& v) {
         c.longitudinal_cos4 = parse_bool(v); }},
  };
  for (const auto& [key, setter] : registry) {
    (void)setter;
    cfg.provenance[key] = false;
  }

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = std::find_if(registry.begin(), registry.end(),
                           [&](const auto& kv) { return kv.first == key; });
    if (it == registry.end()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    try {
      it->second(cfg, value);
    } catch (const std::exception& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + key +
                        ": " + e.what());
    }
    cfg.provenance[key] = true;
  }

  if (!omega_explicit) {
    cfg.well.omega = DoubleWellParams::default_omega(cfg.well.m_eff, cfg.well.l,
                                                     cfg.well.v_b);
  }

  // cross-field validation
  auto fail = [](const std::string& key, const std::string& why) {
    throw ConfigError("config: " + key + ": " + why);
  };
  try {
    cfg.make_grid();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: grid: ") + e.what());
  }
  try {
    cfg.well.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: well: ") + e.what());
  }
  try {
    cfg.materials.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: material: ") + e.what());
  }
  auto check_w = [&](const std::string& key, double w) {
    if (w < 0.05 || w > 0.5) fail(key, "w must lie in [0.05, 0.5], got " + fmt(w));
    if (w < 0.08 || w > 0.34) {
      cfg.warnings.push_back(key + " = " + fmt(w) +
                             " is outside the validated range [0.08, 0.34]");
    }
  };
  check_w("well.w", cfg.well.w);
  if (cfg.sweep.count < 2) fail("sweep.count", "must be at least 2");
  if (!(cfg.sweep.start < cfg.sweep.stop)) fail("sweep.start", "must be below sweep.stop");
  if (cfg.sweep.parameter == "w") {
    check_w("sweep.start", cfg.sweep.start);
    check_w("sweep.stop", cfg.sweep.stop);
  } else {
    if (cfg.sweep.start <= 0) fail("sweep.start", "R must be positive (nm)");
    if (cfg.cnot.R.empty()) {
      // R sweeps define their own geometry; nothing to check here.
    }
  }
  for (double r : cfg.cnot.R) {
    if (r <= 0) fail("cnot.R_nm", "separations must be positive");
  }
  if (cfg.cnot.kappa <= 0) fail("cnot.kappa", "must be positive");
  if (!(cfg.cnot.tune_lo > 0 && cfg.cnot.tune_lo < cfg.cnot.tune_hi)) {
    fail("cnot.tune_lo", "needs 0 < tune_lo < tune_hi");
  }
  if (!(cfg.solver.tol > 0)) fail("solver.tol", "must be positive");
  if (cfg.solver.max_iter < 1) fail("solver.max_iter", "must be positive");
  if (cfg.solver.k < 1 || cfg.solver.k > 8) fail("solver.k", "must be in [1, 8]");
  if (cfg.quadrature.n_theta < 4 || cfg.quadrature.n_phi < 4) {
    fail("quadrature.n_theta", "node counts must be at least 4");
  }

  // FNV-1a over the canonical rendering
  const std::string canon = render_config(cfg);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  cfg.hash = h;
  return cfg;
}

std::string render_config(const RunConfig& c) {
  std::ostringstream o;
  o << "grid.half_width_x_nm = " << fmt(c.grid_half_width_x / constants::nm) << "\n"
    << "grid.half_width_y_nm = " << fmt(c.grid_half_width_y / constants::nm) << "\n"
    << "grid.step_nm = " << fmt(c.grid_step / constants::nm) << "\n"
    << "well.m_eff_rel = " << fmt(c.well.m_eff / constants::electron_mass) << "\n"
    << "well.l_nm = " << fmt(c.well.l / constants::nm) << "\n"
    << "well.v_b = " << fmt(c.well.v_b) << "\n"
    << "well.w = " << fmt(c.well.w) << "\n"
    << "well.omega = " << fmt(c.well.omega) << "\n"
    << "material.sound_speed = " << fmt(c.materials.s) << "\n"
    << "material.rho = " << fmt(c.materials.rho) << "\n"
    << "material.e14 = " << fmt(c.materials.e14) << "\n"
    << "material.kappa0 = " << fmt(c.materials.kappa0) << "\n"
    << "material.xi_ev = " << fmt(c.materials.xi / constants::electron_volt) << "\n"
    << "material.kappa = " << fmt(c.materials.kappa) << "\n";
  o << "cnot.R_nm =";
  if (c.cnot.R.empty()) {
    o << " none";
  } else {
    for (std::size_t i = 0; i < c.cnot.R.size(); ++i) {
      o << (i ? ", " : " ") << fmt(c.cnot.R[i] / constants::nm);
    }
  }
  o << "\n"
    << "cnot.kappa = " << fmt(c.cnot.kappa) << "\n"
    << "cnot.tune_lo = " << fmt(c.cnot.tune_lo) << "\n"
    << "cnot.tune_hi = " << fmt(c.cnot.tune_hi) << "\n"
    << "sweep.parameter = " << c.sweep.parameter << "\n"
    << "sweep.start = " << fmt(c.sweep.start) << "\n"
    << "sweep.stop = " << fmt(c.sweep.stop) << "\n"
    << "sweep.count = " << c.sweep.count << "\n"
    << "solver.tol = " << fmt(c.solver.tol) << "\n"
    << "solver.max_iter = " << c.solver.max_iter << "\n"
    << "solver.k = " << c.solver.k << "\n"
    << "quadrature.n_theta = " << c.quadrature.n_theta << "\n"
    << "quadrature.n_phi = " << c.quadrature.n_phi << "\n"
    << "output.dir = " << c.output_dir << "\n"
    << "output.emit_svg = " << (c.emit_svg ? "true" : "false") << "\n"
    << "decoherence.longitudinal_cos4 = " << (c.longitudinal_cos4 ? "true" : "false")
    << "\n";
  return o.str();
}

}  // namespace qdsim
