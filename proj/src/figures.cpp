#include "qdsim/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qdsim/error.hpp"

namespace qdsim {

namespace {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> pts;
};

std::string num(double v, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Tick positions with a 1/2/5 step covering [lo, hi].
std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  if (span <= 0) return {lo};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  double t = std::ceil(lo / step) * step;
  for (; t <= hi + 1e-12 * span; t += step) ticks.push_back(t);
  return ticks;
}

std::string line_plot_svg(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel, bool log_y,
                          std::vector<Series> series) {
  const double width = 720, height = 480;
  const double ml = 80, mr = 24, mt = 44, mb = 60;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  bool first = true;
  for (auto& s : series) {
    if (log_y) {
      s.pts.erase(std::remove_if(s.pts.begin(), s.pts.end(),
                                 [](const auto& p) { return p.second <= 0.0; }),
                  s.pts.end());
    }
    std::sort(s.pts.begin(), s.pts.end());
    for (const auto& [x, y] : s.pts) {
      const double yy = log_y ? std::log10(y) : y;
      if (first) {
        x_lo = x_hi = x;
        y_lo = y_hi = yy;
        first = false;
      } else {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, yy);
        y_hi = std::max(y_hi, yy);
      }
    }
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1;
  if (y_hi <= y_lo) y_hi = y_lo + 1;
  const double x_pad = 0.04 * (x_hi - x_lo);
  const double y_pad = 0.06 * (y_hi - y_lo);
  x_lo -= x_pad; x_hi += x_pad;
  y_lo -= y_pad; y_hi += y_pad;

  auto sx = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto sy = [&](double y) {
    const double yy = log_y ? std::log10(y) : y;
    return mt + ph - (yy - y_lo) / (y_hi - y_lo) * ph;
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
    << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
    << num(width) << " " << num(height) << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << num(width / 2)
    << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">" << title << "</text>\n";

  // frame
  o << "<rect x=\"" << num(ml) << "\" y=\"" << num(mt) << "\" width=\""
    << num(pw) << "\" height=\"" << num(ph)
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // x ticks
  for (double t : linear_ticks(x_lo, x_hi)) {
    const double px = sx(t);
    o << "<line x1=\"" << num(px, "%.2f") << "\" y1=\"" << num(mt + ph)
      << "\" x2=\"" << num(px, "%.2f") << "\" y2=\"" << num(mt + ph + 5)
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << num(px, "%.2f") << "\" y=\"" << num(mt + ph + 20)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
      << num(t) << "</text>\n";
  }
  // y ticks
  if (log_y) {
    const int d_lo = static_cast<int>(std::ceil(y_lo));
    const int d_hi = static_cast<int>(std::floor(y_hi));
    const int span = std::max(1, d_hi - d_lo);
    const int step = (span + 7) / 8 > 0 ? (span + 7) / 8 : 1;
    for (int d = d_lo; d <= d_hi; d += step) {
      const double py = mt + ph - (d - y_lo) / (y_hi - y_lo) * ph;
      o << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(py, "%.2f")
        << "\" x2=\"" << num(ml) << "\" y2=\"" << num(py, "%.2f")
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py + 4, "%.2f")
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e"
        << d << "</text>\n";
    }
  } else {
    for (double t : linear_ticks(y_lo, y_hi)) {
      const double py = mt + ph - (t - y_lo) / (y_hi - y_lo) * ph;
      o << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(py, "%.2f")
        << "\" x2=\"" << num(ml) << "\" y2=\"" << num(py, "%.2f")
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py + 4, "%.2f")
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(t) << "</text>\n";
    }
  }

  // axis labels
  o << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(height - 14)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
    << xlabel << "</text>\n"
    << "<text x=\"18\" y=\"" << num(mt + ph / 2)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
       "transform=\"rotate(-90 18 " << num(mt + ph / 2) << ")\">" << ylabel
    << "</text>\n";

  // series
  for (const Series& s : series) {
    if (s.pts.size() < 2) continue;
    o << "<polyline fill=\"none\" stroke=\"" << s.color
      << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.pts) {
      o << num(sx(x), "%.2f") << "," << num(sy(y), "%.2f") << " ";
    }
    o << "\"/>\n";
    for (const auto& [x, y] : s.pts) {
      o << "<circle cx=\"" << num(sx(x), "%.2f") << "\" cy=\""
        << num(sy(y), "%.2f") << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
    }
  }

  // legend
  if (series.size() > 1) {
    double ly = mt + 14;
    for (const Series& s : series) {
      o << "<line x1=\"" << num(ml + pw - 150) << "\" y1=\"" << num(ly - 4)
        << "\" x2=\"" << num(ml + pw - 126) << "\" y2=\"" << num(ly - 4)
        << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(ml + pw - 120) << "\" y=\"" << num(ly)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
        << "</text>\n";
      ly += 16;
    }
  }
  o << "</svg>\n";
  return o.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("emit_figures: cannot write " + path);
  out << content;
}

}  // namespace

FigureReport emit_figures(const std::vector<SweepRow>& rows,
                          const std::string& out_dir) {
  FigureReport report;
  std::filesystem::create_directories(out_dir);

  std::vector<const SweepRow*> ok;
  for (const SweepRow& r : rows) {
    if (r.error.empty()) ok.push_back(&r);
  }

  auto gather = [&](auto x_of, auto y_of) {
    std::vector<std::pair<double, double>> pts;
    for (const SweepRow* r : ok) {
      const auto x = x_of(*r);
      const auto y = y_of(*r);
      if (x && y) pts.emplace_back(*x, *y);
    }
    return pts;
  };

  auto emit_single = [&](const std::string& file, const std::string& title,
                         const std::string& xl, const std::string& yl,
                         std::vector<std::pair<double, double>> pts) {
    if (pts.size() < 2) {
      report.notices.push_back(file + " skipped: fewer than two data points");
      return;
    }
    const std::string path = out_dir + "/" + file;
    write_file(path, line_plot_svg(title, xl, yl, false,
                                   {{yl, "#1f77b4", std::move(pts)}}));
    report.written.push_back(path);
  };

  emit_single("t_not_vs_r.svg", "NOT duration vs density maxima separation",
              "r (nm)", "t_NOT (s)",
              gather([](const SweepRow& r) { return r.r_nm; },
                     [](const SweepRow& r) { return r.t_not_s; }));

  emit_single("t_cnot_vs_R.svg", "CNOT duration vs dot separation", "R (nm)",
              "t_CNOT (s)",
              gather([](const SweepRow& r) { return r.R_nm; },
                     [](const SweepRow& r) { return r.t_cnot_s; }));

  {
    const std::vector<std::pair<std::string, std::optional<double> SweepRow::*>>
        channels = {{"photon", &SweepRow::w_photon},
                    {"deformation", &SweepRow::w_da},
                    {"piezo T", &SweepRow::w_pa_t},
                    {"piezo L", &SweepRow::w_pa_l},
                    {"total", &SweepRow::total}};
    const std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c",
                                              "#9467bd", "#ff7f0e"};
    std::vector<Series> series;
    std::size_t pts_max = 0;
    for (std::size_t c = 0; c < channels.size(); ++c) {
      auto pts = gather([](const SweepRow& r) { return r.r_nm; },
                        [&](const SweepRow& r) { return r.*(channels[c].second); });
      pts_max = std::max(pts_max, pts.size());
      series.push_back({channels[c].first, palette[c], std::move(pts)});
    }
    if (pts_max < 2) {
      report.notices.push_back("rates_vs_r.svg skipped: fewer than two data points");
    } else {
      const std::string path = out_dir + "/rates_vs_r.svg";
      write_file(path, line_plot_svg("Spontaneous emission rates", "r (nm)",
                                     "rate (1/s)", true, std::move(series)));
      report.written.push_back(path);
    }
  }

  emit_single("eps10_vs_r.svg", "Tunnel splitting vs density maxima separation",
              "r (nm)", "eps10 (J)",
              gather([](const SweepRow& r) { return r.r_nm; },
                     [](const SweepRow& r) { return r.eps10_J; }));

  return report;
}

}  // namespace qdsim
