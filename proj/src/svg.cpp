#include "sslbpinn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace sslb {

namespace {

constexpr double kWidth = 760, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string fmt(double v, int prec = 6) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<PlotSeries> fig1_series(const SimTrace& trace, const std::string& suffix,
                                    bool dashed) {
  std::vector<PlotSeries> out(3);
  const char* labels[3] = {"||M - Phi_M||", "||C - Phi_C||", "||F - Phi_F||"};
  const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
  for (int i = 0; i < 3; ++i) {
    out[static_cast<size_t>(i)].label = labels[i] + suffix;
    out[static_cast<size_t>(i)].color = colors[i];
    out[static_cast<size_t>(i)].dashed = dashed;
  }
  for (const TraceRow& row : trace.rows) {
    out[0].x.push_back(row.t);
    out[0].y.push_back(row.err_M);
    out[1].x.push_back(row.t);
    out[1].y.push_back(row.err_C);
    out[2].x.push_back(row.t);
    out[2].y.push_back(row.err_F);
  }
  return out;
}

PlotSeries fig2_series(const SimTrace& trace, const std::string& label, const std::string& color,
                       bool dashed) {
  PlotSeries s;
  s.label = label;
  s.color = color;
  s.dashed = dashed;
  for (const TraceRow& row : trace.rows) {
    s.x.push_back(row.t);
    s.y.push_back(row.f_tilde_norm);
  }
  return s;
}

}  // namespace

std::pair<double, double> nice_range(double lo, double hi) {
  if (!(lo <= hi)) std::swap(lo, hi);
  if (lo == hi) {
    const double pad = std::max(1.0, std::abs(lo)) * 0.5;
    return {lo - pad, hi + pad};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<PlotSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const PlotSeries& s : series) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = 0;
    xmax = 1;
    ymin = 0;
    ymax = 1;
  }
  const auto [x0, x1] = nice_range(xmin, xmax);
  const auto [y0, y1] = nice_range(ymin, ymax);

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\" "
         "font-family=\"sans-serif\">" + title + "</text>\n";

  // Axes with 5 ticks per side.
  svg += "<g stroke=\"#333\" stroke-width=\"1\" font-size=\"11\" font-family=\"sans-serif\">\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(kLeft + pw) +
         "\" y2=\"" + fmt(kTop + ph) + "\"/>\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(kTop + ph) + "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x0 + (x1 - x0) * i / 4.0;
    const double fy = y0 + (y1 - y0) * i / 4.0;
    svg += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(px(fx)) +
           "\" y2=\"" + fmt(kTop + ph + 5) + "\"/>\n";
    svg += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(kTop + ph + 18) +
           "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\">" + fmt(fx, 4) + "</text>\n";
    svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(py(fy)) + "\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py(fy) + 4) +
           "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333\">" + fmt(fy, 4) + "</text>\n";
  }
  svg += "<text x=\"" + fmt(kLeft + pw / 2) + "\" y=\"" + fmt(kHeight - 10) +
         "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\">" + x_label + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt(kTop + ph / 2) +
         "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\" transform=\"rotate(-90 16 " +
         fmt(kTop + ph / 2) + ")\">" + y_label + "</text>\n";
  svg += "</g>\n";

  // Downsample long series so files stay small.
  for (const PlotSeries& s : series) {
    if (s.x.empty()) continue;
    const size_t stride = std::max<size_t>(1, s.x.size() / 2000);
    std::string pts;
    for (size_t i = 0; i < s.x.size(); i += stride) {
      pts += fmt(px(s.x[i])) + "," + fmt(py(s.y[i])) + " ";
    }
    if ((s.x.size() - 1) % stride != 0)
      pts += fmt(px(s.x.back())) + "," + fmt(py(s.y.back())) + " ";
    svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.2\"";
    if (s.dashed) svg += " stroke-dasharray=\"6,4\"";
    svg += " points=\"" + pts + "\"/>\n";
  }

  // Legend.
  double ly = kTop + 8;
  for (const PlotSeries& s : series) {
    svg += "<line x1=\"" + fmt(kLeft + pw - 170) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
           fmt(kLeft + pw - 140) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"1.5\"" + (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    svg += "<text x=\"" + fmt(kLeft + pw - 134) + "\" y=\"" + fmt(ly + 4) +
           "\" font-size=\"11\" font-family=\"sans-serif\" fill=\"#333\">" + s.label +
           "</text>\n";
    ly += 16;
  }

  svg += "</svg>\n";
  return svg;
}

void export_trace_plots(const SimTrace& trace, const std::string& prefix) {
  write_file(prefix + "_fig1.svg",
             line_chart_svg("Individual function approximation errors", "t [s]", "RMS error",
                            fig1_series(trace, "", false)));
  write_file(prefix + "_fig2.svg",
             line_chart_svg("Overall function approximation error", "t [s]", "||f~|| [Nm]",
                            {fig2_series(trace, "||f~||", "#1f77b4", false)}));
}

void export_comparison_plots(const SimTrace& developed, const SimTrace& baseline,
                             const std::string& prefix) {
  auto series = fig1_series(developed, " (developed)", false);
  auto base = fig1_series(baseline, " (baseline)", true);
  series.insert(series.end(), base.begin(), base.end());
  write_file(prefix + "_fig1.svg",
             line_chart_svg("Individual function approximation errors", "t [s]", "RMS error",
                            series));
  write_file(prefix + "_fig2.svg",
             line_chart_svg("Overall function approximation error", "t [s]", "||f~|| [Nm]",
                            {fig2_series(developed, "developed", "#1f77b4", false),
                             fig2_series(baseline, "baseline", "#d62728", true)}));
}

}  // namespace sslb
