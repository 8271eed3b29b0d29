#pragma once

// Self-contained SVG line charts for the approximation-error traces:
// fig1 = per-matrix errors over time, fig2 = overall ||f~|| over time,
// optionally with developed and baseline overlaid.

#include <string>
#include <vector>

#include "sslbpinn/simulator.hpp"

namespace sslb {

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

// Padded axis range covering [lo, hi] (expands degenerate ranges).
std::pair<double, double> nice_range(double lo, double hi);

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<PlotSeries>& series);

// Writes <prefix>_fig1.svg and <prefix>_fig2.svg for one trace.
void export_trace_plots(const SimTrace& trace, const std::string& prefix);

// Same figures with both arms overlaid (developed solid, baseline dashed).
void export_comparison_plots(const SimTrace& developed, const SimTrace& baseline,
                             const std::string& prefix);

}  // namespace sslb
