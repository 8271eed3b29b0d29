#pragma once

// Deterministic CSV export for traces and comparison reports. Values are
// written with 17 significant digits so a reparse reproduces the trace.

#include <string>

#include "sslbpinn/metrics.hpp"
#include "sslbpinn/simulator.hpp"

namespace sslb {

// Column order: t,q1,q2,qd1,qd2,e1,e2,r1,r2,tau1,tau2,E_hat,E_tilde,
//               err_M,err_C,err_F,f_tilde_norm
std::string trace_csv(const SimTrace& trace);
void export_trace_csv(const SimTrace& trace, const std::string& path);

// Reads the rows back (metadata fields are not stored in the CSV).
SimTrace parse_trace_csv_text(const std::string& text);
SimTrace parse_trace_csv(const std::string& path);

std::string report_csv(const ComparisonReport& report);
void export_report_csv(const ComparisonReport& report, const std::string& path);

}  // namespace sslb
