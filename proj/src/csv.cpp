#include "sslbpinn/csv.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sslb {

namespace {

constexpr const char* kTraceHeader =
    "t,q1,q2,qd1,qd2,e1,e2,r1,r2,tau1,tau2,E_hat,E_tilde,err_M,err_C,err_F,f_tilde_norm";
constexpr int kTraceColumns = 17;

void append_num(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::string trace_csv(const SimTrace& trace) {
  std::string out = kTraceHeader;
  out += "\n";
  for (const TraceRow& row : trace.rows) {
    const std::array<double, kTraceColumns> cols = {
        row.t, row.q(0), row.q(1), row.q_d(0), row.q_d(1), row.e(0), row.e(1), row.r(0),
        row.r(1), row.tau(0), row.tau(1), row.E_hat, row.E_tilde, row.err_M, row.err_C,
        row.err_F, row.f_tilde_norm};
    for (int i = 0; i < kTraceColumns; ++i) {
      if (i) out += ',';
      append_num(out, cols[static_cast<size_t>(i)]);
    }
    out += '\n';
  }
  return out;
}

void export_trace_csv(const SimTrace& trace, const std::string& path) {
  write_file(path, trace_csv(trace));
}

SimTrace parse_trace_csv_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("trace csv: empty input");
  if (line != kTraceHeader) throw IoError("trace csv: unexpected header");

  SimTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, kTraceColumns> cols{};
    size_t start = 0;
    for (int i = 0; i < kTraceColumns; ++i) {
      const size_t end = i + 1 < kTraceColumns ? line.find(',', start) : line.size();
      if (end == std::string::npos) throw IoError("trace csv: short row");
      cols[static_cast<size_t>(i)] = std::stod(line.substr(start, end - start));
      start = end + 1;
    }
    TraceRow row;
    row.t = cols[0];
    row.q << cols[1], cols[2];
    row.q_d << cols[3], cols[4];
    row.e << cols[5], cols[6];
    row.r << cols[7], cols[8];
    row.tau << cols[9], cols[10];
    row.q_dot.setZero();  // not a CSV column
    row.E_hat = cols[11];
    row.E_tilde = cols[12];
    row.err_M = cols[13];
    row.err_C = cols[14];
    row.err_F = cols[15];
    row.f_tilde_norm = cols[16];
    trace.rows.push_back(row);
  }
  return trace;
}

SimTrace parse_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace_csv_text(buf.str());
}

std::string report_csv(const ComparisonReport& report) {
  std::string out =
      "seed,arm,rms_f_tilde,rms_err_M,rms_err_C,rms_err_F,rms_E_tilde,rms_e,rms_tau,aborted\n";
  auto emit = [&out](const std::string& seed, const std::string& arm, const ArmMetrics& m) {
    out += seed;
    out += ',';
    out += arm;
    for (double v : {m.rms_f_tilde, m.rms_err_M, m.rms_err_C, m.rms_err_F, m.rms_E_tilde, m.rms_e,
                     m.rms_tau}) {
      out += ',';
      append_num(out, v);
    }
    out += ',';
    out += m.aborted ? '1' : '0';
    out += '\n';
  };
  for (const SeedComparison& sc : report.seeds) {
    emit(std::to_string(sc.seed), "developed", sc.developed);
    emit(std::to_string(sc.seed), "baseline", sc.baseline);
  }
  emit("median", "developed", report.median_developed);
  emit("median", "baseline", report.median_baseline);
  return out;
}

void export_report_csv(const ComparisonReport& report, const std::string& path) {
  write_file(path, report_csv(report));
}

}  // namespace sslb
