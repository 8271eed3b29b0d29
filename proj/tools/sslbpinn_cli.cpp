// Command-line front end. Talks to the simulator exclusively through the
// C API in sslbpinn.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sslbpinn.h"

namespace {

struct ConfigHandle {
  ss_config* ptr = nullptr;
  ~ConfigHandle() { ss_config_free(ptr); }
};
struct TraceHandle {
  ss_trace* ptr = nullptr;
  ~TraceHandle() { ss_trace_free(ptr); }
};
struct ReportHandle {
  ss_report* ptr = nullptr;
  ~ReportHandle() { ss_report_free(ptr); }
};

[[noreturn]] void die(int code, const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(code);
}

void check_status(ss_status status, const char* what) {
  if (status != SS_OK) die(status == SS_ERR_PARSE || status == SS_ERR_INVALID_ARGUMENT ? 2 : 1,
                           std::string(what) + ": " + ss_last_error());
}

// Precedence: --seed flag, then SSLBPINN_SEED, then the config file.
void apply_seed(ss_config* cfg, const std::optional<uint64_t>& flag_seed) {
  if (flag_seed) {
    check_status(ss_config_set_seed(cfg, *flag_seed), "set seed");
    return;
  }
  if (const char* env = std::getenv("SSLBPINN_SEED")) {
    try {
      size_t pos = 0;
      const uint64_t seed = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument("");
      check_status(ss_config_set_seed(cfg, seed), "set seed");
    } catch (const std::exception&) {
      die(2, std::string("bad SSLBPINN_SEED value '") + env + "'");
    }
  }
}

ConfigHandle load_config(const std::string& path, const std::vector<std::string>& overrides) {
  ConfigHandle cfg;
  check_status(ss_config_load(path.c_str(), &cfg.ptr), "load config");
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) die(2, "--set expects key=value, got '" + kv + "'");
    check_status(ss_config_set(cfg.ptr, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()),
                 "apply --set");
  }
  return cfg;
}

std::string out_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

void print_trace_summary(const ss_trace* trace) {
  const char* names[] = {"rms_e",     "rms_tau",   "rms_f_tilde", "rms_err_M",
                         "rms_err_C", "rms_err_F", "rms_E_tilde"};
  std::printf("rows: %zu%s\n", ss_trace_rows(trace), ss_trace_aborted(trace) ? " (ABORTED)" : "");
  for (const char* name : names) {
    double value = 0.0;
    check_status(ss_trace_metric(trace, name, &value), name);
    std::printf("%-12s %.6g\n", name, value);
  }
}

std::vector<uint64_t> parse_seed_range(const std::string& spec) {
  // "a..b" inclusive, or a comma list.
  std::vector<uint64_t> seeds;
  const auto dots = spec.find("..");
  try {
    if (dots != std::string::npos) {
      const uint64_t a = std::stoull(spec.substr(0, dots));
      const uint64_t b = std::stoull(spec.substr(dots + 2));
      if (b < a) throw std::invalid_argument("descending range");
      for (uint64_t s = a; s <= b; ++s) seeds.push_back(s);
    } else {
      size_t start = 0;
      while (start <= spec.size()) {
        const auto comma = spec.find(',', start);
        const std::string tok =
            spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) seeds.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  } catch (const std::exception&) {
    die(2, "bad --seeds spec '" + spec + "' (want a..b or a,b,c)");
  }
  if (seeds.empty()) die(2, "--seeds produced no seeds");
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SS-LbPINN adaptive controller simulation harness"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", seeds_spec, trace_path, plot_prefix;
  std::optional<uint64_t> seed_flag;
  std::vector<std::string> overrides;

  CLI::App* cmd_run = app.add_subcommand("run", "run one closed-loop simulation");
  cmd_run->add_option("--config", config_path, "config file")->required();
  cmd_run->add_option("--seed", seed_flag, "override the config seed");
  cmd_run->add_option("--out", out_dir, "output directory (default: out)");
  cmd_run->add_option("--set", overrides, "override a config key (key=value)");

  CLI::App* cmd_compare =
      app.add_subcommand("compare", "developed vs baseline over a seed set");
  cmd_compare->add_option("--config", config_path, "config file")->required();
  cmd_compare->add_option("--seeds", seeds_spec, "seed range a..b or list a,b,c")->required();
  cmd_compare->add_option("--out", out_dir, "output directory (default: out)");
  cmd_compare->add_option("--set", overrides, "override a config key (key=value)");

  CLI::App* cmd_check = app.add_subcommand("check", "run the built-in property suite");

  CLI::App* cmd_plot = app.add_subcommand("plot", "re-plot a trace CSV");
  cmd_plot->add_option("--trace", trace_path, "trace CSV produced by run")->required();
  cmd_plot->add_option("--out", plot_prefix, "output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_run->parsed()) {
    ConfigHandle cfg = load_config(config_path, overrides);
    apply_seed(cfg.ptr, seed_flag);
    TraceHandle trace;
    check_status(ss_simulate(cfg.ptr, &trace.ptr), "run");
    const std::string csv = out_path(out_dir, "trace.csv");
    check_status(ss_trace_export_csv(trace.ptr, csv.c_str()), "export csv");
    check_status(ss_trace_plot_svg(trace.ptr, out_path(out_dir, "trace").c_str()), "plot");
    print_trace_summary(trace.ptr);
    std::printf("trace: %s\n", csv.c_str());
    return 0;
  }

  if (cmd_compare->parsed()) {
    ConfigHandle cfg = load_config(config_path, overrides);
    const std::vector<uint64_t> seeds = parse_seed_range(seeds_spec);
    ReportHandle report;
    check_status(ss_compare(cfg.ptr, seeds.data(), seeds.size(), &report.ptr), "compare");

    size_t needed = 0;
    check_status(ss_report_table(report.ptr, nullptr, 0, &needed), "format table");
    std::string table(needed + 1, '\0');
    check_status(ss_report_table(report.ptr, table.data(), table.size(), nullptr),
                 "format table");
    std::fputs(table.c_str(), stdout);

    const std::string csv = out_path(out_dir, "report.csv");
    check_status(ss_report_export_csv(report.ptr, csv.c_str()), "export report");
    check_status(ss_report_plot_svg(report.ptr, out_path(out_dir, "compare").c_str()), "plot");
    std::printf("report: %s\n", csv.c_str());
    return 0;
  }

  if (cmd_check->parsed()) {
    const int failures = ss_self_check();
    std::printf("%s (%d failure%s)\n", failures == 0 ? "all checks passed" : "CHECKS FAILED",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
  }

  if (cmd_plot->parsed()) {
    TraceHandle trace;
    check_status(ss_trace_load_csv(trace_path.c_str(), &trace.ptr), "load trace");
    check_status(ss_trace_plot_svg(trace.ptr, plot_prefix.c_str()), "plot");
    std::printf("wrote %s_fig1.svg and %s_fig2.svg\n", plot_prefix.c_str(), plot_prefix.c_str());
    return 0;
  }

  return 2;
}
