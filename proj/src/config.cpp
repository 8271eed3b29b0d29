#include "sslbpinn/config.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace sslb {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double d = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value '" + value + "' for " + key);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const int i = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return i;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value '" + value + "' for " + key);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad seed value '" + value + "' for " + key);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ConfigError("config: bad boolean value '" + value + "' for " + key);
}

Eigen::Vector2d parse_pair(const std::string& key, const std::string& value) {
  const auto comma = value.find(',');
  if (comma == std::string::npos)
    throw ConfigError("config: expected 'a, b' pair for " + key + ", got '" + value + "'");
  return {parse_double(key, trim(value.substr(0, comma))),
          parse_double(key, trim(value.substr(comma + 1)))};
}

// skew.xi accepts a scalar (broadcast to both joints) or a comma pair.
Vec parse_xi(const std::string& key, const std::string& value) {
  if (value.find(',') == std::string::npos)
    return Vec::Constant(2, parse_double(key, value));
  const Eigen::Vector2d p = parse_pair(key, value);
  Vec out(2);
  out << p(0), p(1);
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_pair(const Eigen::Vector2d& v) { return fmt(v(0)) + ", " + fmt(v(1)); }

struct KeyEntry {
  std::function<void(SimConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const SimConfig&)> get;
};

const std::map<std::string, KeyEntry>& schema() {
  static const std::map<std::string, KeyEntry> table = [] {
    std::map<std::string, KeyEntry> m;
    auto num = [&m](const std::string& key, auto member) {
      m[key] = {[member](SimConfig& c, const std::string& k, const std::string& v) {
                  c.*member = parse_double(k, v);
                },
                [member](const SimConfig& c) { return fmt(c.*member); }};
    };
    auto plant_num = [&m](const std::string& key, double RobotParams::* member) {
      m[key] = {[member](SimConfig& c, const std::string& k, const std::string& v) {
                  c.plant.*member = parse_double(k, v);
                },
                [member](const SimConfig& c) { return fmt(c.plant.*member); }};
    };
    auto gains_num = [&m](const std::string& key, double ControlGains::* member) {
      m[key] = {[member](SimConfig& c, const std::string& k, const std::string& v) {
                  c.gains.*member = parse_double(k, v);
                },
                [member](const SimConfig& c) { return fmt(c.gains.*member); }};
    };
    auto adapt_num = [&m](const std::string& key, double AdaptationConfig::* member) {
      m[key] = {[member](SimConfig& c, const std::string& k, const std::string& v) {
                  c.adaptation.*member = parse_double(k, v);
                },
                [member](const SimConfig& c) { return fmt(c.adaptation.*member); }};
    };
    auto skew_num = [&m](const std::string& key, double SkewGains::* member) {
      m[key] = {[member](SimConfig& c, const std::string& k, const std::string& v) {
                  c.skew.gains.*member = parse_double(k, v);
                },
                [member](const SimConfig& c) { return fmt(c.skew.gains.*member); }};
    };

    num("sim.duration_s", &SimConfig::duration_s);
    num("sim.dt_s", &SimConfig::dt_s);
    m["sim.seed"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                       c.seed = parse_u64(k, v);
                     },
                     [](const SimConfig& c) { return std::to_string(c.seed); }};
    m["sim.noise_enabled"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                                c.noise_enabled = parse_bool(k, v);
                              },
                              [](const SimConfig& c) {
                                return std::string(c.noise_enabled ? "true" : "false");
                              }};
    num("sim.snr_db", &SimConfig::snr_db);
    m["sim.mode"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                       if (v == "developed") c.mode = SimMode::Developed;
                       else if (v == "baseline") c.mode = SimMode::Baseline;
                       else if (v == "oracle_feedforward") c.mode = SimMode::OracleFeedforward;
                       else throw ConfigError("config: bad mode '" + v + "' for " + k);
                     },
                     [](const SimConfig& c) -> std::string {
                       switch (c.mode) {
                         case SimMode::Developed: return "developed";
                         case SimMode::Baseline: return "baseline";
                         case SimMode::OracleFeedforward: return "oracle_feedforward";
                       }
                       return "developed";
                     }};
    num("sim.abort_threshold", &SimConfig::abort_threshold);
    num("sim.input_radius", &SimConfig::input_radius);
    m["sim.q0"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                     c.q0 = parse_pair(k, v);
                   },
                   [](const SimConfig& c) { return fmt_pair(c.q0); }};
    m["sim.q_dot0"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                         c.q_dot0 = parse_pair(k, v);
                       },
                       [](const SimConfig& c) { return fmt_pair(c.q_dot0); }};

    m["trajectory.mode"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                              if (v == "literal") c.trajectory = TrajectoryMode::Literal;
                              else if (v == "ramp") c.trajectory = TrajectoryMode::Ramp;
                              else throw ConfigError("config: bad trajectory mode '" + v +
                                                     "' for " + k);
                            },
                            [](const SimConfig& c) -> std::string {
                              return c.trajectory == TrajectoryMode::Literal ? "literal" : "ramp";
                            }};

    plant_num("plant.m1", &RobotParams::m1);
    plant_num("plant.m2", &RobotParams::m2);
    plant_num("plant.l1", &RobotParams::l1);
    plant_num("plant.l2", &RobotParams::l2);
    plant_num("plant.p1", &RobotParams::p1);
    plant_num("plant.p2", &RobotParams::p2);
    plant_num("plant.p3", &RobotParams::p3);
    plant_num("plant.fd1", &RobotParams::fd1);
    plant_num("plant.fd2", &RobotParams::fd2);
    plant_num("plant.fs1", &RobotParams::fs1);
    plant_num("plant.fs2", &RobotParams::fs2);
    plant_num("plant.kappa_s", &RobotParams::kappa_s);
    plant_num("plant.g", &RobotParams::g);
    m["plant.gravity"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                            c.plant.gravity_on = parse_bool(k, v);
                          },
                          [](const SimConfig& c) {
                            return std::string(c.plant.gravity_on ? "on" : "off");
                          }};

    gains_num("gains.alpha", &ControlGains::alpha);
    gains_num("gains.k1", &ControlGains::k1);
    gains_num("gains.k2", &ControlGains::k2);
    gains_num("gains.k3", &ControlGains::k3);
    gains_num("gains.k4", &ControlGains::k4);
    gains_num("controller.sgn_smoothing", &ControlGains::sgn_smoothing);

    adapt_num("adaptation.gamma_M", &AdaptationConfig::gamma_M);
    adapt_num("adaptation.gamma_C", &AdaptationConfig::gamma_C);
    adapt_num("adaptation.gamma_F", &AdaptationConfig::gamma_F);
    adapt_num("adaptation.gamma_G", &AdaptationConfig::gamma_G);
    adapt_num("adaptation.theta_bound_M", &AdaptationConfig::theta_bound_M);
    adapt_num("adaptation.theta_bound_C", &AdaptationConfig::theta_bound_C);
    adapt_num("adaptation.theta_bound_F", &AdaptationConfig::theta_bound_F);
    adapt_num("adaptation.theta_bound_G", &AdaptationConfig::theta_bound_G);
    adapt_num("adaptation.proj_delta", &AdaptationConfig::proj_delta);

    m["dnn.hidden_layers"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                                c.dnn.hidden_layers = parse_int(k, v);
                              },
                              [](const SimConfig& c) {
                                return std::to_string(c.dnn.hidden_layers);
                              }};
    m["dnn.hidden_width"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                               c.dnn.hidden_width = parse_int(k, v);
                             },
                             [](const SimConfig& c) {
                               return std::to_string(c.dnn.hidden_width);
                             }};
    m["dnn.activation"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                             if (v == "tanh") c.dnn.activation = Activation::Tanh;
                             else if (v == "logistic") c.dnn.activation = Activation::Logistic;
                             else throw ConfigError("config: bad activation '" + v + "' for " + k);
                           },
                           [](const SimConfig& c) -> std::string {
                             return c.dnn.activation == Activation::Tanh ? "tanh" : "logistic";
                           }};

    m["skew.enabled"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                           c.skew.enabled = parse_bool(k, v);
                         },
                         [](const SimConfig& c) {
                           return std::string(c.skew.enabled ? "true" : "false");
                         }};
    m["skew.form"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                        if (v == "literal") c.skew.form = SkewForm::Literal;
                        else if (v == "simplified") c.skew.form = SkewForm::Simplified;
                        else throw ConfigError("config: bad skew form '" + v + "' for " + k);
                      },
                      [](const SimConfig& c) -> std::string {
                        return c.skew.form == SkewForm::Literal ? "literal" : "simplified";
                      }};
    skew_num("skew.gamma1", &SkewGains::gamma1);
    skew_num("skew.gamma2", &SkewGains::gamma2);
    skew_num("skew.gamma3", &SkewGains::gamma3);
    skew_num("skew.gamma4", &SkewGains::gamma4);
    m["skew.xi"] = {[](SimConfig& c, const std::string& k, const std::string& v) {
                      c.skew.gains.xi = parse_xi(k, v);
                    },
                    [](const SimConfig& c) {
                      return c.skew.gains.xi(0) == c.skew.gains.xi(1)
                                 ? fmt(c.skew.gains.xi(0))
                                 : fmt(c.skew.gains.xi(0)) + ", " + fmt(c.skew.gains.xi(1));
                    }};
    return m;
  }();
  return table;
}

}  // namespace

void apply_config_kv(SimConfig& config, const std::string& key, const std::string& value) {
  const auto it = schema().find(key);
  if (it == schema().end()) throw ConfigError("config: unknown key '" + key + "'");
  it->second.set(config, key, value);
}

std::string config_get(const SimConfig& config, const std::string& key) {
  const auto it = schema().find(key);
  if (it == schema().end()) throw ConfigError("config: unknown key '" + key + "'");
  return it->second.get(config);
}

SimConfig parse_config_text(const std::string& text) {
  SimConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: line " + std::to_string(line_no) + ": empty key or value");
    apply_config_kv(config, key, value);
  }
  config.validate();
  return config;
}

SimConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const SimConfig& config) {
  std::string out;
  for (const auto& [key, entry] : schema()) {
    out += key;
    out += " = ";
    out += entry.get(config);
    out += "\n";
  }
  return out;
}

std::string config_hash(const SimConfig& config) {
  const std::string text = serialize_config(config);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

}  // namespace sslb
