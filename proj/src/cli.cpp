#include "twophoton/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "twophoton/bell.hpp"
#include "twophoton/correlations.hpp"
#include "twophoton/geometry.hpp"
#include "twophoton/montecarlo.hpp"
#include "twophoton/pathmodel.hpp"
#include "twophoton/quantum_core.hpp"

namespace twophoton::cli {

namespace {

struct KeySpec {
  const char* key;
  const char* fallback;  // nullptr: no default
  const char* help;
};

// Every key is accepted both as --flag (dashes) and in a config file.
constexpr KeySpec kKeys[] = {
    {"output", nullptr, "Output file (default: stdout)"},
    {"kd", "2pi", "Emitter separation times wavenumber"},
    {"e0", "1", "Field amplitude E0"},
    {"visibility", "1", "Fringe visibility in [0, 1]"},
    {"eta", "1", "Detection efficiency in (0, 1]"},
    {"phase_grid", "0:2pi:73", "g2-scan: phase differences, list or lo:hi:n"},
    {"xi_grid", nullptr, "g2-scan: second-detector angles instead of phase_grid"},
    {"xi1", nullptr, "Angle of detector 1 (g2-scan reference, or CH setting r1)"},
    {"xi1_prime", nullptr, "CH setting r1' as a detector angle"},
    {"xi2", nullptr, "CH setting r2 as a detector angle"},
    {"xi2_prime", nullptr, "CH setting r2' as a detector angle"},
    {"phi1", nullptr, "CH setting r1 as a phase (default 0)"},
    {"phi1_prime", nullptr, "CH setting r1' as a phase (default pi/2)"},
    {"phi2", nullptr, "CH setting r2 as a phase (default pi/4)"},
    {"phi2_prime", nullptr, "CH setting r2' as a phase (default 3pi/4)"},
    {"v_grid", "0:1:101", "bell-test: visibilities, list or lo:hi:n"},
    {"seeds", "1:20", "mc-bell: seeds, list or first:last"},
    {"trials", "1000000", "mc-bell: trials per setting pair"},
    {"workers", "0", "mc-bell: worker threads (0 = all cores)"},
    {"grid", "100", "path-check: grid points per phase axis"},
};

using Values = std::map<std::string, std::string>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string snake_case(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

std::string flag_name(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

bool is_known_key(const std::string& key) {
  return std::any_of(std::begin(kKeys), std::end(kKeys),
                     [&](const KeySpec& k) { return key == k.key; });
}

double parse_plain(std::string_view text, const std::string& whole) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("not a number: '" + whole + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  std::uint64_t value = 0;
  const char* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, value);
  if (ec != std::errc() || ptr != end || t.empty()) {
    throw ConfigError(what + ": not a nonnegative integer: '" + token + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::optional<std::string> lookup(const Values& values, const std::string& key) {
  if (auto it = values.find(key); it != values.end()) return it->second;
  for (const KeySpec& k : kKeys) {
    if (key == k.key && k.fallback != nullptr) return std::string(k.fallback);
  }
  return std::nullopt;
}

double number_or(const Values& values, const std::string& key) {
  const auto text = lookup(values, key);
  if (!text) throw ConfigError("missing value for '" + key + "'");
  try {
    return parse_number(*text);
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

std::array<double, 4> resolve_ch_phases(const Values& values, double kd) {
  static constexpr const char* kXi[] = {"xi1", "xi1_prime", "xi2", "xi2_prime"};
  static constexpr const char* kPhi[] = {"phi1", "phi1_prime", "phi2", "phi2_prime"};

  const bool any_xi = std::any_of(std::begin(kXi), std::end(kXi),
                                  [&](const char* k) { return values.count(k) > 0; });
  const bool any_phi = std::any_of(std::begin(kPhi), std::end(kPhi),
                                   [&](const char* k) { return values.count(k) > 0; });
  if (any_xi && any_phi) {
    throw ConfigError("give CH settings either as phases (phi*) or as angles (xi*), not both");
  }

  std::array<double, 4> phases{};
  if (any_xi) {
    const EmitterPair pair(kd);
    for (std::size_t i = 0; i < 4; ++i) {
      if (values.count(kXi[i]) == 0) {
        throw ConfigError(std::string("angle settings need all of xi1, xi1_prime, xi2, xi2_prime; missing ") +
                          kXi[i]);
      }
      phases[i] = phase_at(pair, DetectorSetting(number_or(values, kXi[i])));
    }
    return phases;
  }

  const ChSettings bell = bell_angle_settings(Visibility{});
  const double defaults[] = {bell.phi1, bell.phi1_prime, bell.phi2, bell.phi2_prime};
  for (std::size_t i = 0; i < 4; ++i) {
    phases[i] = values.count(kPhi[i]) ? number_or(values, kPhi[i]) : defaults[i];
  }
  return phases;
}

void write_csv_row(std::ostringstream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << f;
    first = false;
  }
  out << '\n';
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "g2-scan") return Command::G2Scan;
  if (name == "bell-test") return Command::BellTest;
  if (name == "mc-bell") return Command::McBell;
  if (name == "path-check") return Command::PathCheck;
  return std::nullopt;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");

  Values values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = snake_case(trim(std::string_view(content).substr(0, eq)));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(where + ": expected 'key = value'");
    if (!is_known_key(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    values[key] = value;
  }
  return values;
}

double parse_number(const std::string& token) {
  const std::string t = trim(token);
  const auto pi_pos = t.find("pi");
  if (pi_pos == std::string::npos) return parse_plain(t, token);

  std::string coef = t.substr(0, pi_pos);
  std::string rest = t.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double value = std::numbers::pi;
  if (coef == "-") {
    value = -value;
  } else if (!coef.empty() && coef != "+") {
    value *= parse_plain(coef, token);
  }
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("not a number: '" + token + "'");
    const double div = parse_plain(std::string_view(rest).substr(1), token);
    if (div == 0.0) throw ConfigError("division by zero in '" + token + "'");
    value /= div;
  }
  return value;
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range must be lo:hi:n, got '" + text + "'");
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    const std::uint64_t n = parse_unsigned(parts[2], "range count");
    if (n == 0) throw ConfigError("range count must be >= 1");
    std::vector<double> grid(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      grid[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return grid;
  }
  std::vector<double> grid;
  for (const auto& part : split(text, ',')) grid.push_back(parse_number(part));
  if (grid.empty()) throw ConfigError("empty grid");
  return grid;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ConfigError("seed range must be first:last, got '" + text + "'");
    const std::uint64_t first = parse_unsigned(parts[0], "seeds");
    const std::uint64_t last = parse_unsigned(parts[1], "seeds");
    if (last < first) throw ConfigError("seed range is empty: '" + text + "'");
    for (std::uint64_t s = first;; ++s) {
      seeds.push_back(s);
      if (s == last) break;
    }
    return seeds;
  }
  for (const auto& part : split(text, ',')) seeds.push_back(parse_unsigned(part, "seeds"));
  if (seeds.empty()) throw ConfigError("empty seed list");
  return seeds;
}

RunConfig parse_run_config(std::span<const std::string> args) {
  if (args.empty()) throw UnknownCommandError("no command given");
  const auto command = parse_command(args.front());
  if (!command) throw UnknownCommandError("unknown command '" + args.front() + "'");

  CLI::App app("Two-emitter photon correlation simulator", args.front());
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  Values flag_values;
  std::map<std::string, CLI::Option*> flag_options;
  for (const KeySpec& k : kKeys) {
    const std::string names = std::string(k.key) == "output"
                                  ? "-o,--output"
                                  : "--" + flag_name(k.key);
    flag_options[k.key] = app.add_option(names, flag_values[k.key], k.help);
  }

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  app.parse(rest);

  Values values;
  if (!config_path.empty()) values = read_config_file(config_path);
  for (const auto& [key, opt] : flag_options) {
    if (opt->count() > 0) values[key] = flag_values[key];
  }

  RunConfig cfg;
  cfg.command = *command;
  cfg.kd = number_or(values, "kd");
  cfg.e0 = number_or(values, "e0");
  cfg.visibility = number_or(values, "visibility");
  cfg.eta = number_or(values, "eta");
  if (auto out = lookup(values, "output")) cfg.output = *out;

  // Validate the shared parameters against the domain types up front.
  try {
    EmitterPair{cfg.kd};
    FieldParams{cfg.e0};
    Visibility{cfg.visibility};
    Efficiency{cfg.eta};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  try {
    switch (cfg.command) {
      case Command::G2Scan: {
        if (values.count("xi_grid")) {
          if (values.count("phase_grid")) {
            throw ConfigError("give either phase_grid or xi_grid, not both");
          }
          const EmitterPair pair(cfg.kd);
          const DetectorSetting ref(values.count("xi1") ? number_or(values, "xi1") : 0.0);
          for (double xi : parse_grid(values.at("xi_grid"))) {
            cfg.delta_phi_grid.push_back(phase_difference(pair, ref, DetectorSetting(xi)));
          }
        } else {
          cfg.delta_phi_grid = parse_grid(*lookup(values, "phase_grid"));
        }
        break;
      }
      case Command::BellTest:
        cfg.v_grid = parse_grid(*lookup(values, "v_grid"));
        for (double v : cfg.v_grid) Visibility{v};
        cfg.phases = resolve_ch_phases(values, cfg.kd);
        break;
      case Command::McBell: {
        cfg.seeds = parse_seed_list(*lookup(values, "seeds"));
        cfg.trials = parse_unsigned(*lookup(values, "trials"), "trials");
        if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
        const std::uint64_t workers = parse_unsigned(*lookup(values, "workers"), "workers");
        if (workers > 4096) throw ConfigError("workers must be <= 4096");
        cfg.workers = static_cast<unsigned>(workers);
        cfg.phases = resolve_ch_phases(values, cfg.kd);
        break;
      }
      case Command::PathCheck: {
        const std::uint64_t grid = parse_unsigned(*lookup(values, "grid"), "grid");
        if (grid < 1 || grid > 100000) throw ConfigError("grid must be in [1, 100000]");
        cfg.grid_points = static_cast<int>(grid);
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string g2_scan_csv(const RunConfig& cfg) {
  const FieldParams p(cfg.e0);
  const Visibility v(cfg.visibility);
  const Efficiency eta(cfg.eta);
  std::ostringstream out;
  out << "delta_phi,g2,joint_probability\n";
  for (double dphi : cfg.delta_phi_grid) {
    write_csv_row(out, {format_number(dphi), format_number(g2(dphi, p, v)),
                        format_number(joint_probability(dphi, v, eta))});
  }
  return out.str();
}

std::string bell_test_csv(const RunConfig& cfg) {
  ChSettings settings{cfg.phases[0], cfg.phases[1], cfg.phases[2], cfg.phases[3],
                      Visibility{}, Efficiency(cfg.eta)};
  std::vector<Visibility> vs;
  for (double v : cfg.v_grid) vs.emplace_back(v);
  std::ostringstream out;
  out << "v,statistic,lower_margin,violated\n";
  for (const ChResult& r : scan(vs, {settings})) {
    write_csv_row(out, {format_number(r.visibility), format_number(r.statistic),
                        format_number(r.lower_margin), r.violated() ? "true" : "false"});
  }
  return out.str();
}

std::string mc_bell_csv(const RunConfig& cfg) {
  McConfig mc;
  mc.trials_per_setting = cfg.trials;
  mc.workers = cfg.workers;
  mc.settings = ChSettings{cfg.phases[0], cfg.phases[1], cfg.phases[2], cfg.phases[3],
                           Visibility(cfg.visibility), Efficiency(cfg.eta)};
  std::ostringstream out;
  out << "seed,trials,statistic_hat,std_error,sigma_violation\n";
  for (std::uint64_t seed : cfg.seeds) {
    mc.seed = seed;
    const McEstimate est = estimate_ch(mc);
    write_csv_row(out, {std::to_string(seed), std::to_string(est.trials),
                        format_number(est.statistic_hat), format_number(est.std_error),
                        format_number(est.sigma_violation())});
  }
  return out.str();
}

std::string path_check_report(const RunConfig& cfg) {
  const FieldParams p(cfg.e0);
  const double e2 = cfg.e0 * cfg.e0;
  const double path_scale = e2 * e2 / 4.0;
  const int n = cfg.grid_points;
  const double step = 2.0 * std::numbers::pi / n;

  double max_dev = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double phi1 = i * step;
      const double phi2 = j * step;
      const double operator_g2 = std::norm(two_photon_amplitude(phi1, phi2, p));
      const double path_g2 = path_scale * std::norm(final_amplitude(phi1, phi2));
      max_dev = std::max(max_dev, std::abs(path_g2 - operator_g2));
    }
  }
  const int rank = schmidt_rank(postselected_state(true), Bipartition{1, 2});

  std::ostringstream out;
  out << "max_deviation=" << format_number(max_dev) << " schmidt_rank=" << rank
      << " grid_points=" << n * n << '\n';
  return out.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_run_config(args);
  } catch (const UnknownCommandError& e) {
    err << "error: " << e.what()
        << " (expected g2-scan, bell-test, mc-bell or path-check)\n";
    return kUnknownCommand;
  } catch (const CLI::CallForHelp&) {
    out << "usage: twophoton " << args.front() << " [--config FILE] [--key value ...]\n\nkeys:\n";
    for (const KeySpec& k : kKeys) {
      out << "  --" << flag_name(k.key) << "  " << k.help;
      if (k.fallback) out << " [" << k.fallback << "]";
      out << '\n';
    }
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const ConfigError& e) {
    err << "error: invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  }

  std::string text;
  try {
    switch (cfg.command) {
      case Command::G2Scan: text = g2_scan_csv(cfg); break;
      case Command::BellTest: text = bell_test_csv(cfg); break;
      case Command::McBell: text = mc_bell_csv(cfg); break;
      case Command::PathCheck: text = path_check_report(cfg); break;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }

  if (!cfg.output) {
    out << text;
    return kOk;
  }
  std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << *cfg.output << "'\n";
    return kOutputUnwritable;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing output file '" << *cfg.output << "'\n";
    return kOutputUnwritable;
  }
  return kOk;
}

}  // namespace twophoton::cli
