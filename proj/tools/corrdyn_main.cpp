// corrdyn: correlation dynamics of two-qubit Bell-diagonal states under
// local bit / bit-phase / phase flip channels.
//
// Exit codes: 0 success, 1 usage/config error, 2 validation-suite failure,
// 3 nonphysical input state.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"

#include "corrdyn/measurement.hpp"
#include "corrdyn/trajectory.hpp"

namespace {

using namespace corrdyn;

struct StateArgs {
  std::optional<double> c1, c2, c3;
  std::string class_spec;  // "phase:+:0.6"
  std::string channel_name;
  double gamma = 1.0;
};

// Flat key=value config files ('#' comments). Values only apply to options
// not already given on the command line, so flags override the file.
class ConfigFile {
 public:
  ConfigFile(CLI::App* cmd, std::string path) : cmd_(cmd), path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) throw ConfigError("cannot open config file " + path_);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      const auto strip = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
      };
      line = strip(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError(diag(line_no) + "expected key=value, got '" + line + "'");
      }
      entries_.push_back(Entry{strip(line.substr(0, eq)), strip(line.substr(eq + 1)), line_no});
    }
  }

  // Every file key must be consumed by exactly one handler call below.
  ~ConfigFile() = default;

  void finish() const {
    for (const Entry& entry : entries_) {
      if (!entry.used) throw ConfigError(diag(entry.line) + "unknown key '" + entry.key + "'");
    }
  }

  template <typename T>
  void number(const std::string& key, const std::string& option, T& target) {
    handle(key, option, [&](const Entry& entry) {
      try {
        if constexpr (std::is_integral_v<T>) {
          target = static_cast<T>(std::stoll(entry.value));
        } else {
          target = std::stod(entry.value);
        }
      } catch (const std::exception&) {
        throw ConfigError(diag(entry.line) + "invalid number for '" + key + "': " + entry.value);
      }
    });
  }

  void number(const std::string& key, const std::string& option,
              std::optional<double>& target) {
    handle(key, option, [&](const Entry& entry) {
      try {
        target = std::stod(entry.value);
      } catch (const std::exception&) {
        throw ConfigError(diag(entry.line) + "invalid number for '" + key + "': " + entry.value);
      }
    });
  }

  void text(const std::string& key, const std::string& option, std::string& target) {
    handle(key, option, [&](const Entry& entry) { target = entry.value; });
  }

  void flag(const std::string& key, const std::string& option, bool& target) {
    handle(key, option, [&](const Entry& entry) {
      if (entry.value == "1" || entry.value == "true" || entry.value == "on") {
        target = true;
      } else if (entry.value == "0" || entry.value == "false" || entry.value == "off") {
        target = false;
      } else {
        throw ConfigError(diag(entry.line) + "invalid flag for '" + key + "': " + entry.value);
      }
    });
  }

 private:
  struct Entry {
    std::string key;
    std::string value;
    int line;
    mutable bool used = false;
  };

  std::string diag(int line) const { return path_ + ":" + std::to_string(line) + ": "; }

  template <typename Apply>
  void handle(const std::string& key, const std::string& option, Apply apply) {
    for (const Entry& entry : entries_) {
      if (entry.key != key) continue;
      entry.used = true;
      if (cmd_->count(option) == 0) apply(entry);  // command line wins
    }
  }

  CLI::App* cmd_;
  std::string path_;
  std::vector<Entry> entries_;
};

void apply_state_config(ConfigFile& config, StateArgs& args, bool with_channel) {
  config.number("c1", "--c1", args.c1);
  config.number("c2", "--c2", args.c2);
  config.number("c3", "--c3", args.c3);
  config.text("class", "--class", args.class_spec);
  if (with_channel) config.text("channel", "--channel", args.channel_name);
  config.number("gamma", "--gamma", args.gamma);
}

ChannelKind parse_channel(const std::string& name) {
  if (name == "phase") return ChannelKind::PhaseFlip;
  if (name == "bit") return ChannelKind::BitFlip;
  if (name == "bitphase") return ChannelKind::BitPhaseFlip;
  throw ConfigError("unknown channel '" + name + "' (expected phase, bit or bitphase)");
}

// "<channel>:<sign>:<kappa>", e.g. phase:+:0.6
CorrelationVector parse_class_spec(const std::string& spec, ChannelKind& kind_out) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw ConfigError("bad class spec '" + spec + "' (expected channel:sign:kappa)");
  }
  kind_out = parse_channel(spec.substr(0, first));
  const std::string sign_str = spec.substr(first + 1, second - first - 1);
  int sign = 0;
  if (sign_str == "+") sign = +1;
  if (sign_str == "-") sign = -1;
  if (sign == 0) throw ConfigError("bad class sign '" + sign_str + "' (expected + or -)");
  double kappa = 0.0;
  try {
    kappa = std::stod(spec.substr(second + 1));
  } catch (const std::exception&) {
    throw ConfigError("bad class kappa in '" + spec + "'");
  }
  try {
    return class_state(kind_out, TransitionClassParams{sign, kappa});
  } catch (const BadKappa& e) {
    throw ConfigError(e.what());
  }
}

// Resolve the initial state; the channel too unless channel_optional.
void resolve(const StateArgs& args, bool need_channel, CorrelationVector& state,
             ChannelSpec& channel) {
  if (!(args.gamma > 0.0)) throw ConfigError("gamma must be > 0");
  channel.gamma = args.gamma;
  const bool have_components = args.c1 || args.c2 || args.c3;
  if (!args.class_spec.empty()) {
    if (have_components) {
      throw ConfigError("give either --class or --c1/--c2/--c3, not both");
    }
    ChannelKind kind{};
    state = parse_class_spec(args.class_spec, kind);
    if (!args.channel_name.empty() && parse_channel(args.channel_name) != kind) {
      throw ConfigError("--channel contradicts the channel in --class");
    }
    channel.kind = kind;
    return;
  }
  if (!(args.c1 && args.c2 && args.c3)) {
    throw ConfigError("state required: either --class or all of --c1/--c2/--c3");
  }
  state = make_state(*args.c1, *args.c2, *args.c3);
  if (args.channel_name.empty()) {
    if (need_channel) throw ConfigError("--channel required with --c1/--c2/--c3");
    channel.kind = ChannelKind::PhaseFlip;
  } else {
    channel.kind = parse_channel(args.channel_name);
  }
}

void add_state_options(CLI::App* cmd, StateArgs& args, bool with_channel,
                       std::string& config_path) {
  cmd->add_option("--c1", args.c1, "correlation coefficient c1");
  cmd->add_option("--c2", args.c2, "correlation coefficient c2");
  cmd->add_option("--c3", args.c3, "correlation coefficient c3");
  cmd->add_option("--class", args.class_spec,
                  "constant-discord class state, channel:sign:kappa (e.g. phase:+:0.6)");
  if (with_channel) {
    cmd->add_option("--channel", args.channel_name, "phase, bit or bitphase");
  }
  cmd->add_option("--gamma", args.gamma, "decoherence rate (default 1)");
  cmd->add_option("--config", config_path, "flat key=value config file; flags override it");
}

int run_evolve(const StateArgs& args, double tmax, int samples, bool lindblad,
               int grid_n, const std::string& out_path) {
  RunConfig config;
  resolve(args, true, config.initial, config.channel);
  config.t_max = tmax;
  config.samples = samples;
  config.lindblad_check = lindblad;
  config.optimizer_grid_n = grid_n;
  const Trajectory trajectory = run_trajectory(config);
  if (out_path == "-") {
    write_csv(std::cout, trajectory);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + out_path);
    write_csv(out, trajectory);
  }
  return 0;
}

int run_transition(const StateArgs& args, double tmax, int samples) {
  RunConfig config;
  resolve(args, true, config.initial, config.channel);
  config.t_max = tmax;
  config.samples = samples;

  const bool in_class = match_class_state(config.initial, config.channel.kind).has_value();
  const char* label = in_class ? "sudden transition" : "chi-crossing time";

  const auto analytic = transition_time(config.initial, config.channel);
  if (analytic) {
    std::cout << "analytic: gamma_t_bar = "
              << format_fixed9(*analytic * config.channel.gamma) << " (" << label << ")\n";
  } else {
    std::cout << "analytic: none (no chi crossing)\n";
  }

  const auto detected = detect_transition(run_trajectory(config));
  if (detected) {
    std::cout << "detected: gamma_t_bar = " << format_fixed9(detected->gamma_t) << " +/- "
              << format_fixed9(detected->uncertainty) << "\n";
  } else {
    std::cout << "detected: none\n";
  }
  return 0;
}

int run_report(const StateArgs& args) {
  CorrelationVector state;
  ChannelSpec channel;
  resolve(args, false, state, channel);
  const CorrelationReport report = full_report(state);
  std::cout << "I = " << format_fixed9(report.mutual_info) << "\n";
  std::cout << "C = " << format_fixed9(report.classical) << "\n";
  std::cout << "D = " << format_fixed9(report.discord) << "\n";
  std::cout << "E = " << format_fixed9(report.entanglement) << "\n";
  if (report.dissonance) {
    std::cout << "Q = " << format_fixed9(*report.dissonance) << "\n";
  } else {
    std::cout << "Q = undefined (pure Bell state)\n";
  }
  const ClassicalStateDescriptor descriptor = closest_classical(state);
  std::cout << "closest_classical: q = " << format_fixed9(descriptor.q) << ", pair_high = "
            << label_name(descriptor.pair_high[0]) << ';'
            << label_name(descriptor.pair_high[1]) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlation dynamics of two-qubit Bell-diagonal states under "
               "local nondissipative channels"};
  app.require_subcommand(1);
  int exit_code = 0;

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "evolve a state and write a CSV trajectory");
  auto evolve_args = std::make_shared<StateArgs>();
  auto evolve_tmax = std::make_shared<double>(1.0);
  auto evolve_samples = std::make_shared<int>(256);
  auto evolve_lindblad = std::make_shared<bool>(false);
  auto evolve_grid = std::make_shared<int>(0);
  auto evolve_out = std::make_shared<std::string>("-");
  auto evolve_config = std::make_shared<std::string>();
  add_state_options(evolve_cmd, *evolve_args, true, *evolve_config);
  evolve_cmd->add_option("--tmax", *evolve_tmax, "trajectory span in gamma*t (default 1)");
  evolve_cmd->add_option("--samples", *evolve_samples, "number of time samples (default 256)");
  evolve_cmd->add_flag("--lindblad", *evolve_lindblad,
                       "cross-check rows against the RK4 Lindblad integrator");
  evolve_cmd->add_option("--grid-n", *evolve_grid,
                         "cross-check C against the measurement optimizer with this grid");
  evolve_cmd->add_option("--out", *evolve_out, "output file, '-' for stdout");
  evolve_cmd->callback([=, &exit_code] {
    if (!evolve_config->empty()) {
      ConfigFile config(evolve_cmd, *evolve_config);
      apply_state_config(config, *evolve_args, true);
      config.number("tmax", "--tmax", *evolve_tmax);
      config.number("samples", "--samples", *evolve_samples);
      config.flag("lindblad", "--lindblad", *evolve_lindblad);
      config.number("grid_n", "--grid-n", *evolve_grid);
      config.number("grid-n", "--grid-n", *evolve_grid);
      config.text("out", "--out", *evolve_out);
      config.finish();
    }
    exit_code = run_evolve(*evolve_args, *evolve_tmax, *evolve_samples, *evolve_lindblad,
                           *evolve_grid, *evolve_out);
  });

  // transition
  auto* transition_cmd =
      app.add_subcommand("transition", "locate the classical-to-quantum transition time");
  auto transition_args = std::make_shared<StateArgs>();
  auto transition_tmax = std::make_shared<double>(1.0);
  auto transition_samples = std::make_shared<int>(256);
  auto transition_config = std::make_shared<std::string>();
  add_state_options(transition_cmd, *transition_args, true, *transition_config);
  transition_cmd->add_option("--tmax", *transition_tmax, "scan span in gamma*t (default 1)");
  transition_cmd->add_option("--samples", *transition_samples, "scan samples (default 256)");
  transition_cmd->callback([=, &exit_code] {
    if (!transition_config->empty()) {
      ConfigFile config(transition_cmd, *transition_config);
      apply_state_config(config, *transition_args, true);
      config.number("tmax", "--tmax", *transition_tmax);
      config.number("samples", "--samples", *transition_samples);
      config.finish();
    }
    exit_code = run_transition(*transition_args, *transition_tmax, *transition_samples);
  });

  // fig
  auto* fig_cmd = app.add_subcommand("fig", "write figure data files");
  auto fig_id = std::make_shared<int>(0);
  auto fig_outdir = std::make_shared<std::string>(".");
  auto fig_config = std::make_shared<std::string>();
  fig_cmd->add_option("--id", *fig_id, "figure id (1, 2 or 3)");
  fig_cmd->add_option("--outdir", *fig_outdir, "output directory (default .)");
  fig_cmd->add_option("--config", *fig_config, "flat key=value config file; flags override it");
  fig_cmd->callback([=] {
    if (!fig_config->empty()) {
      ConfigFile config(fig_cmd, *fig_config);
      config.number("id", "--id", *fig_id);
      config.text("outdir", "--outdir", *fig_outdir);
      config.finish();
    }
    for (const std::string& path : reproduce_figure(*fig_id, *fig_outdir)) {
      std::cout << "wrote " << path << "\n";
    }
  });

  // validate
  auto* validate_cmd =
      app.add_subcommand("validate", "run the oracle-equivalence suites");
  auto validate_seed = std::make_shared<std::uint64_t>(42);
  auto validate_n = std::make_shared<int>(100);
  auto validate_config = std::make_shared<std::string>();
  validate_cmd->add_option("--seed", *validate_seed, "random sample seed (default 42)");
  validate_cmd->add_option("--n", *validate_n, "sample size per suite (default 100)");
  validate_cmd->add_option("--config", *validate_config,
                           "flat key=value config file; flags override it");
  validate_cmd->callback([=, &exit_code] {
    if (!validate_config->empty()) {
      ConfigFile config(validate_cmd, *validate_config);
      config.number("seed", "--seed", *validate_seed);
      config.number("n", "--n", *validate_n);
      config.finish();
    }
    const ValidationReport report = validate(*validate_seed, *validate_n);
    std::cout << report.text();
    exit_code = report.passed ? 0 : 2;
  });

  // report
  auto* report_cmd = app.add_subcommand("report", "all correlation measures of one state");
  auto report_args = std::make_shared<StateArgs>();
  auto report_config = std::make_shared<std::string>();
  add_state_options(report_cmd, *report_args, false, *report_config);
  report_cmd->callback([=, &exit_code] {
    if (!report_config->empty()) {
      ConfigFile config(report_cmd, *report_config);
      apply_state_config(config, *report_args, false);
      config.finish();
    }
    exit_code = run_report(*report_args);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const corrdyn::NonPhysical& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
