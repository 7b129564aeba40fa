// Command-line front end: report, sweep and validate subcommands.
//
// Exit codes: 0 success, 2 configuration error, 3 numeric or validation
// failure, 4 invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wavepart/config.hpp"
#include "wavepart/errors.hpp"
#include "wavepart/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericError = 3;
constexpr int kInvariantViolation = 4;

struct Options {
  std::string config;
  std::string out;
  std::string format;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
};

wavepart::ReportFormat resolve_format(const Options& opts, const wavepart::ExperimentConfig& cfg) {
  return opts.format.empty() ? cfg.format : wavepart::parse_format(opts.format);
}

// Writes through fn to --out, the configured output path, or stdout.
template <typename Fn>
void emit(const Options& opts, const wavepart::ExperimentConfig& cfg, Fn&& fn) {
  std::string path = !opts.out.empty() ? opts.out : cfg.output_path.value_or("");
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw wavepart::ConfigError("/output/path", "cannot open output file '" + path + "'");
  fn(file);
}

int run_report(const Options& opts) {
  auto cfg = wavepart::load_config(opts.config);
  auto format = resolve_format(opts, cfg);
  auto report = wavepart::run_report(cfg);
  emit(opts, cfg, [&](std::ostream& out) { wavepart::write_report(out, report, format); });
  if (!report.record.invariants_hold()) {
    std::cerr << "error: report violates an invariant (see slacks)\n";
    return kInvariantViolation;
  }
  return kOk;
}

int run_sweep(const Options& opts) {
  auto cfg = wavepart::load_config(opts.config);
  auto format = resolve_format(opts, cfg);
  if (opts.threads) cfg.threads = *opts.threads;
  const auto count = opts.count ? opts.count : cfg.sweep_count;
  const auto seed = opts.seed ? opts.seed : cfg.sweep_seed;
  if (!count) throw wavepart::ConfigError("/sweep/count", "sweep needs --count or sweep.count");
  if (!seed) throw wavepart::ConfigError("/sweep/seed", "sweep needs --seed or sweep.seed");

  auto sweep = wavepart::run_sweep(cfg, *count, *seed);
  emit(opts, cfg, [&](std::ostream& out) { wavepart::write_sweep(out, sweep, format); });

  const auto& s = sweep.summary;
  std::cerr << "records: " << s.count << "  max identity deviation: " << s.max_identity_deviation
            << "  max particle violation: " << s.max_particle_violation
            << "  max wave violation: " << s.max_wave_violation
            << "  max complementarity violation: " << s.max_complementarity_violation << '\n';
  if (sweep.failure) {
    std::cerr << "error: seed " << sweep.failure->seed << " failed: " << sweep.failure->message << '\n';
    return sweep.failure->invariant ? kInvariantViolation : kNumericError;
  }
  if (!s.invariants_hold) {
    std::cerr << "error: at least one record violates an invariant\n";
    return kInvariantViolation;
  }
  return kOk;
}

int run_validate(const Options& opts) {
  auto cfg = wavepart::load_config(opts.config);
  auto rep = wavepart::build_rep(cfg);
  if (cfg.state) {
    // A seedless random spec is legal for sweeps, so the dry run samples seed 0.
    std::optional<std::uint64_t> seed;
    if (const auto* r = std::get_if<wavepart::RandomStateSpec>(&*cfg.state)) seed = r->seed.value_or(0);
    (void)wavepart::build_state(*cfg.state, rep.dim(), seed);
  }
  (void)wavepart::build_encoder(cfg.wave_encoder, rep.dim());
  nlohmann::json j{{"status", "ok"},
                   {"group", rep.group().label()},
                   {"group_order", rep.order()},
                   {"abelian", rep.group().is_abelian()},
                   {"dim", rep.dim()}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-particle complementarity measures for finite symmetry groups"};
  app.require_subcommand(1);
  Options opts;

  auto* report = app.add_subcommand("report", "Evaluate a single state");
  report->add_option("--config", opts.config, "Configuration file")->required()->check(CLI::ExistingFile);
  report->add_option("--out", opts.out, "Output file (default: config output.path or stdout)");
  report->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* sweep = app.add_subcommand("sweep", "Evaluate many seeded random states");
  sweep->add_option("--config", opts.config, "Configuration file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--count", opts.count, "Number of random states");
  sweep->add_option("--seed", opts.seed, "Seed of the first state; record i uses seed + i");
  sweep->add_option("--out", opts.out, "Output file (default: config output.path or stdout)");
  sweep->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--threads", opts.threads, "Worker threads (0 = hardware concurrency)");

  auto* validate = app.add_subcommand("validate", "Check group, representation and state without evaluating");
  validate->add_option("--config", opts.config, "Configuration file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*report) return run_report(opts);
    if (*sweep) return run_sweep(opts);
    if (*validate) return run_validate(opts);
  } catch (const wavepart::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const wavepart::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const wavepart::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return kConfigError;
}
