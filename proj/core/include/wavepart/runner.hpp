#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wavepart/config.hpp"
#include "wavepart/encodings.hpp"
#include "wavepart/group.hpp"
#include "wavepart/info.hpp"
#include "wavepart/measures.hpp"

namespace wavepart {

FiniteGroup build_group(const GroupSpec& spec);
UnitaryRep build_rep(const ExperimentConfig& cfg);
/// seed_override replaces the seed of a random state spec.
DensityMatrix build_state(const StateSpec& spec, std::size_t dim, std::optional<std::uint64_t> seed_override = {});
WaveEncoder build_encoder(const EncoderSpec& spec, std::size_t dim);

/// One evaluated state: measures, particle sandwich and wave Holevo quantity.
struct SweepRecord {
  std::uint64_t seed = 0;
  MeasureReport measures;
  double particle_lower = 0.0;
  double particle_chi = 0.0;
  double wave_chi = 0.0;
  /// asymmetry - particle_lower
  double particle_slack = 0.0;
  /// symmetry - wave_chi
  double wave_slack = 0.0;
  /// capacity - (particle_lower + wave_chi)
  double slack = 0.0;

  /// particle_lower <= A + 1e-9, wave_chi <= W + 1e-9 and A + W = capacity to 1e-9.
  bool invariants_hold() const;
};

struct ReportResult {
  std::string group_label;
  std::string rep_digest;
  std::string state_digest;
  SweepRecord record;
  InfoSandwich particle;
};

SweepRecord evaluate_state(const UnitaryRep& rep, const WaveEncoder& encoder, const DensityMatrix& rho,
                           const OptimizerBudget& budget, std::uint64_t optimizer_seed, std::uint64_t record_seed,
                           InfoSandwich* particle_out = nullptr);

/// Builds group, representation and state from cfg and evaluates them.
/// Requires cfg.state; a random state must carry a seed.
ReportResult run_report(const ExperimentConfig& cfg);

struct Stats {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct SweepSummary {
  std::size_t count = 0;
  /// Largest |A + W - capacity|.
  double max_identity_deviation = 0.0;
  /// Largest particle_lower - A.
  double max_particle_violation = 0.0;
  /// Largest wave_chi - W.
  double max_wave_violation = 0.0;
  /// Largest particle_lower + wave_chi - capacity.
  double max_complementarity_violation = 0.0;
  Stats asymmetry;
  Stats symmetry;
  Stats slack;
  bool invariants_hold = true;
};

struct SweepFailure {
  std::uint64_t seed = 0;
  std::string message;
  bool invariant = false;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SweepSummary summary;
  /// Lowest failing seed, if any record could not be computed. records then
  /// holds every record that did succeed.
  std::optional<SweepFailure> failure;
};

/// Evaluates `count` random states with seeds seed, seed+1, ... The state
/// spec (if random) supplies the rank. Work is spread over cfg.threads
/// workers; records are always returned in seed order.
SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t count, std::uint64_t seed);

SweepSummary summarize(const std::vector<SweepRecord>& records);

/// Column header shared by both CSV writers.
inline constexpr const char* kCsvHeader =
    "seed,D,|G|,S_rho,S_twirl,A,W,capacity,part_lower,part_chi,wave_chi,slack";

void write_report(std::ostream& out, const ReportResult& report, ReportFormat format);
void write_sweep(std::ostream& out, const SweepResult& sweep, ReportFormat format);

}  // namespace wavepart
