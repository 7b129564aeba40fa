#include "wavepart/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "wavepart/errors.hpp"
#include "wavepart/json_io.hpp"

namespace wavepart {

using nlohmann::json;

FiniteGroup build_group(const GroupSpec& spec) {
  return std::visit(
      [](const auto& g) -> FiniteGroup {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, CyclicGroupSpec>) return cyclic_group(g.n);
        else if constexpr (std::is_same_v<T, DihedralGroupSpec>) return dihedral_group(g.n);
        else return group_from_cayley(g.table);
      },
      spec);
}

UnitaryRep build_rep(const ExperimentConfig& cfg) {
  FiniteGroup group = build_group(cfg.group);
  if (const auto* m = std::get_if<MatrixRepSpec>(&cfg.rep)) return rep_from_matrices(group, m->matrices);
  return regular_representation(group);
}

DensityMatrix build_state(const StateSpec& spec, std::size_t dim, std::optional<std::uint64_t> seed_override) {
  if (const auto* s = std::get_if<ExplicitStateSpec>(&spec)) return validate_density(s->matrix);
  if (const auto* r = std::get_if<RandomStateSpec>(&spec)) {
    const auto seed = seed_override ? seed_override : r->seed;
    if (!seed) throw ConfigError("/state/seed", "random state requires a seed");
    return random_density(dim, r->rank.value_or(dim), *seed);
  }
  const auto& name = std::get<FixtureStateSpec>(spec).name;
  if (name == "ground") return DensityMatrix::basis_state(dim, 0);
  if (name == "maximally_mixed") return DensityMatrix::maximally_mixed(dim);
  if (name == "plus") return DensityMatrix::pure(Vector::Ones(static_cast<Eigen::Index>(dim)));
  throw ConfigError("/state/name", fmt::format("unknown fixture '{}'", name));
}

WaveEncoder build_encoder(const EncoderSpec& spec, std::size_t dim) {
  if (std::holds_alternative<WeylEncoderSpec>(spec)) return weyl_unitaries(dim);
  if (std::holds_alternative<TrivialEncoderSpec>(spec)) return trivial_encoder(dim);
  return WaveEncoder(std::get<MatrixEncoderSpec>(spec).matrices);
}

bool SweepRecord::invariants_hold() const {
  return particle_lower <= measures.asymmetry + tol::kEntropy && wave_chi <= measures.symmetry + tol::kEntropy &&
         measures.identity_residual <= tol::kEntropy;
}

SweepRecord evaluate_state(const UnitaryRep& rep, const WaveEncoder& encoder, const DensityMatrix& rho,
                           const OptimizerBudget& budget, std::uint64_t optimizer_seed, std::uint64_t record_seed,
                           InfoSandwich* particle_out) {
  SweepRecord rec;
  rec.seed = record_seed;
  rec.measures = complementarity_report(rep, rho);
  InfoSandwich particle = accessible_info_lower(particle_ensemble(rep, rho), budget, optimizer_seed);
  rec.particle_lower = particle.lower;
  rec.particle_chi = particle.upper;
  rec.wave_chi = holevo_chi(wave_encode(encoder, rep, rho));
  rec.particle_slack = rec.measures.asymmetry - rec.particle_lower;
  rec.wave_slack = rec.measures.symmetry - rec.wave_chi;
  rec.slack = rec.measures.capacity - (rec.particle_lower + rec.wave_chi);
  if (particle_out) *particle_out = std::move(particle);
  return rec;
}

ReportResult run_report(const ExperimentConfig& cfg) {
  if (!cfg.state) throw ConfigError("/state", "report requires a state");
  UnitaryRep rep = build_rep(cfg);
  DensityMatrix rho = build_state(*cfg.state, rep.dim());
  WaveEncoder encoder = build_encoder(cfg.wave_encoder, rep.dim());
  std::uint64_t record_seed = 0;
  if (const auto* r = std::get_if<RandomStateSpec>(&*cfg.state)) record_seed = r->seed.value_or(0);

  InfoSandwich particle{.best_povm = Povm::computational_basis(rep.dim())};
  SweepRecord rec = evaluate_state(rep, encoder, rho, cfg.budget, cfg.optimizer_seed, record_seed, &particle);
  return ReportResult{.group_label = rep.group().label(),
                      .rep_digest = wavepart::rep_digest(rep),
                      .state_digest = matrix_digest(rho.matrix()),
                      .record = rec,
                      .particle = std::move(particle)};
}

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.count = records.size();
  if (records.empty()) return s;
  constexpr double inf = std::numeric_limits<double>::infinity();
  s.max_identity_deviation = 0.0;
  s.max_particle_violation = s.max_wave_violation = s.max_complementarity_violation = -inf;
  s.asymmetry = s.symmetry = s.slack = Stats{inf, 0.0, -inf};
  auto accumulate = [](Stats& st, double v) {
    st.min = std::min(st.min, v);
    st.max = std::max(st.max, v);
    st.mean += v;
  };
  for (const auto& r : records) {
    s.max_identity_deviation = std::max(s.max_identity_deviation, r.measures.identity_residual);
    s.max_particle_violation = std::max(s.max_particle_violation, -r.particle_slack);
    s.max_wave_violation = std::max(s.max_wave_violation, -r.wave_slack);
    s.max_complementarity_violation = std::max(s.max_complementarity_violation, -r.slack);
    accumulate(s.asymmetry, r.measures.asymmetry);
    accumulate(s.symmetry, r.measures.symmetry);
    accumulate(s.slack, r.slack);
    s.invariants_hold = s.invariants_hold && r.invariants_hold();
  }
  const auto n = static_cast<double>(records.size());
  s.asymmetry.mean /= n;
  s.symmetry.mean /= n;
  s.slack.mean /= n;
  s.invariants_hold = s.invariants_hold && s.max_complementarity_violation <= tol::kEntropy;
  return s;
}

SweepResult run_sweep(const ExperimentConfig& cfg, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw ConfigError("/sweep/count", "sweep count must be >= 1");
  if (cfg.state && !std::holds_alternative<RandomStateSpec>(*cfg.state))
    throw ConfigError("/state/kind", "sweep requires a random state spec (or none)");
  const StateSpec spec = cfg.state.value_or(RandomStateSpec{});

  const UnitaryRep rep = build_rep(cfg);
  const WaveEncoder encoder = build_encoder(cfg.wave_encoder, rep.dim());

  std::vector<std::optional<SweepRecord>> slots(count);
  std::vector<std::optional<SweepFailure>> failures(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::uint64_t s = seed + i;
      try {
        DensityMatrix rho = build_state(spec, rep.dim(), s);
        slots[i] = evaluate_state(rep, encoder, rho, cfg.budget, s, s);
      } catch (const InvariantViolation& e) {
        failures[i] = SweepFailure{s, e.what(), true};
      } catch (const Error& e) {
        failures[i] = SweepFailure{s, e.what(), false};
      }
    }
  };

  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepResult result;
  for (std::size_t i = 0; i < count; ++i) {
    if (slots[i]) result.records.push_back(std::move(*slots[i]));
    if (failures[i] && !result.failure) result.failure = std::move(failures[i]);
  }
  result.summary = summarize(result.records);
  return result;
}

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

void csv_row(std::ostream& out, const SweepRecord& r) {
  const auto& m = r.measures;
  out << r.seed << ',' << m.dim << ',' << m.group_order << ',' << num(m.entropy_rho) << ',' << num(m.entropy_twirl)
      << ',' << num(m.asymmetry) << ',' << num(m.symmetry) << ',' << num(m.capacity) << ',' << num(r.particle_lower)
      << ',' << num(r.particle_chi) << ',' << num(r.wave_chi) << ',' << num(r.slack) << '\n';
}

json record_json(const SweepRecord& r) {
  return json{{"seed", r.seed},
              {"measures", r.measures},
              {"particle_lower", r.particle_lower},
              {"particle_chi", r.particle_chi},
              {"wave_chi", r.wave_chi},
              {"slacks", {{"particle", r.particle_slack}, {"wave", r.wave_slack}, {"complementarity", r.slack}}},
              {"invariants_hold", r.invariants_hold()}};
}

json stats_json(const Stats& s) { return json{{"min", s.min}, {"mean", s.mean}, {"max", s.max}}; }

}  // namespace

void write_report(std::ostream& out, const ReportResult& report, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    out << kCsvHeader << '\n';
    csv_row(out, report.record);
    return;
  }
  json j = record_json(report.record);
  j["group"] = report.group_label;
  j["digests"] = {{"rep", report.rep_digest}, {"state", report.state_digest}};
  j["particle"] = report.particle;
  out << j.dump(2) << '\n';
}

void write_sweep(std::ostream& out, const SweepResult& sweep, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const auto& r : sweep.records) csv_row(out, r);
    return;
  }
  const SweepSummary& s = sweep.summary;
  json records = json::array();
  for (const auto& r : sweep.records) records.push_back(record_json(r));
  json j{{"records", std::move(records)},
         {"summary",
          {{"count", s.count},
           {"max_identity_deviation", s.max_identity_deviation},
           {"max_particle_violation", s.max_particle_violation},
           {"max_wave_violation", s.max_wave_violation},
           {"max_complementarity_violation", s.max_complementarity_violation},
           {"asymmetry", stats_json(s.asymmetry)},
           {"symmetry", stats_json(s.symmetry)},
           {"slack", stats_json(s.slack)},
           {"invariants_hold", s.invariants_hold}}},
         {"failure", nullptr}};
  if (sweep.failure) j["failure"] = {{"seed", sweep.failure->seed}, {"message", sweep.failure->message}};
  out << j.dump(2) << '\n';
}

}  // namespace wavepart
