#include "wavepart/runner.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "support/reps.hpp"

using namespace wavepart;

namespace {

ExperimentConfig qubit_z2(const std::string& state) {
  return parse_config(R"({"group": {"kind": "cyclic", "n": 2},
    "rep": {"kind": "matrices", "matrices": [
      [[[1,0],[0,0]],[[0,0],[1,0]]],
      [[[0,0],[1,0]],[[1,0],[0,0]]]]},
    "state": )" + state + "}");
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(RunReport, Z2QubitGroundState) {
  auto r = run_report(qubit_z2(R"({"kind": "fixture", "name": "ground"})"));
  EXPECT_EQ(r.group_label, "Z_2");
  EXPECT_NEAR(r.record.measures.asymmetry, 1.0, 1e-12);
  EXPECT_NEAR(r.record.measures.symmetry, 0.0, 1e-12);
  EXPECT_NEAR(r.record.particle_lower, 1.0, 1e-9);
  EXPECT_NEAR(r.record.particle_chi, 1.0, 1e-12);
  EXPECT_NEAR(r.record.wave_chi, 0.0, 1e-12);
  EXPECT_NEAR(r.record.slack, 0.0, 1e-9);
  EXPECT_TRUE(r.record.invariants_hold());
  EXPECT_EQ(r.rep_digest.size(), 64u);
  EXPECT_EQ(r.state_digest.size(), 64u);
}

TEST(RunReport, TrivialGroupMaximallyMixed) {
  auto cfg = parse_config(R"({"group": {"kind": "cyclic", "n": 1},
    "rep": {"kind": "matrices", "matrices": [[[[1,0],[0,0]],[[0,0],[1,0]]]]},
    "state": {"kind": "fixture", "name": "maximally_mixed"}})");
  auto r = run_report(cfg);
  EXPECT_NEAR(r.record.measures.asymmetry, 0.0, 1e-12);
  EXPECT_NEAR(r.record.measures.symmetry, 0.0, 1e-12);
  EXPECT_NEAR(r.record.particle_lower, 0.0, 1e-12);
  EXPECT_NEAR(r.record.wave_chi, 0.0, 1e-12);
  EXPECT_TRUE(r.record.invariants_hold());
}

TEST(RunReport, RegularCyclicGroundReachesLogOrder) {
  for (std::size_t n : {2, 3, 4}) {
    auto cfg = parse_config(R"({"group": {"kind": "cyclic", "n": )" + std::to_string(n) +
                            R"(}, "state": {"kind": "fixture", "name": "ground"}})");
    auto r = run_report(cfg);
    EXPECT_NEAR(r.record.particle_lower, std::log2(double(n)), 1e-6) << n;
    EXPECT_NEAR(r.record.measures.asymmetry, std::log2(double(n)), 1e-12) << n;
  }
}

TEST(RunReport, RequiresSeededState) {
  auto cfg = parse_config(R"({"group": {"kind": "cyclic", "n": 2}})");
  EXPECT_THROW(run_report(cfg), ConfigError);
  EXPECT_THROW(run_report(qubit_z2(R"({"kind": "random"})")), ConfigError);
}

TEST(RunReport, InvalidInputsSurfaceAsErrors) {
  EXPECT_THROW(run_report(qubit_z2(R"({"kind": "matrix", "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})")),
               DensityError);
  auto bad_rep = parse_config(R"({"group": {"kind": "cyclic", "n": 2},
    "rep": {"kind": "matrices", "matrices": [[[[1,0],[0,0]],[[0,0],[1,0]]], [[[1,0],[0,0]],[[0,0],[1,0]]]]},
    "state": {"kind": "fixture", "name": "ground"}})");
  // {I, I} is a valid (trivial) representation of Z_2, so this succeeds.
  EXPECT_NO_THROW(run_report(bad_rep));
  auto non_unitary = parse_config(R"({"group": {"kind": "cyclic", "n": 2},
    "rep": {"kind": "matrices", "matrices": [[[[1,0],[0,0]],[[0,0],[1,0]]], [[[2,0],[0,0]],[[0,0],[1,0]]]]},
    "state": {"kind": "fixture", "name": "ground"}})");
  EXPECT_THROW(run_report(non_unitary), RepError);
}

TEST(RunReport, WritersProduceParsableOutput) {
  auto r = run_report(qubit_z2(R"({"kind": "random", "rank": 2, "seed": 11})"));
  std::ostringstream csv;
  write_report(csv, r, ReportFormat::kCsv);
  EXPECT_EQ(csv.str().rfind(std::string(kCsvHeader) + "\n11,2,2,", 0), 0u) << csv.str();
  EXPECT_EQ(count_lines(csv.str()), 2);

  std::ostringstream js;
  write_report(js, r, ReportFormat::kJson);
  auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["group"], "Z_2");
  EXPECT_DOUBLE_EQ(j["measures"]["asymmetry"].get<double>(), r.record.measures.asymmetry);
  EXPECT_TRUE(j["particle"].contains("best_povm"));
  EXPECT_TRUE(j["invariants_hold"].get<bool>());
}

TEST(RunSweep, QubitStatesHoldInvariants) {
  auto cfg = qubit_z2(R"({"kind": "random"})");
  auto sweep = run_sweep(cfg, 100, 1);
  ASSERT_FALSE(sweep.failure.has_value());
  ASSERT_EQ(sweep.records.size(), 100u);
  for (std::size_t i = 0; i < sweep.records.size(); ++i) {
    const auto& r = sweep.records[i];
    EXPECT_EQ(r.seed, 1 + i);
    EXPECT_LE(std::abs(r.measures.asymmetry + r.measures.symmetry - r.measures.capacity), 1e-9);
    EXPECT_GE(r.slack, -1e-9);
    EXPECT_LE(r.particle_lower, r.measures.asymmetry + 1e-9);
  }
  EXPECT_TRUE(sweep.summary.invariants_hold);
  EXPECT_EQ(sweep.summary.count, 100u);
  EXPECT_LE(sweep.summary.max_identity_deviation, 1e-9);
  EXPECT_LE(sweep.summary.asymmetry.min, sweep.summary.asymmetry.mean);
  EXPECT_LE(sweep.summary.asymmetry.mean, sweep.summary.asymmetry.max);
}

TEST(RunSweep, TrivialGroupPureStatesHaveFullSymmetry) {
  auto cfg = parse_config(R"({"group": {"kind": "cyclic", "n": 1},
    "rep": {"kind": "matrices", "matrices": [[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]]},
    "state": {"kind": "random", "rank": 1}, "optimizer": {"restarts": 1, "iterations": 50}})");
  auto sweep = run_sweep(cfg, 20, 500);
  ASSERT_FALSE(sweep.failure.has_value());
  for (const auto& r : sweep.records) {
    EXPECT_NEAR(r.measures.asymmetry, 0.0, 1e-9);
    EXPECT_NEAR(r.measures.symmetry, std::log2(3.0), 1e-9);
    EXPECT_NEAR(r.wave_chi, std::log2(3.0), 1e-9);
    EXPECT_NEAR(r.particle_lower, 0.0, 1e-9);
  }
}

TEST(RunSweep, DihedralRegularHoldsInvariants) {
  auto cfg = parse_config(R"({"group": {"kind": "dihedral", "n": 3}, "state": {"kind": "random"},
    "optimizer": {"restarts": 1, "iterations": 60}})");
  auto sweep = run_sweep(cfg, 50, 1000);
  ASSERT_FALSE(sweep.failure.has_value());
  EXPECT_TRUE(sweep.summary.invariants_hold);
  EXPECT_LE(sweep.summary.max_identity_deviation, 1e-9);
  EXPECT_LE(sweep.summary.max_particle_violation, 1e-9);
  EXPECT_LE(sweep.summary.max_wave_violation, 1e-9);
  EXPECT_LE(sweep.summary.max_complementarity_violation, 1e-9);
}

TEST(RunSweep, OutputIndependentOfThreadCount) {
  auto cfg = qubit_z2(R"({"kind": "random", "rank": 2})");
  cfg.budget.restarts = 2;
  cfg.budget.iterations = 80;
  cfg.threads = 1;
  auto one = run_sweep(cfg, 12, 40);
  cfg.threads = 4;
  auto four = run_sweep(cfg, 12, 40);
  std::ostringstream a, b;
  write_sweep(a, one, ReportFormat::kCsv);
  write_sweep(b, four, ReportFormat::kCsv);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(count_lines(a.str()), 13);

  std::ostringstream ja, jb;
  write_sweep(ja, one, ReportFormat::kJson);
  write_sweep(jb, four, ReportFormat::kJson);
  EXPECT_EQ(ja.str(), jb.str());
  auto j = nlohmann::json::parse(ja.str());
  EXPECT_EQ(j["records"].size(), 12u);
  EXPECT_TRUE(j["failure"].is_null());
  EXPECT_EQ(j["summary"]["count"], 12);
}

TEST(RunSweep, RecordSeedReproducesState) {
  auto cfg = qubit_z2(R"({"kind": "random"})");
  auto sweep = run_sweep(cfg, 3, 77);
  auto single = run_report(qubit_z2(R"({"kind": "random", "seed": 78})"));
  EXPECT_EQ(sweep.records[1].measures.entropy_rho, single.record.measures.entropy_rho);
  EXPECT_EQ(sweep.records[1].particle_lower, single.record.particle_lower);
}

TEST(Summarize, EmptyAndExtremes) {
  EXPECT_EQ(summarize({}).count, 0u);
  SweepRecord a;
  a.measures.asymmetry = 0.2;
  a.measures.capacity = 1.0;
  a.measures.symmetry = 0.8;
  a.particle_lower = 0.1;
  a.wave_chi = 0.8;
  a.slack = 0.1;
  SweepRecord b = a;
  b.measures.asymmetry = 0.6;
  b.measures.symmetry = 0.4;
  b.particle_lower = 0.6;
  b.wave_chi = 0.4;
  b.slack = 0.0;
  auto s = summarize({a, b});
  EXPECT_DOUBLE_EQ(s.asymmetry.min, 0.2);
  EXPECT_DOUBLE_EQ(s.asymmetry.max, 0.6);
  EXPECT_DOUBLE_EQ(s.asymmetry.mean, 0.4);
  EXPECT_DOUBLE_EQ(s.max_particle_violation, 0.0);
  EXPECT_DOUBLE_EQ(s.max_complementarity_violation, 0.0);
}
