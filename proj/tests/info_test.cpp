#include "wavepart/info.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/reps.hpp"
#include "wavepart/encodings.hpp"
#include "wavepart/errors.hpp"

using namespace wavepart;
using namespace wavepart::testing;

namespace {

Ensemble zero_one() {
  return Ensemble::uniform({DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)});
}

Ensemble zero_plus() { return Ensemble::uniform({DensityMatrix::basis_state(2, 0), DensityMatrix::pure(plus_ket())}); }

// Random rank-one POVM with n >= dim outcomes, built directly with Eigen.
Povm random_povm(std::size_t dim, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix v(dim, n);
  for (Eigen::Index c = 0; c < v.cols(); ++c)
    for (Eigen::Index r = 0; r < v.rows(); ++r) v(r, c) = cplx(normal(rng), normal(rng));
  Eigen::SelfAdjointEigenSolver<Matrix> es(v * v.adjoint());
  Matrix inv_sqrt = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                    es.eigenvectors().adjoint();
  return Povm::from_rank_one(inv_sqrt * v);
}

Ensemble random_ensemble(std::size_t dim, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (double& x : p) s += (x = u(rng));
  for (double& x : p) x /= s;
  std::vector<DensityMatrix> states;
  for (std::size_t j = 0; j < n; ++j) states.push_back(random_density(dim, 1 + (seed + j) % dim, seed * 31 + j));
  return Ensemble(ProbVector::distribution(p), std::move(states));
}

// Best mutual information over projective qubit measurements on a
// 1-degree grid, evaluated with the joint-distribution formula.
double qubit_grid_oracle(const Ensemble& e) {
  std::vector<double> priors(e.priors().values().begin(), e.priors().values().end());
  double best = 0.0;
  for (int t = 0; t <= 180; ++t)
    for (int f = 0; f < 360; ++f) {
      auto proj = qubit_projectors(t * std::numbers::pi / 180.0, f * std::numbers::pi / 180.0);
      Eigen::MatrixXd p(2, e.size());
      for (std::size_t g = 0; g < e.size(); ++g)
        for (int k = 0; k < 2; ++k) p(k, g) = (proj[k] * e.states()[g].matrix()).trace().real();
      best = std::max(best, mutual_information_joint(priors, p));
    }
  return best;
}

}  // namespace

TEST(Ensemble, Validation) {
  EXPECT_THROW(Ensemble::uniform({}), ValidationError);
  EXPECT_THROW(Ensemble(ProbVector::uniform(3), {DensityMatrix::maximally_mixed(2)}), ValidationError);
  EXPECT_THROW(Ensemble::uniform({DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(3)}),
               ValidationError);
}

TEST(Povm, Validation) {
  EXPECT_THROW(Povm({}), ValidationError);
  EXPECT_THROW(Povm({Matrix::Identity(2, 2) * 0.5}), ValidationError);  // incomplete
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = 1.0;
  Matrix comp = Matrix::Zero(2, 2);
  comp(0, 0) = -0.5;
  EXPECT_THROW(Povm({neg, comp}), ValidationError);  // negative element
  EXPECT_THROW(Povm({Matrix::Identity(2, 2), Matrix::Zero(3, 3)}), ValidationError);
  EXPECT_NO_THROW(Povm({Matrix::Identity(2, 2) * 0.5, Matrix::Identity(2, 2) * 0.5}));
}

TEST(OutcomeProbability, Examples) {
  Eigen::MatrixXd p = outcome_probability(zero_one(), Povm::computational_basis(2));
  EXPECT_LE((p - Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-15);

  Povm coin({Matrix::Identity(2, 2) * 0.5, Matrix::Identity(2, 2) * 0.5});
  Eigen::MatrixXd half = outcome_probability(random_ensemble(2, 3, 1), coin);
  EXPECT_LE((half.array() - 0.5).abs().maxCoeff(), 1e-15);

  Eigen::MatrixXd born = outcome_probability(zero_plus(), Povm::computational_basis(2));
  EXPECT_NEAR(born(0, 1), 0.5, 1e-15);
}

TEST(OutcomeProbability, ColumnsSumToOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 2 + seed % 4;
    Eigen::MatrixXd p = outcome_probability(random_ensemble(d, 3, seed), random_povm(d, d * d, seed));
    for (Eigen::Index g = 0; g < p.cols(); ++g) EXPECT_NEAR(p.col(g).sum(), 1.0, 1e-9);
    EXPECT_GE(p.minCoeff(), 0.0);
  }
}

TEST(OutcomeProbability, DimensionMismatch) {
  EXPECT_THROW(outcome_probability(zero_one(), Povm::computational_basis(3)), InvalidArgument);
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(mutual_information(zero_one(), Povm::computational_basis(2)), 1.0, 1e-12);
  EXPECT_EQ(mutual_information(random_ensemble(3, 4, 2), Povm({Matrix::Identity(3, 3)})), 0.0);
  // q = (3/4, 1/4), posteriors (2/3, 1/3) and (0, 1).
  const double oracle = 1.0 - 0.75 * binary_entropy(1.0 / 3.0);
  EXPECT_NEAR(oracle, 0.311278, 1e-6);
  EXPECT_NEAR(mutual_information(zero_plus(), Povm::computational_basis(2)), oracle, 1e-12);
}

TEST(MutualInformation, AgreesWithJointFormula) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t d = 2 + seed % 3;
    auto e = random_ensemble(d, 2 + seed % 4, seed);
    auto m = random_povm(d, d + seed % (d * d - d + 1), seed + 77);
    std::vector<double> priors(e.priors().values().begin(), e.priors().values().end());
    EXPECT_NEAR(mutual_information(e, m), mutual_information_joint(priors, outcome_probability(e, m)), 1e-10);
  }
}

TEST(MutualInformation, ZeroOutcomesAreDropped) {
  Povm padded({DensityMatrix::basis_state(2, 0).matrix(), DensityMatrix::basis_state(2, 1).matrix(),
               Matrix::Zero(2, 2)});
  EXPECT_NEAR(mutual_information(zero_one(), padded), 1.0, 1e-12);
}

TEST(MutualInformation, InvariantUnderJointUnitary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 2 + seed % 4;
    auto e = random_ensemble(d, 3, seed);
    auto m = random_povm(d, d + 1, seed);
    Matrix u = random_unitary(d, seed + 5);
    std::vector<DensityMatrix> states;
    for (const auto& s : e.states()) states.push_back(s.conjugated(u));
    std::vector<Matrix> elems;
    for (const auto& el : m.elements()) elems.push_back(u * el * u.adjoint());
    Ensemble e2(e.priors(), std::move(states));
    EXPECT_NEAR(mutual_information(e2, Povm(std::move(elems))), mutual_information(e, m), 1e-9);
  }
}

TEST(HolevoChi, Examples) {
  EXPECT_NEAR(holevo_chi(zero_one()), 1.0, 1e-12);
  EXPECT_NEAR(holevo_chi(Ensemble::uniform({random_density(3, 2, 4)})), 0.0, 1e-12);
  // Average of |0><0| and |+><+| has eigenvalues (1 +- 1/sqrt 2) / 2.
  const double oracle = binary_entropy((1.0 - 1.0 / std::sqrt(2.0)) / 2.0);
  EXPECT_NEAR(oracle, 0.600876, 1e-6);
  EXPECT_NEAR(holevo_chi(zero_plus()), oracle, 1e-12);
}

TEST(HolevoChi, BoundsEveryMeasurement) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 2 + seed % 4;
    auto e = random_ensemble(d, 2 + seed % 5, seed);
    const double chi = holevo_chi(e);
    EXPECT_GE(chi, -1e-12);
    EXPECT_LE(chi, std::log2(double(d)) + 1e-12);
    for (std::uint64_t k = 0; k < 5; ++k)
      EXPECT_LE(mutual_information(e, random_povm(d, d + (seed + k) % (d * d - d + 1), 1000 * seed + k)), chi + 1e-9);
  }
}

TEST(PrettyGoodMeasurement, OrthogonalStatesGiveProjectors) {
  Povm pgm = pretty_good_measurement(zero_one());
  ASSERT_EQ(pgm.size(), 2u);
  EXPECT_LE(frobenius_distance(pgm.elements()[0], DensityMatrix::basis_state(2, 0).matrix()), 1e-12);
  EXPECT_LE(frobenius_distance(pgm.elements()[1], DensityMatrix::basis_state(2, 1).matrix()), 1e-12);
}

TEST(PrettyGoodMeasurement, SingleMixedState) {
  Povm pgm = pretty_good_measurement(Ensemble::uniform({DensityMatrix::maximally_mixed(3)}));
  ASSERT_EQ(pgm.size(), 1u);
  EXPECT_LE(frobenius_distance(pgm.elements()[0], Matrix::Identity(3, 3)), 1e-12);
}

TEST(PrettyGoodMeasurement, ZeroPlusFixture) {
  const double oracle = qubit_grid_oracle(zero_plus());
  EXPECT_NEAR(oracle, 0.399124, 1e-6);
  const double value = mutual_information(zero_plus(), pretty_good_measurement(zero_plus()));
  EXPECT_GE(value, 0.39);
  EXPECT_NEAR(value, oracle, 1e-6);
}

TEST(PrettyGoodMeasurement, RankDeficientSupportGetsCompletion) {
  // Both states live in span{|0>, |1>} inside C^3.
  auto e = Ensemble::uniform({DensityMatrix::basis_state(3, 0), DensityMatrix::basis_state(3, 1)});
  Povm pgm = pretty_good_measurement(e);
  ASSERT_EQ(pgm.size(), 3u);
  EXPECT_LE(frobenius_distance(pgm.elements()[2], DensityMatrix::basis_state(3, 2).matrix()), 1e-12);
}

TEST(PrettyGoodMeasurement, AlwaysValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t d = 1 + seed % 5;
    EXPECT_NO_THROW(pretty_good_measurement(random_ensemble(d, 1 + seed % 6, seed)));
  }
}

TEST(AccessibleInfo, OrthogonalQubitStates) {
  auto s = accessible_info_lower(zero_one(), {}, 1);
  EXPECT_NEAR(s.lower, 1.0, 1e-6);
  EXPECT_NEAR(s.upper, 1.0, 1e-6);
}

TEST(AccessibleInfo, Z4OrbitReachesTwoBits) {
  auto rep = regular_representation(cyclic_group(4));
  auto s = accessible_info_lower(particle_ensemble(rep, DensityMatrix::basis_state(4, 0)), {}, 1);
  EXPECT_NEAR(s.lower, 2.0, 1e-6);
  EXPECT_NEAR(s.upper, 2.0, 1e-6);
}

TEST(AccessibleInfo, ZeroPlusSandwich) {
  auto s = accessible_info_lower(zero_plus(), {}, 3);
  EXPECT_GE(s.lower, 0.39);
  EXPECT_NEAR(s.lower, 0.399124, 1e-6);
  EXPECT_NEAR(s.upper, 0.600876, 1e-6);
  EXPECT_NEAR(mutual_information(zero_plus(), s.best_povm), s.lower, 1e-9);
}

TEST(AccessibleInfo, ZeroBudgetIsRejected) {
  EXPECT_THROW(accessible_info_lower(zero_one(), {.restarts = 0}, 1), InvalidArgument);
  EXPECT_THROW(accessible_info_lower(zero_one(), {.iterations = 0}, 1), InvalidArgument);
  EXPECT_THROW(accessible_info_lower(zero_one(), {.grid_steps = 0}, 1), InvalidArgument);
}

TEST(AccessibleInfo, DeterministicForSeedAndBudget) {
  auto e = random_ensemble(3, 4, 11);
  OptimizerBudget b{.restarts = 3, .iterations = 100};
  auto a = accessible_info_lower(e, b, 5);
  auto c = accessible_info_lower(e, b, 5);
  EXPECT_EQ(a.lower, c.lower);
  EXPECT_EQ(a.best_source, c.best_source);
  ASSERT_EQ(a.trace.size(), c.trace.size());
}

// Each restart follows a fixed trajectory, so a larger budget along either
// axis (or a finer grid that contains the coarser one) can only help.
TEST(AccessibleInfo, MonotoneInBudget) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto e = random_ensemble(2 + seed % 3, 3, seed);
    const std::vector<std::size_t> restarts{1, 2, 4};
    const std::vector<std::size_t> iterations{20, 80, 200};
    std::vector<std::vector<double>> lower(restarts.size(), std::vector<double>(iterations.size()));
    for (std::size_t r = 0; r < restarts.size(); ++r)
      for (std::size_t i = 0; i < iterations.size(); ++i)
        lower[r][i] =
            accessible_info_lower(e, {.restarts = restarts[r], .iterations = iterations[i], .grid_steps = 30}, seed)
                .lower;
    for (std::size_t r = 0; r < restarts.size(); ++r) {
      for (std::size_t i = 0; i < iterations.size(); ++i) {
        if (r > 0) EXPECT_GE(lower[r][i], lower[r - 1][i]) << "seed " << seed;
        if (i > 0) EXPECT_GE(lower[r][i], lower[r][i - 1]) << "seed " << seed;
      }
    }
    auto finer = accessible_info_lower(e, {.restarts = 1, .iterations = 20, .grid_steps = 60}, seed);
    EXPECT_GE(finer.lower, lower[0][0]);
  }
}

TEST(AccessibleInfo, SandwichHoldsAndBestPovmIsValid) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t d = 2 + seed % 3;
    auto e = random_ensemble(d, 2 + seed % 4, seed);
    auto s = accessible_info_lower(e, {.restarts = 2, .iterations = 150}, seed);
    EXPECT_GE(s.lower, 0.0);
    EXPECT_LE(s.lower, s.upper + 1e-9);
    EXPECT_NEAR(mutual_information(e, s.best_povm), s.lower, 1e-9);
    ASSERT_FALSE(s.trace.empty());
    EXPECT_EQ(s.trace.back().value, s.lower);
    for (std::size_t i = 1; i < s.trace.size(); ++i) EXPECT_GT(s.trace[i].value, s.trace[i - 1].value);
  }
}

TEST(AccessibleInfo, OrthogonalEnsemblesReachLogN) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<DensityMatrix> states;
    Matrix u = random_unitary(n, n);
    for (std::size_t k = 0; k < n; ++k) states.push_back(DensityMatrix::pure(u.col(k)));
    auto s = accessible_info_lower(Ensemble::uniform(std::move(states)), {}, n);
    EXPECT_NEAR(s.lower, std::log2(double(n)), 1e-6);
  }
}

TEST(AccessibleInfo, HillClimbImprovesOnPgmForTrine) {
  // Three symmetric real qubit states: the PGM is suboptimal and the optimum
  // needs a three-outcome POVM, beyond the projective grid.
  std::vector<DensityMatrix> states;
  for (int k = 0; k < 3; ++k) {
    Vector v(2);
    const double a = 2.0 * std::numbers::pi * k / 3.0;
    v << std::cos(a / 2), std::sin(a / 2);
    states.push_back(DensityMatrix::pure(v));
  }
  Ensemble trine = Ensemble::uniform(std::move(states));
  const double pgm = mutual_information(trine, pretty_good_measurement(trine));
  auto s = accessible_info_lower(trine, {}, 2);
  // Known optimum for the trine is log2(3) - 1 = 0.58496 bits.
  EXPECT_GT(s.lower, pgm + 1e-3);
  EXPECT_NEAR(s.lower, std::log2(3.0) - 1.0, 1e-4);
}
