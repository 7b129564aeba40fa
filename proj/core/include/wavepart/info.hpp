#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wavepart/linalg.hpp"

namespace wavepart {

/// Prior probabilities paired with states of a common dimension.
class Ensemble {
 public:
  Ensemble(ProbVector priors, std::vector<DensityMatrix> states);
  static Ensemble uniform(std::vector<DensityMatrix> states);

  const ProbVector& priors() const noexcept { return priors_; }
  std::span<const DensityMatrix> states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }

  /// sum_j p_j rho_j.
  DensityMatrix average() const;

 private:
  ProbVector priors_;
  std::vector<DensityMatrix> states_;
};

/// Positive operators summing to the identity.
class Povm {
 public:
  /// Validates each element (Hermitian and PSD to 1e-10) and completeness
  /// ||sum - I||_F <= 1e-8. Throws ValidationError.
  explicit Povm(std::vector<Matrix> elements);

  static Povm computational_basis(std::size_t dim);
  /// pi_k = v_k v_k^dag for the columns v_k of `vectors`.
  static Povm from_rank_one(const Matrix& vectors);

  std::span<const Matrix> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(elements_.front().rows()); }

 private:
  std::vector<Matrix> elements_;
};

/// P(k|g) = Tr(pi_k rho_g), with rows indexed by outcome k and columns by
/// ensemble member g. Entries in [-1e-12, 0) are clamped to zero.
Eigen::MatrixXd outcome_probability(const Ensemble& ensemble, const Povm& povm);

/// Mutual information of the classical channel p(g) -> P(k|g), in bits,
/// computed as H(p) - sum_k q(k) H(Q(.|k)). Outcomes with q(k) <= 1e-15 are
/// skipped. The result is clamped to [0, H(p)].
double channel_mutual_information(std::span<const double> priors, const Eigen::MatrixXd& conditional);

double mutual_information(const Ensemble& ensemble, const Povm& povm);

/// Holevo quantity chi = S(sum p_j rho_j) - sum p_j S(rho_j).
double holevo_chi(const Ensemble& ensemble);

/// pi_k = A^-1/2 p_k rho_k A^-1/2 with A the ensemble average (inverse taken
/// on the support), plus I - P_support when A is rank deficient.
Povm pretty_good_measurement(const Ensemble& ensemble);

struct OptimizerBudget {
  /// Independent hill-climb runs. Run 0 starts from the pretty-good measurement.
  std::size_t restarts = 4;
  /// Proposals per hill-climb run.
  std::size_t iterations = 400;
  /// Polar divisions of the qubit projective grid (180 = 1 degree). The
  /// azimuth uses twice as many, so doubling this refines the grid.
  std::size_t grid_steps = 180;
};

struct TracePoint {
  std::size_t iteration = 0;
  double value = 0.0;
};

/// Certified bracket lower <= accessible information <= upper.
struct InfoSandwich {
  double lower = 0.0;
  double upper = 0.0;
  Povm best_povm;
  /// "pgm", "grid" or "climb:<restart>".
  std::string best_source;
  /// Best-so-far value each time it improved, indexed by candidate count.
  std::vector<TracePoint> trace;

  double gap() const noexcept { return upper - lower; }
};

/// Lower-bounds the accessible information of `ensemble` by the best of: the
/// pretty-good measurement, a projective Bloch-sphere grid (qubits only), and
/// randomized hill-climbs over rank-one POVMs with D^2 outcomes. The upper
/// bound is holevo_chi. Deterministic for fixed (budget, seed); restart r
/// draws from a generator seeded by (seed, r) only.
InfoSandwich accessible_info_lower(const Ensemble& ensemble, const OptimizerBudget& budget, std::uint64_t seed);

}  // namespace wavepart
