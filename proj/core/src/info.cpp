#include "wavepart/info.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include <fmt/format.h>

#include "wavepart/errors.hpp"

namespace wavepart {

Ensemble::Ensemble(ProbVector priors, std::vector<DensityMatrix> states)
    : priors_(std::move(priors)), states_(std::move(states)) {
  if (states_.empty()) throw ValidationError("ensemble has no states");
  if (priors_.size() != states_.size())
    throw ValidationError(
        fmt::format("ensemble has {} priors but {} states", priors_.size(), states_.size()));
  for (std::size_t j = 1; j < states_.size(); ++j)
    if (states_[j].dim() != states_[0].dim())
      throw ValidationError(fmt::format("ensemble state {} has dimension {}, expected {}", j, states_[j].dim(),
                                        states_[0].dim()));
}

Ensemble Ensemble::uniform(std::vector<DensityMatrix> states) {
  if (states.empty()) throw ValidationError("ensemble has no states");
  auto priors = ProbVector::uniform(states.size());
  return Ensemble(std::move(priors), std::move(states));
}

DensityMatrix Ensemble::average() const {
  Matrix sum = Matrix::Zero(dim(), dim());
  for (std::size_t j = 0; j < size(); ++j) sum += priors_[j] * states_[j].matrix();
  return validate_density(sum);
}

Povm::Povm(std::vector<Matrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ValidationError("POVM has no elements");
  const Eigen::Index d = elements_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    Matrix& e = elements_[k];
    if (e.rows() != d || e.cols() != d)
      throw ValidationError(fmt::format("POVM element {} is {}x{}, expected {}x{}", k, e.rows(), e.cols(), d, d));
    const double herm = (e - e.adjoint()).norm();
    if (herm > tol::kState)
      throw ValidationError(fmt::format("POVM element {} is not Hermitian (deviation {:.3e})", k, herm));
    e = 0.5 * (e + e.adjoint());
    const double min_eig = hermitian_eigenvalues(e)(0);
    if (min_eig < -tol::kState)
      throw ValidationError(fmt::format("POVM element {} has negative eigenvalue {:.3e}", k, min_eig));
    sum += e;
  }
  const double dev = (sum - Matrix::Identity(d, d)).norm();
  if (dev > tol::kPovmCompleteness)
    throw ValidationError(fmt::format("POVM elements do not sum to identity (||sum - I||_F = {:.3e})", dev));
}

Povm Povm::computational_basis(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  std::vector<Matrix> elems;
  elems.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) elems.push_back(DensityMatrix::basis_state(dim, k).matrix());
  return Povm(std::move(elems));
}

Povm Povm::from_rank_one(const Matrix& vectors) {
  std::vector<Matrix> elems;
  elems.reserve(vectors.cols());
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) elems.emplace_back(vectors.col(k) * vectors.col(k).adjoint());
  return Povm(std::move(elems));
}

Eigen::MatrixXd outcome_probability(const Ensemble& ensemble, const Povm& povm) {
  if (ensemble.dim() != povm.dim())
    throw InvalidArgument(
        fmt::format("POVM acts on C^{} but ensemble states have dimension {}", povm.dim(), ensemble.dim()));
  Eigen::MatrixXd p(povm.size(), ensemble.size());
  for (std::size_t g = 0; g < ensemble.size(); ++g) {
    const Matrix& rho = ensemble.states()[g].matrix();
    for (std::size_t k = 0; k < povm.size(); ++k) {
      // Tr(A B) = sum_ij A_ij B_ji
      double v = povm.elements()[k].cwiseProduct(rho.transpose()).sum().real();
      if (v < 0.0 && v >= -tol::kProbability) v = 0.0;
      p(k, g) = v;
    }
  }
  return p;
}

double channel_mutual_information(std::span<const double> priors, const Eigen::MatrixXd& conditional) {
  if (static_cast<std::size_t>(conditional.cols()) != priors.size())
    throw InvalidArgument("channel matrix column count does not match number of priors");
  const double h_prior = detail::entropy_bits(priors);
  std::vector<double> posterior(priors.size());
  double equivocation = 0.0;
  for (Eigen::Index k = 0; k < conditional.rows(); ++k) {
    double q = 0.0;
    for (std::size_t g = 0; g < priors.size(); ++g) q += priors[g] * std::max(conditional(k, g), 0.0);
    if (q <= tol::kZeroOutcome) continue;
    for (std::size_t g = 0; g < priors.size(); ++g) posterior[g] = priors[g] * std::max(conditional(k, g), 0.0) / q;
    equivocation += q * detail::entropy_bits(posterior);
  }
  return std::clamp(h_prior - equivocation, 0.0, h_prior);
}

double mutual_information(const Ensemble& ensemble, const Povm& povm) {
  return channel_mutual_information(ensemble.priors().values(), outcome_probability(ensemble, povm));
}

double holevo_chi(const Ensemble& ensemble) {
  double mixed = 0.0;
  for (std::size_t j = 0; j < ensemble.size(); ++j) {
    const double p = ensemble.priors()[j];
    if (p > 0.0) mixed += p * von_neumann_entropy(ensemble.states()[j]);
  }
  return von_neumann_entropy(ensemble.average()) - mixed;
}

namespace {

constexpr double kSupportCutoff = 1e-10;

}  // namespace

Povm pretty_good_measurement(const Ensemble& ensemble) {
  const std::size_t d = ensemble.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(ensemble.average().matrix());
  if (solver.info() != Eigen::Success) throw NumericError("hermitian eigensolver did not converge");
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Matrix& u = solver.eigenvectors();

  Eigen::VectorXd inv_sqrt(d), support(d);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const bool in = lambda(i) > kSupportCutoff;
    inv_sqrt(i) = in ? 1.0 / std::sqrt(lambda(i)) : 0.0;
    support(i) = in ? 1.0 : 0.0;
    rank += in;
  }
  const Matrix r = u * inv_sqrt.asDiagonal() * u.adjoint();

  std::vector<Matrix> elems;
  elems.reserve(ensemble.size() + 1);
  for (std::size_t k = 0; k < ensemble.size(); ++k) {
    Matrix e = r * (ensemble.priors()[k] * ensemble.states()[k].matrix()) * r;
    elems.emplace_back(0.5 * (e + e.adjoint()));
  }
  if (rank < d) {
    Matrix proj = u * support.asDiagonal() * u.adjoint();
    Matrix comp = Matrix::Identity(d, d) - proj;
    elems.emplace_back(0.5 * (comp + comp.adjoint()));
  }
  return Povm(std::move(elems));
}

namespace {

// Mutual information search state shared by the grid and hill-climb stages.
class Search {
 public:
  explicit Search(const Ensemble& e) : ensemble_(e), priors_(e.priors().values()) {}

  // Columns of `vectors` are rank-one POVM vectors with sum v v^dag = I.
  double rank_one_value(const Matrix& vectors) const {
    Eigen::MatrixXd p(vectors.cols(), ensemble_.size());
    for (std::size_t g = 0; g < ensemble_.size(); ++g) {
      Matrix w = ensemble_.states()[g].matrix() * vectors;
      p.col(g) = vectors.conjugate().cwiseProduct(w).colwise().sum().real().transpose();
    }
    return channel_mutual_information(priors_, p);
  }

  // Offers a candidate; returns true if it became the new best.
  bool offer(double value, const char* source, std::size_t restart = 0) {
    ++evaluations_;
    if (value <= best_) return false;
    best_ = value;
    best_source_ = restart == kNoRestart ? std::string(source) : fmt::format("{}:{}", source, restart);
    trace_.push_back({evaluations_ - 1, value});
    return true;
  }

  static constexpr std::size_t kNoRestart = static_cast<std::size_t>(-1);

  const Ensemble& ensemble_;
  std::span<const double> priors_;
  double best_ = -1.0;
  std::string best_source_;
  std::optional<Povm> best_povm_;
  std::vector<TracePoint> trace_;
  std::size_t evaluations_ = 0;
};

// V <- (V V^dag)^-1/2 V so that the columns form a rank-one POVM. Returns
// false if V V^dag is numerically singular.
bool project_to_povm(Matrix& vectors) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(vectors * vectors.adjoint());
  if (solver.info() != Eigen::Success) return false;
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  if (lambda(0) <= 1e-12 * std::max(1.0, lambda(lambda.size() - 1))) return false;
  const Eigen::VectorXd inv_sqrt = lambda.cwiseSqrt().cwiseInverse();
  vectors = solver.eigenvectors() * inv_sqrt.asDiagonal() * solver.eigenvectors().adjoint() * vectors;
  return true;
}

Matrix complex_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = cplx(re, im);
    }
  return m;
}

// Rank-one decomposition of a POVM, padded with zero columns to `width`.
std::optional<Matrix> rank_one_columns(const Povm& povm, std::size_t width) {
  std::vector<Vector> cols;
  for (const Matrix& e : povm.elements()) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(e);
    if (solver.info() != Eigen::Success) return std::nullopt;
    for (Eigen::Index i = 0; i < e.rows(); ++i)
      if (solver.eigenvalues()(i) > kSupportCutoff)
        cols.emplace_back(std::sqrt(solver.eigenvalues()(i)) * solver.eigenvectors().col(i));
  }
  if (cols.size() > width) return std::nullopt;
  Matrix v = Matrix::Zero(povm.dim(), width);
  for (std::size_t k = 0; k < cols.size(); ++k) v.col(k) = cols[k];
  return v;
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32), 0x77617665u};
  return std::mt19937_64(seq);
}

void qubit_grid(Search& search, std::size_t steps) {
  const double pi = std::numbers::pi;
  Matrix best_vectors;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double theta = pi * static_cast<double>(i) / static_cast<double>(steps);
    for (std::size_t j = 0; j < 2 * steps; ++j) {
      const double phi = pi * static_cast<double>(j) / static_cast<double>(steps);
      const cplx phase = std::polar(1.0, phi);
      Matrix v(2, 2);
      v(0, 0) = std::cos(theta / 2);
      v(1, 0) = phase * std::sin(theta / 2);
      v(0, 1) = -std::conj(phase) * std::sin(theta / 2);
      v(1, 1) = std::cos(theta / 2);
      if (search.offer(search.rank_one_value(v), "grid", Search::kNoRestart)) best_vectors = v;
    }
  }
  if (best_vectors.size() != 0 && search.best_source_ == "grid") search.best_povm_ = Povm::from_rank_one(best_vectors);
}

void hill_climb(Search& search, const Povm& pgm, std::size_t restart, std::size_t iterations, std::uint64_t seed) {
  const auto d = static_cast<Eigen::Index>(search.ensemble_.dim());
  const Eigen::Index width = d * d;
  std::mt19937_64 rng = restart_rng(seed, restart);

  Matrix v;
  std::optional<Matrix> from_pgm;
  if (restart == 0) from_pgm = rank_one_columns(pgm, static_cast<std::size_t>(width));
  if (from_pgm) {
    v = std::move(*from_pgm);
  } else {
    do {
      v = complex_normal(d, width, rng);
    } while (!project_to_povm(v));
  }

  double current = search.rank_one_value(v);
  Matrix best_vectors;
  if (search.offer(current, "climb", restart)) best_vectors = v;

  constexpr double kInitialStep = 0.5;
  double step = kInitialStep;
  const double scale = 1.0 / std::sqrt(static_cast<double>(width));
  for (std::size_t it = 0; it < iterations; ++it) {
    Matrix candidate = v + (step * scale) * complex_normal(d, width, rng);
    double value = -1.0;
    if (project_to_povm(candidate)) value = search.rank_one_value(candidate);
    if (value > current) {
      v = std::move(candidate);
      current = value;
      step = std::min(step * 1.5, 1.0);
      if (search.offer(current, "climb", restart)) best_vectors = v;
    } else {
      ++search.evaluations_;
      step *= 0.7;
      if (step < 1e-6) step = kInitialStep;
    }
  }
  if (best_vectors.size() != 0 && search.best_source_ == fmt::format("climb:{}", restart))
    search.best_povm_ = Povm::from_rank_one(best_vectors);
}

}  // namespace

InfoSandwich accessible_info_lower(const Ensemble& ensemble, const OptimizerBudget& budget, std::uint64_t seed) {
  if (budget.restarts == 0 || budget.iterations == 0 || budget.grid_steps == 0)
    throw InvalidArgument("accessible_info_lower: every budget component must be positive");

  Search search(ensemble);
  Povm pgm = pretty_good_measurement(ensemble);
  search.offer(mutual_information(ensemble, pgm), "pgm", Search::kNoRestart);
  search.best_povm_ = pgm;

  if (ensemble.dim() == 2) qubit_grid(search, budget.grid_steps);
  for (std::size_t r = 0; r < budget.restarts; ++r) hill_climb(search, pgm, r, budget.iterations, seed);

  return InfoSandwich{.lower = search.best_,
                      .upper = holevo_chi(ensemble),
                      .best_povm = std::move(*search.best_povm_),
                      .best_source = search.best_source_,
                      .trace = std::move(search.trace_)};
}

}  // namespace wavepart
