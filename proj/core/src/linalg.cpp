#include "wavepart/linalg.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "wavepart/errors.hpp"

namespace wavepart {

ProbVector ProbVector::distribution(std::vector<double> entries) {
  if (entries.empty()) throw ValidationError("probability vector is empty");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    double& p = entries[i];
    if (!std::isfinite(p)) throw ValidationError(fmt::format("probability {} is not finite", i));
    if (p < -tol::kProbability)
      throw ValidationError(fmt::format("probability {} is negative ({:.3e})", i, p));
    if (p < 0.0) p = 0.0;
  }
  const double sum = std::accumulate(entries.begin(), entries.end(), 0.0);
  if (std::abs(sum - 1.0) > tol::kDistribution)
    throw ValidationError(fmt::format("probabilities sum to {:.12g}, not 1", sum));
  return ProbVector(std::move(entries));
}

ProbVector ProbVector::uniform(std::size_t n) {
  if (n == 0) throw InvalidArgument("uniform distribution over zero outcomes");
  return ProbVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DensityMatrix DensityMatrix::conjugated(const Matrix& unitary) const {
  Matrix out = unitary * data_ * unitary.adjoint();
  return DensityMatrix(Matrix(0.5 * (out + out.adjoint())));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("dimension must be >= 1");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument(fmt::format("basis index {} out of range for dimension {}", index, dim));
  Matrix m = Matrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm2 = psi.squaredNorm();
  if (psi.size() == 0 || norm2 == 0.0) throw InvalidArgument("pure state vector has zero norm");
  return DensityMatrix(Matrix(psi * psi.adjoint() / norm2));
}

DensityMatrix validate_density(const Matrix& m) {
  using Kind = DensityError::Kind;
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DensityError(Kind::kNotSquare, fmt::format("density matrix is {}x{}", m.rows(), m.cols()), 0.0);
  if (!m.allFinite()) throw DensityError(Kind::kNotHermitian, "density matrix has non-finite entries", INFINITY);

  const double herm = (m - m.adjoint()).norm();
  if (herm > tol::kState)
    throw DensityError(Kind::kNotHermitian, fmt::format("not Hermitian: ||m - m^dag||_F = {:.3e}", herm), herm);
  Matrix sym = 0.5 * (m + m.adjoint());

  const double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > tol::kState)
    throw DensityError(Kind::kBadTrace, fmt::format("trace is {:.12g}, not 1", trace), std::abs(trace - 1.0));

  const double min_eig = hermitian_eigenvalues(sym)(0);
  if (min_eig < -tol::kState)
    throw DensityError(Kind::kNotPositive, fmt::format("negative eigenvalue {:.6g}", min_eig), -min_eig);
  return DensityMatrix(std::move(sym));
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

namespace detail {

double entropy_bits(std::span<const double> weights) {
  double h = 0.0;
  for (double p : weights)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace detail

double shannon_entropy(const ProbVector& p) { return detail::entropy_bits(p.values()); }

ProbVector spectrum(const DensityMatrix& rho) {
  Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  for (double& x : out) {
    if (x < -tol::kDistribution) throw NumericError(fmt::format("state has eigenvalue {:.3e}", x));
    if (x < 0.0) x = 0.0;
  }
  return ProbVector::distribution(std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol::kDistribution) throw NumericError(fmt::format("state has eigenvalue {:.3e}", ev(i)));
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return detail::entropy_bits({ev.data(), static_cast<std::size_t>(ev.size())});
}

namespace {

Matrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // Column-major fill order fixes the draw sequence for a given seed.
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = cplx(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0 || dim > kMaxDim) throw InvalidArgument(fmt::format("random_density: invalid dimension {}", dim));
  if (rank == 0 || rank > dim)
    throw InvalidArgument(fmt::format("random_density: rank {} outside 1..{}", rank, dim));
  std::mt19937_64 rng(seed);
  Matrix g = ginibre(dim, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(rho);
}

Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0 || dim > kMaxDim) throw InvalidArgument(fmt::format("random_unitary: invalid dimension {}", dim));
  std::mt19937_64 rng(seed);
  Matrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < dim; ++i) {
    const cplx d = r(i, i);
    const double a = std::abs(d);
    if (a > 0.0) q.col(i) *= d / a;
  }
  return q;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw InvalidArgument(fmt::format("trace_distance: dimension mismatch {} vs {}", a.dim(), b.dim()));
  Eigen::VectorXd ev = hermitian_eigenvalues(a.matrix() - b.matrix());
  return 0.5 * ev.cwiseAbs().sum();
}

}  // namespace wavepart
