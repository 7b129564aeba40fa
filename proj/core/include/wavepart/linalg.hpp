#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wavepart/errors.hpp"
#include "wavepart/types.hpp"

namespace wavepart {

/// A probability distribution. Entries in [-1e-12, 0) are clamped to zero;
/// anything more negative, or a sum further than 1e-10 from one, is rejected.
class ProbVector {
 public:
  static ProbVector distribution(std::vector<double> entries);
  static ProbVector uniform(std::size_t n);

  std::span<const double> values() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  explicit ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {}
  std::vector<double> entries_;
};

/// Hermitian, unit-trace, positive semidefinite D x D matrix.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  const Matrix& matrix() const noexcept { return data_; }

  /// U rho U^dag. U must be unitary; the result is re-symmetrized but not re-validated.
  DensityMatrix conjugated(const Matrix& unitary) const;

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix basis_state(std::size_t dim, std::size_t index);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const Vector& psi);

 private:
  explicit DensityMatrix(Matrix data) : data_(std::move(data)) {}
  friend DensityMatrix validate_density(const Matrix& m);

  Matrix data_;
};

/// Checks Hermiticity, trace and positivity to 1e-10 and throws DensityError
/// with the measured deviation otherwise. Small anti-Hermitian parts are
/// removed by replacing m with (m + m^dag) / 2.
DensityMatrix validate_density(const Matrix& m);

/// Eigenvalues of a Hermitian matrix in ascending order. Throws NumericError
/// if the solver does not converge.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Returns f(m) = V diag(f(lambda)) V^dag for Hermitian m.
template <typename Fn>
Matrix hermitian_function(const Matrix& m, Fn&& fn);

/// H(p) = -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(const ProbVector& p);

/// S(rho) = -Tr rho log2 rho via the eigenvalue spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// Spectrum of rho as a distribution (eigenvalues above -1e-10 clamped to zero).
ProbVector spectrum(const DensityMatrix& rho);

/// G G^dag / Tr(G G^dag) for a dim x rank matrix G of i.i.d. complex
/// standard normals. rank = dim gives the Hilbert-Schmidt measure.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase correction).
Matrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Trace distance (1/2) ||a - b||_1, in [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

namespace detail {
/// Entropy in bits of non-negative weights without any normalization check.
double entropy_bits(std::span<const double> weights);
}  // namespace detail

template <typename Fn>
Matrix hermitian_function(const Matrix& m, Fn&& fn) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericError("hermitian eigensolver did not converge");
  Eigen::VectorXd mapped = solver.eigenvalues().unaryExpr(fn);
  return solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace wavepart
