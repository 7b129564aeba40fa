#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace wavepart {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
/// Hermiticity, trace and positivity of states; unitarity and homomorphism of reps.
inline constexpr double kState = 1e-10;
inline constexpr double kRep = 1e-10;
/// Clamp threshold for slightly negative probabilities.
inline constexpr double kProbability = 1e-12;
/// Distribution sums and eigenvalue clamping.
inline constexpr double kDistribution = 1e-10;
inline constexpr double kPovmCompleteness = 1e-8;
/// Outcomes rarer than this are dropped from posterior entropies.
inline constexpr double kZeroOutcome = 1e-15;
/// Entropic identities and inequalities.
inline constexpr double kEntropy = 1e-9;
}  // namespace tol

/// Largest Hilbert-space dimension accepted anywhere in the library.
inline constexpr std::size_t kMaxDim = 512;
/// Upper bound on |G| * D^2 complex entries held by a representation.
inline constexpr std::size_t kMaxWorkingSet = std::size_t{1} << 26;

inline double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

}  // namespace wavepart
