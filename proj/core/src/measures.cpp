#include "wavepart/measures.hpp"

#include <cmath>

#include <fmt/format.h>

#include "wavepart/errors.hpp"

namespace wavepart {
namespace {

void require_same_dim(const UnitaryRep& rep, const DensityMatrix& rho, const char* what) {
  if (rep.dim() != rho.dim())
    throw InvalidArgument(fmt::format("{}: representation acts on C^{} but state has dimension {}", what, rep.dim(),
                                      rho.dim()));
}

// Sum of T_g rho T_g^dag for g in [lo, hi), split at the midpoint.
Matrix conjugate_sum(const UnitaryRep& rep, const Matrix& rho, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return rep[lo] * rho * rep[lo].adjoint();
  const std::size_t mid = lo + (hi - lo) / 2;
  Matrix left = conjugate_sum(rep, rho, lo, mid);
  left += conjugate_sum(rep, rho, mid, hi);
  return left;
}

}  // namespace

DensityMatrix twirl(const UnitaryRep& rep, const DensityMatrix& rho) {
  require_same_dim(rep, rho, "twirl");
  Matrix sum = conjugate_sum(rep, rho.matrix(), 0, rep.order());
  sum /= static_cast<double>(rep.order());
  return validate_density(sum);
}

double asymmetry(const UnitaryRep& rep, const DensityMatrix& rho) {
  return von_neumann_entropy(twirl(rep, rho)) - von_neumann_entropy(rho);
}

double symmetry(const UnitaryRep& rep, const DensityMatrix& rho) {
  return std::log2(static_cast<double>(rho.dim())) - von_neumann_entropy(twirl(rep, rho));
}

double covariance_residual(const UnitaryRep& rep, const DensityMatrix& sigma) {
  require_same_dim(rep, sigma, "covariance_residual");
  double worst = 0.0;
  for (const Matrix& t : rep.matrices())
    worst = std::max(worst, frobenius_distance(t * sigma.matrix() * t.adjoint(), sigma.matrix()));
  return worst;
}

MeasureReport complementarity_report(const UnitaryRep& rep, const DensityMatrix& rho) {
  require_same_dim(rep, rho, "complementarity_report");
  MeasureReport r;
  r.dim = rho.dim();
  r.group_order = rep.order();
  const double log_dim = std::log2(static_cast<double>(r.dim));
  r.entropy_rho = von_neumann_entropy(rho);
  r.entropy_twirl = von_neumann_entropy(twirl(rep, rho));
  r.asymmetry = r.entropy_twirl - r.entropy_rho;
  r.symmetry = log_dim - r.entropy_twirl;
  r.capacity = log_dim - r.entropy_rho;
  r.identity_residual = std::abs(r.asymmetry + r.symmetry - r.capacity);
  r.identity_holds = r.identity_residual <= tol::kEntropy;
  r.inequality_holds = r.asymmetry + r.symmetry <= r.capacity + tol::kEntropy;
  if (!r.inequality_holds)
    throw InvariantViolation(fmt::format("A + W = {:.12g} exceeds log2 D - S(rho) = {:.12g}",
                                         r.asymmetry + r.symmetry, r.capacity));
  return r;
}

}  // namespace wavepart
