#include "wavepart/encodings.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "wavepart/errors.hpp"
#include "wavepart/measures.hpp"

namespace wavepart {

WaveEncoder::WaveEncoder(std::vector<Matrix> unitaries) : WaveEncoder(std::move(unitaries), false) {}

WaveEncoder::WaveEncoder(std::vector<Matrix> unitaries, bool complete)
    : unitaries_(std::move(unitaries)), complete_(complete) {
  if (unitaries_.empty()) throw ValidationError("wave encoder has no unitaries");
  const Eigen::Index d = unitaries_.front().rows();
  if (d == 0 || static_cast<std::size_t>(d) > kMaxDim)
    throw InvalidArgument(fmt::format("wave encoder dimension {} out of range", d));
  const Matrix id = Matrix::Identity(d, d);
  for (std::size_t j = 0; j < unitaries_.size(); ++j) {
    const Matrix& u = unitaries_[j];
    if (u.rows() != d || u.cols() != d)
      throw ValidationError(fmt::format("encoder unitary {} is {}x{}, expected {}x{}", j, u.rows(), u.cols(), d, d));
    const double dev = (u.adjoint() * u - id).norm();
    if (dev > tol::kRep)
      throw ValidationError(fmt::format("encoder matrix {} is not unitary (deviation {:.3e})", j, dev));
  }
}

Ensemble particle_ensemble(const UnitaryRep& rep, const DensityMatrix& rho) {
  if (rep.dim() != rho.dim())
    throw InvalidArgument(fmt::format("particle_ensemble: representation acts on C^{} but state has dimension {}",
                                      rep.dim(), rho.dim()));
  std::vector<DensityMatrix> states;
  states.reserve(rep.order());
  for (const Matrix& t : rep.matrices()) states.push_back(rho.conjugated(t));
  return Ensemble::uniform(std::move(states));
}

WaveEncoder weyl_unitaries(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("weyl_unitaries: dimension must be >= 1");
  if (dim > kMaxDim) throw InvalidArgument(fmt::format("weyl_unitaries: dimension {} exceeds {}", dim, kMaxDim));
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix shift = Matrix::Zero(d, d);
  Matrix clock = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim));
  }
  std::vector<Matrix> out;
  out.reserve(dim * dim);
  Matrix shift_power = Matrix::Identity(d, d);
  for (std::size_t a = 0; a < dim; ++a) {
    Matrix w = shift_power;
    for (std::size_t b = 0; b < dim; ++b) {
      out.push_back(w);
      w = w * clock;
    }
    shift_power = shift * shift_power;
  }
  return WaveEncoder(std::move(out), true);
}

WaveEncoder trivial_encoder(std::size_t dim) {
  if (dim == 0) throw InvalidArgument("trivial_encoder: dimension must be >= 1");
  return WaveEncoder(std::vector<Matrix>{Matrix::Identity(dim, dim)});
}

Ensemble wave_encode(const WaveEncoder& encoder, const UnitaryRep& rep, const DensityMatrix& rho) {
  if (encoder.dim() != rho.dim())
    throw InvalidArgument(
        fmt::format("wave_encode: encoder acts on C^{} but state has dimension {}", encoder.dim(), rho.dim()));
  const DensityMatrix symmetric = twirl(rep, rho);
  std::vector<DensityMatrix> states;
  states.reserve(encoder.size());
  for (const Matrix& u : encoder.unitaries()) states.push_back(symmetric.conjugated(u));
  return Ensemble::uniform(std::move(states));
}

double wave_info_bound(const UnitaryRep& rep, const DensityMatrix& rho) {
  const double w = symmetry(rep, rho);
  const double chi = holevo_chi(wave_encode(weyl_unitaries(rho.dim()), rep, rho));
  if (std::abs(w - chi) > tol::kEntropy)
    throw InvariantViolation(
        fmt::format("Weyl-encoded Holevo quantity {:.12g} differs from symmetry {:.12g}", chi, w));
  return w;
}

}  // namespace wavepart
