#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wavepart/group.hpp"
#include "wavepart/info.hpp"
#include "wavepart/linalg.hpp"

namespace wavepart {

/// A list of N unitaries applied with uniform priors 1/N.
class WaveEncoder {
 public:
  /// Validates that every matrix is a D x D unitary to 1e-10. The result is
  /// never flagged complete; only weyl_unitaries() produces complete sets.
  explicit WaveEncoder(std::vector<Matrix> unitaries);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(unitaries_.front().rows()); }
  std::size_t size() const noexcept { return unitaries_.size(); }
  std::span<const Matrix> unitaries() const noexcept { return unitaries_; }
  /// True when (1/N) sum_j U_j rho U_j^dag = I/D for every rho.
  bool is_complete() const noexcept { return complete_; }

 private:
  WaveEncoder(std::vector<Matrix> unitaries, bool complete);
  friend WaveEncoder weyl_unitaries(std::size_t dim);

  std::vector<Matrix> unitaries_;
  bool complete_ = false;
};

/// {1/|G| : T_g rho T_g^dag}. Its average is twirl(rep, rho).
Ensemble particle_ensemble(const UnitaryRep& rep, const DensityMatrix& rho);

/// The D^2 shift-and-clock unitaries X^a Z^b, index a*D + b, with
/// X|k> = |k+1 mod D> and Z|k> = exp(2 pi i k / D)|k>. Flagged complete.
WaveEncoder weyl_unitaries(std::size_t dim);

/// The single-element encoder {I}.
WaveEncoder trivial_encoder(std::size_t dim);

/// {1/N : U_j G[rho] U_j^dag}.
Ensemble wave_encode(const WaveEncoder& encoder, const UnitaryRep& rep, const DensityMatrix& rho);

/// symmetry(rep, rho), after checking that it matches the Holevo quantity of
/// the Weyl-encoded twirl to 1e-9. Throws InvariantViolation otherwise.
double wave_info_bound(const UnitaryRep& rep, const DensityMatrix& rho);

}  // namespace wavepart
