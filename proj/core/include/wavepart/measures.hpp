#pragma once

#include <cstddef>

#include "wavepart/group.hpp"
#include "wavepart/linalg.hpp"

namespace wavepart {

/// G[rho] = (1/|G|) sum_g T_g rho T_g^dag.
///
/// Terms are combined by a fixed pairwise tree over element indices, so the
/// result is bit-identical for identical inputs. The output is validated.
DensityMatrix twirl(const UnitaryRep& rep, const DensityMatrix& rho);

/// A_G(rho) = S(G[rho]) - S(rho), in bits.
double asymmetry(const UnitaryRep& rep, const DensityMatrix& rho);

/// W_G(rho) = log2 D - S(G[rho]), in bits.
double symmetry(const UnitaryRep& rep, const DensityMatrix& rho);

/// max_g ||T_g sigma T_g^dag - sigma||_F. Zero for group-invariant states.
double covariance_residual(const UnitaryRep& rep, const DensityMatrix& sigma);

struct MeasureReport {
  std::size_t dim = 0;
  std::size_t group_order = 0;
  double entropy_rho = 0.0;
  double entropy_twirl = 0.0;
  double asymmetry = 0.0;
  double symmetry = 0.0;
  /// log2 D - S(rho): the most information the state can carry.
  double capacity = 0.0;
  /// |A + W - capacity|; zero up to rounding.
  double identity_residual = 0.0;
  bool identity_holds = false;
  /// A + W <= capacity + 1e-9.
  bool inequality_holds = false;
};

/// Computes every entropic quantity for (rep, rho). Throws InvariantViolation
/// if A + W exceeds the capacity by more than 1e-9.
MeasureReport complementarity_report(const UnitaryRep& rep, const DensityMatrix& rho);

}  // namespace wavepart
