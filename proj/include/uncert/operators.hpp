#pragma once

#include "uncert/hilbert.hpp"

namespace uncert {

/// Angular momentum components for spin j in the basis |j>, |j-1>, ..., |-j>.
struct SpinTriple {
  HermitianOperator jx;
  HermitianOperator jy;
  HermitianOperator jz;
  double j;
  double hbar;
};

/// Truncated single-mode Fock space of dimension `dim`.
///
/// Truncation makes [a, a^dagger] equal the identity except for the corner
/// entry (dim-1, dim-1), which is 1 - dim. Everything built from a FockAlgebra
/// is only trusted for states that carry negligible weight on the top two
/// levels; see `check_low_occupancy`.
struct FockAlgebra {
  ComplexMatrix a;
  ComplexMatrix a_dagger;
  Eigen::Index dim;
  double hbar;
};

struct QuadraturePair {
  HermitianOperator x1;  // (a + a^dagger) / 2
  HermitianOperator x2;  // (a - a^dagger) / 2i
};

struct PositionMomentum {
  HermitianOperator x;
  HermitianOperator p;
};

SpinTriple spin_operators(double j, double hbar = 1.0);

FockAlgebra ladder_operators(Eigen::Index dim, double hbar = 1.0);
QuadraturePair quadratures(const FockAlgebra& alg);
PositionMomentum position_momentum(const FockAlgebra& alg);

// Default truncation for squeezed/coherent state work.
inline constexpr Eigen::Index kDefaultFockDim = 40;
inline constexpr double kLowOccupancyWeight = 1e-8;

/// Probability weight on the two highest Fock levels.
double top_level_weight(const StateVector& psi);
/// Throws ValidationError if top_level_weight(psi) >= kLowOccupancyWeight.
void check_low_occupancy(const StateVector& psi);

StateVector fock_state(Eigen::Index dim, Eigen::Index n);
StateVector coherent_state(Eigen::Index dim, Complex alpha);
/// S(r)|0> with S(r) = exp[r(a^2 - a^dagger^2)/2]; squeezes X1 to e^{-2r}/4.
StateVector squeezed_vacuum(Eigen::Index dim, double r);

}  // namespace uncert
