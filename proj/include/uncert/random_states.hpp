#pragma once

#include <cstdint>
#include <random>

#include "uncert/hilbert.hpp"

namespace uncert {

/// Seeded random stream. Passed explicitly into every sampling call.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  /// Independent stream derived from (seed, stream); used for per-row
  /// sampling so results do not depend on evaluation order.
  static RandomSource for_stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }

  double normal();
  double uniform();  // [0, 1)
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();

 private:
  RandomSource(std::uint64_t seed, std::seed_seq& seq);

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

class UnitaryMatrix {
 public:
  /// Throws ValidationError unless ||U^dagger U - I||_max < tol.
  explicit UnitaryMatrix(ComplexMatrix entries, double tol = 1e-12);

  const ComplexMatrix& matrix() const noexcept { return u_; }
  Eigen::Index dim() const noexcept { return u_.rows(); }

 private:
  ComplexMatrix u_;
};

double unitarity_defect(const ComplexMatrix& u);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal moved into Q.
UnitaryMatrix haar_unitary(Eigen::Index dim, RandomSource& rng);

/// Random state orthogonal to psi: normalize((1 - |psi><psi|) U e_0) with U Haar.
StateVector random_perp(const StateVector& psi, RandomSource& rng);

/// (cos t |1> + |0> + sin t |-1>)/sqrt(2) in the spin-1 basis order (|1>,|0>,|-1>).
StateVector theta_state(double theta);

/// Spin-j generalisation of theta_state: cos t on |j>, sin t on |-j>, unit
/// amplitude on every intermediate level. Equals theta_state at dim 3.
StateVector theta_family_state(Eigen::Index dim, double theta);

/// Uniformly random pure state (normalised complex Gaussian vector).
StateVector random_state(Eigen::Index dim, RandomSource& rng);

/// Random Hermitian matrix (M + M^dagger)/2 with Ginibre M.
HermitianOperator random_hermitian(Eigen::Index dim, RandomSource& rng);

}  // namespace uncert
