#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "uncert/errors.hpp"

namespace uncert {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Tolerances shared by the whole library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNullNorm = 1e-13;
inline constexpr double kRealPartTol = 1e-10;

/// Unit-norm amplitude vector over a finite basis (dim >= 2).
///
/// The only ways to obtain one are `normalize` (any non-null vector) and
/// `from_normalized` (vector already of unit norm up to a tolerance), so every
/// StateVector in the program has unit norm.
class StateVector {
 public:
  static StateVector from_normalized(ComplexVector amplitudes, double tol = 1e-10);

  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Eigen::Index dim() const noexcept { return amps_.size(); }
  Complex operator[](Eigen::Index i) const { return amps_[i]; }

 private:
  explicit StateVector(ComplexVector amps) : amps_(std::move(amps)) {}
  friend StateVector normalize(const ComplexVector& v);

  ComplexVector amps_;
};

/// Square complex matrix equal to its adjoint within kHermitianTol (max-norm).
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix entries);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

StateVector normalize(const ComplexVector& v);

/// <u|v>, conjugate-linear in u.
Complex inner(const ComplexVector& u, const ComplexVector& v);
inline Complex inner(const StateVector& u, const StateVector& v) {
  return inner(u.amplitudes(), v.amplitudes());
}

/// (1 - |psi><psi|) v
ComplexVector project_out(const StateVector& psi, const ComplexVector& v);

double expectation(const StateVector& psi, const HermitianOperator& m);

/// <M^2> - <M>^2, clamped at zero.
double variance(const StateVector& psi, const HermitianOperator& m);

/// i<psi|[A,B]|psi>, which is real for Hermitian A and B.
double commutator_mean(const StateVector& psi, const HermitianOperator& a,
                       const HermitianOperator& b);

struct Eigensystem {
  RealVector values;                 // ascending
  std::vector<StateVector> vectors;  // vectors[k] belongs to values[k]
  ComplexMatrix basis;               // same vectors as columns
};

Eigensystem hermitian_eigensystem(const HermitianOperator& m);

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what);

}  // namespace uncert
