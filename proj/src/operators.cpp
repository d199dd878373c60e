#include "uncert/operators.hpp"

#include <cmath>
#include <string>

namespace uncert {

SpinTriple spin_operators(double j, double hbar) {
  const double twice = 2.0 * j;
  if (!(j > 0.0) || std::abs(twice - std::round(twice)) > 1e-12) {
    throw ValidationError("spin j must be a positive half-integer");
  }
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  const auto dim = static_cast<Eigen::Index>(std::lround(twice)) + 1;

  // index k carries m = j - k
  ComplexMatrix jplus = ComplexMatrix::Zero(dim, dim);
  RealVector m(dim);
  for (Eigen::Index k = 0; k < dim; ++k) m[k] = j - static_cast<double>(k);
  for (Eigen::Index k = 1; k < dim; ++k) {
    jplus(k - 1, k) = hbar * std::sqrt(j * (j + 1.0) - m[k] * (m[k] + 1.0));
  }
  const ComplexMatrix jminus = jplus.adjoint();
  ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
  jz.diagonal() = (hbar * m).cast<Complex>();

  return SpinTriple{HermitianOperator((jplus + jminus) / 2.0),
                    HermitianOperator((jplus - jminus) / (2.0 * kI)),
                    HermitianOperator(std::move(jz)), j, hbar};
}

FockAlgebra ladder_operators(Eigen::Index dim, double hbar) {
  if (dim < 2) throw ValidationError("Fock truncation must be at least 2");
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ComplexMatrix ad = a.adjoint();
  return FockAlgebra{std::move(a), std::move(ad), dim, hbar};
}

QuadraturePair quadratures(const FockAlgebra& alg) {
  return QuadraturePair{HermitianOperator((alg.a + alg.a_dagger) / 2.0),
                        HermitianOperator((alg.a - alg.a_dagger) / (2.0 * kI))};
}

PositionMomentum position_momentum(const FockAlgebra& alg) {
  const double s = std::sqrt(alg.hbar / 2.0);
  return PositionMomentum{HermitianOperator(s * (alg.a + alg.a_dagger)),
                          HermitianOperator(kI * s * (alg.a_dagger - alg.a))};
}

double top_level_weight(const StateVector& psi) {
  const Eigen::Index n = psi.dim();
  return std::norm(psi[n - 1]) + std::norm(psi[n - 2]);
}

void check_low_occupancy(const StateVector& psi) {
  const double w = top_level_weight(psi);
  if (!(w < kLowOccupancyWeight)) {
    throw ValidationError("state has weight " + std::to_string(w) +
                          " on the top two Fock levels; increase the truncation");
  }
}

StateVector fock_state(Eigen::Index dim, Eigen::Index n) {
  if (n < 0 || n >= dim) throw ValidationError("Fock level outside truncation");
  ComplexVector v = ComplexVector::Zero(dim);
  v[n] = 1.0;
  return normalize(v);
}

StateVector coherent_state(Eigen::Index dim, Complex alpha) {
  if (dim < 2) throw ValidationError("Fock truncation must be at least 2");
  ComplexVector v(dim);
  // c_n = alpha^n / sqrt(n!) by recurrence; the exp(-|alpha|^2/2) prefactor
  // is restored by normalisation
  v[0] = 1.0;
  for (Eigen::Index n = 1; n < dim; ++n) {
    v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
  StateVector psi = normalize(v);
  check_low_occupancy(psi);
  return psi;
}

StateVector squeezed_vacuum(Eigen::Index dim, double r) {
  if (dim < 2) throw ValidationError("Fock truncation must be at least 2");
  if (!std::isfinite(r)) throw ValidationError("squeezing parameter must be finite");
  ComplexVector v = ComplexVector::Zero(dim);
  // c_{2k} = (-tanh r)^k sqrt((2k)!) / (2^k k!) / sqrt(cosh r)
  const double t = -std::tanh(r);
  double c = 1.0 / std::sqrt(std::cosh(r));
  for (Eigen::Index k = 0; 2 * k < dim; ++k) {
    if (k > 0) {
      const auto kk = static_cast<double>(k);
      c *= t * std::sqrt((2.0 * kk - 1.0) * (2.0 * kk)) / (2.0 * kk);
    }
    v[2 * k] = c;
  }
  StateVector psi = normalize(v);
  check_low_occupancy(psi);
  return psi;
}

}  // namespace uncert
