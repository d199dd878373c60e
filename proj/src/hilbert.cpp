#include "uncert/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uncert {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw ValidationError(std::string("dimension mismatch in ") + what + ": " +
                          std::to_string(a) + " vs " + std::to_string(b));
  }
}

namespace {

void require_state_dim(Eigen::Index n) {
  if (n < 2) throw ValidationError("state dimension must be at least 2");
}

void require_finite(const ComplexVector& v) {
  if (!v.allFinite()) throw ValidationError("non-finite amplitude");
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

StateVector StateVector::from_normalized(ComplexVector amplitudes, double tol) {
  require_state_dim(amplitudes.size());
  require_finite(amplitudes);
  const double n = amplitudes.norm();
  if (std::abs(n - 1.0) > tol) {
    throw ValidationError("state is not normalized (norm " + std::to_string(n) + ")");
  }
  return StateVector(std::move(amplitudes));
}

HermitianOperator::HermitianOperator(ComplexMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw ValidationError("operator matrix is not square");
  if (m_.rows() < 1) throw ValidationError("operator matrix is empty");
  if (!m_.allFinite()) throw ValidationError("operator has non-finite entries");
  if (!is_hermitian(m_)) {
    throw ValidationError("operator is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(max_abs(m_ - m_.adjoint())) + ")");
  }
}

StateVector normalize(const ComplexVector& v) {
  require_state_dim(v.size());
  require_finite(v);
  const double n = v.norm();
  if (n <= kNullNorm) throw NullVectorError();
  return StateVector(v / n);
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.size(), v.size(), "inner");
  return u.dot(v);  // Eigen conjugates the left operand
}

ComplexVector project_out(const StateVector& psi, const ComplexVector& v) {
  require_same_dim(psi.dim(), v.size(), "project_out");
  const ComplexVector& p = psi.amplitudes();
  ComplexVector out = v - p * p.dot(v);
  // one re-orthogonalisation pass keeps |<psi|out>| at the rounding floor
  out -= p * p.dot(out);
  return out;
}

double expectation(const StateVector& psi, const HermitianOperator& m) {
  require_same_dim(psi.dim(), m.dim(), "expectation");
  const Complex e = psi.amplitudes().dot(m.matrix() * psi.amplitudes());
  if (std::abs(e.imag()) > kRealPartTol * std::max(1.0, max_abs(m.matrix()))) {
    throw ValidationError("expectation value has a non-negligible imaginary part");
  }
  return e.real();
}

double variance(const StateVector& psi, const HermitianOperator& m) {
  require_same_dim(psi.dim(), m.dim(), "variance");
  const ComplexVector mpsi = m.matrix() * psi.amplitudes();
  const double mean = psi.amplitudes().dot(mpsi).real();
  // <M^2> = ||M psi||^2 for Hermitian M
  const double v = mpsi.squaredNorm() - mean * mean;
  return std::max(v, 0.0);
}

double commutator_mean(const StateVector& psi, const HermitianOperator& a,
                       const HermitianOperator& b) {
  require_same_dim(psi.dim(), a.dim(), "commutator_mean");
  require_same_dim(psi.dim(), b.dim(), "commutator_mean");
  // i<[A,B]> = i(<A psi|B psi> - conj<A psi|B psi>) = -2 Im<A psi|B psi>
  const ComplexVector apsi = a.matrix() * psi.amplitudes();
  const ComplexVector bpsi = b.matrix() * psi.amplitudes();
  return -2.0 * apsi.dot(bpsi).imag();
}

Eigensystem hermitian_eigensystem(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw ValidationError("Hermitian eigensolver did not converge");
  }
  Eigensystem out;
  out.values = solver.eigenvalues();
  out.basis = solver.eigenvectors();
  out.vectors.reserve(static_cast<std::size_t>(out.basis.cols()));
  if (m.dim() >= 2) {
    for (Eigen::Index k = 0; k < out.basis.cols(); ++k) {
      out.vectors.push_back(normalize(out.basis.col(k)));
    }
  }
  return out;
}

}  // namespace uncert
