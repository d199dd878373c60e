#include "uncert/mus.hpp"

#include <algorithm>
#include <cmath>

namespace uncert {

namespace {

ComplexVector centered_apply(const StateVector& psi, const HermitianOperator& m) {
  const ComplexVector& v = psi.amplitudes();
  return m.matrix() * v - expectation(psi, m) * v;
}

}  // namespace

bool is_product_mus(const StateVector& psi, const HermitianOperator& a,
                    const HermitianOperator& b, double tol) {
  return std::abs(product_bound(psi, a, b).gap) <= tol;
}

bool is_sum_mus(const StateVector& psi, const HermitianOperator& a,
                const HermitianOperator& b, double tol) {
  return weak_sum_bound(psi, a, b).gap <= tol;
}

double eigenstate_residual(const StateVector& psi, const ComplexMatrix& m, bool normal) {
  if (m.rows() != m.cols()) throw ValidationError("eigenstate_residual: matrix not square");
  require_same_dim(psi.dim(), m.rows(), "eigenstate_residual");
  if (normal) {
    const double defect = max_abs(m * m.adjoint() - m.adjoint() * m);
    if (defect > 1e-10 * std::max(1.0, max_abs(m) * max_abs(m))) {
      throw ValidationError("eigenstate_residual: matrix is not normal");
    }
  }
  const ComplexVector mpsi = m * psi.amplitudes();
  const Complex mean = psi.amplitudes().dot(mpsi);
  return (mpsi - mean * psi.amplitudes()).norm();
}

double variational_residual_lhs(const StateVector& psi, const HermitianOperator& a,
                                const HermitianOperator& b) {
  require_same_dim(psi.dim(), a.dim(), "variational_residual_lhs");
  require_same_dim(psi.dim(), b.dim(), "variational_residual_lhs");
  const ComplexVector cpsi = centered_apply(psi, a);
  const ComplexVector dpsi = centered_apply(psi, b);
  const double sum = cpsi.squaredNorm() + dpsi.squaredNorm();
  if (sum <= kNullNorm) throw ValidationError("degenerate common eigenstate");

  // (C^2 + D^2) psi, with C and D applied as matrices shifted by the means
  const ComplexVector c2 = a.matrix() * cpsi - expectation(psi, a) * cpsi;
  const ComplexVector d2 = b.matrix() * dpsi - expectation(psi, b) * dpsi;
  return ((c2 + d2) / sum - psi.amplitudes()).norm();
}

double variational_residual_rhs(const StateVector& psi, const HermitianOperator& a,
                                const HermitianOperator& b, const StateVector& psi_perp) {
  const BoundReport mp = mp_sum_bound(psi, a, b, psi_perp);
  if (mp.rhs <= kNullNorm) throw ValidationError("variational_residual_rhs: zero denominator");
  const ComplexVector& v = psi.amplitudes();
  const ComplexVector sq = a.matrix() * (a.matrix() * v) + b.matrix() * (b.matrix() * v);
  return (sq / mp.rhs - v).norm();
}

OptimalPerp optimal_perp(const StateVector& psi, const HermitianOperator& a,
                         const HermitianOperator& b, std::optional<int> sign_override) {
  require_same_dim(psi.dim(), a.dim(), "optimal_perp");
  require_same_dim(psi.dim(), b.dim(), "optimal_perp");
  int sign = sign_convention(commutator_mean(psi, a, b));
  if (sign_override) {
    if (*sign_override != 1 && *sign_override != -1) {
      throw ValidationError("sign override must be +1 or -1");
    }
    sign = *sign_override;
  }
  const ComplexVector& v = psi.amplitudes();
  const ComplexVector g = a.matrix() * v - static_cast<double>(sign) * kI * (b.matrix() * v);
  if (g.norm() <= kNullNorm) throw AlreadySaturatedError();
  StateVector out = normalize(g);
  const double overlap = std::abs(inner(psi, out));
  return OptimalPerp{std::move(out), sign, overlap};
}

MusVerdict analyze_mus(const StateVector& psi, const HermitianOperator& a,
                       const HermitianOperator& b, double tol, const StateVector* psi_perp) {
  MusVerdict v;
  v.tol = tol;
  v.is_product_mus = is_product_mus(psi, a, b, tol);
  v.is_sum_mus = is_sum_mus(psi, a, b, tol);

  const ComplexVector cpsi = centered_apply(psi, a);
  const ComplexVector dpsi = centered_apply(psi, b);
  const double da = cpsi.norm();
  const double db = dpsi.norm();

  const double minus = (cpsi - kI * dpsi).norm();  // s = +1
  const double plus = (cpsi + kI * dpsi).norm();   // s = -1
  v.residual_AiB = std::min(minus, plus);
  v.residual_AiB_branch = minus <= plus ? 1 : -1;

  if (db >= kNullNorm) {
    const double g = da / db;
    v.gamma = g;
    v.residual_AigB = std::min((cpsi - kI * g * dpsi).norm(), (cpsi + kI * g * dpsi).norm());
  } else {
    // gamma undefined; fall back to ||C psi|| which vanishes iff psi is an
    // eigenstate of A
    v.residual_AigB = da;
  }

  const ComplexMatrix a2b2 =
      a.matrix() * a.matrix() + b.matrix() * b.matrix();
  v.residual_A2B2 = eigenstate_residual(psi, a2b2, true);

  if (da * da + db * db > kNullNorm) v.residual_var_lhs = variational_residual_lhs(psi, a, b);
  if (psi_perp != nullptr) {
    if (mp_sum_bound(psi, a, b, *psi_perp).rhs > kNullNorm) {
      v.residual_var_rhs = variational_residual_rhs(psi, a, b, *psi_perp);
    }
  }
  return v;
}

}  // namespace uncert
