#include "uncert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uncert {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::product: return "product";
    case Relation::mp_sum: return "mp_sum";
    case Relation::weak_sum: return "weak_sum";
  }
  return "unknown";
}

namespace {

struct Moments {
  double var_a;
  double var_b;
  double commutator;  // i<[A,B]>
  bool degenerate;
};

Moments moments(const StateVector& psi, const HermitianOperator& a,
                const HermitianOperator& b) {
  Moments m{variance(psi, a), variance(psi, b), commutator_mean(psi, a, b), false};
  if (m.var_a < kDegenerateVariance && m.var_b < kDegenerateVariance) {
    m = Moments{0.0, 0.0, 0.0, true};
  }
  return m;
}

BoundReport finish(BoundReport r) {
  r.gap = r.lhs - r.rhs;
  return r;
}

}  // namespace

CenteredPair centered_pair(const StateVector& psi, const HermitianOperator& a,
                           const HermitianOperator& b) {
  const auto n = a.dim();
  require_same_dim(n, b.dim(), "centered_pair");
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return CenteredPair{a.matrix() - expectation(psi, a) * id,
                      b.matrix() - expectation(psi, b) * id};
}

ComplexVector saturation_vector(const StateVector& psi, const HermitianOperator& a,
                                const HermitianOperator& b, int sign) {
  require_same_dim(psi.dim(), a.dim(), "saturation_vector");
  require_same_dim(psi.dim(), b.dim(), "saturation_vector");
  const ComplexVector& v = psi.amplitudes();
  const ComplexVector cpsi = a.matrix() * v - expectation(psi, a) * v;
  const ComplexVector dpsi = b.matrix() * v - expectation(psi, b) * v;
  return cpsi - static_cast<double>(sign) * kI * dpsi;
}

BoundReport product_bound(const StateVector& psi, const HermitianOperator& a,
                          const HermitianOperator& b) {
  const Moments m = moments(psi, a, b);
  BoundReport r;
  r.relation = Relation::product;
  r.degenerate = m.degenerate;
  r.sign_choice = sign_convention(m.commutator);
  r.term_commutator = std::abs(m.commutator);
  r.lhs = std::sqrt(m.var_a * m.var_b);
  r.rhs = 0.5 * r.term_commutator;
  return finish(r);
}

BoundReport weak_sum_bound(const StateVector& psi, const HermitianOperator& a,
                           const HermitianOperator& b) {
  const Moments m = moments(psi, a, b);
  BoundReport r;
  r.relation = Relation::weak_sum;
  r.degenerate = m.degenerate;
  r.sign_choice = sign_convention(m.commutator);
  r.term_commutator = std::abs(m.commutator);
  r.lhs = m.var_a + m.var_b;
  r.rhs = r.term_commutator;
  return finish(r);
}

BoundReport mp_sum_bound(const StateVector& psi, const HermitianOperator& a,
                         const HermitianOperator& b, const StateVector& psi_perp) {
  require_same_dim(psi.dim(), psi_perp.dim(), "mp_sum_bound");
  const double overlap = std::abs(inner(psi_perp, psi));
  if (overlap > kPerpAdmissionTol) {
    throw ValidationError("psi_perp is not orthogonal to psi (|<perp|psi>| = " +
                          std::to_string(overlap) + ")");
  }
  const Moments m = moments(psi, a, b);
  BoundReport r;
  r.relation = Relation::mp_sum;
  r.degenerate = m.degenerate;
  r.sign_choice = sign_convention(m.commutator);
  r.term_commutator = std::abs(m.commutator);

  // <psi|(A +/- iB)|perp>, uncentered as written in the relation
  const ComplexVector op_perp =
      a.matrix() * psi_perp.amplitudes() +
      static_cast<double>(r.sign_choice) * kI * (b.matrix() * psi_perp.amplitudes());
  const Complex amp = psi.amplitudes().dot(op_perp);
  r.term_perp = m.degenerate ? 0.0 : std::norm(amp);

  const double scale = std::max(1.0, (a.matrix() * psi.amplitudes()).norm() +
                                         (b.matrix() * psi.amplitudes()).norm());
  r.perp_orthogonal_to_f = std::abs(amp) <= 1e-10 * scale;

  r.lhs = m.var_a + m.var_b;
  r.rhs = r.term_commutator + r.term_perp;
  return finish(r);
}

StateVector saturating_perp(const StateVector& psi, const HermitianOperator& a,
                            const HermitianOperator& b) {
  const int sign = sign_convention(commutator_mean(psi, a, b));
  const ComplexVector f = saturation_vector(psi, a, b, sign);
  if (f.norm() <= kNullNorm) throw AlreadySaturatedError();
  // f is orthogonal to psi analytically; the projection removes rounding
  const ComplexVector g = project_out(psi, f);
  if (g.norm() <= kNullNorm) throw AlreadySaturatedError();
  return normalize(g);
}

}  // namespace uncert
