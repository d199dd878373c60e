#pragma once

#include <string_view>

#include "uncert/hilbert.hpp"

namespace uncert {

enum class Relation { product, mp_sum, weak_sum };

std::string_view to_string(Relation r);

/// One evaluation of an uncertainty relation, lhs >= rhs.
///
/// product:  lhs = dA dB,          rhs = |i<[A,B]>| / 2
/// weak_sum: lhs = dA^2 + dB^2,    rhs = |i<[A,B]>|
/// mp_sum:   lhs = dA^2 + dB^2,    rhs = |i<[A,B]>| + |<psi|A +/- iB|perp>|^2
///
/// sign_choice is +1 when i<[A,B]> >= 0 and -1 otherwise; the same sign is
/// used inside the perp term, so term_commutator is never negative.
struct BoundReport {
  Relation relation{Relation::product};
  double lhs{0.0};
  double rhs{0.0};
  double gap{0.0};
  int sign_choice{1};
  double term_commutator{0.0};
  double term_perp{0.0};
  // mp_sum only: perp is orthogonal to (A -/+ iB)|psi>, so term_perp is zero
  // and the relation collapses to the weak one.
  bool perp_orthogonal_to_f{false};
  // psi is a common eigenstate of A and B (both variances below 1e-12).
  bool degenerate{false};
};

struct CenteredPair {
  ComplexMatrix c;  // A - <A>
  ComplexMatrix d;  // B - <B>
};

inline constexpr double kPerpAdmissionTol = 1e-8;
inline constexpr double kDegenerateVariance = 1e-12;

/// +1 if c >= 0 else -1 (ties go to +1).
inline int sign_convention(double commutator) { return commutator >= 0.0 ? 1 : -1; }

CenteredPair centered_pair(const StateVector& psi, const HermitianOperator& a,
                           const HermitianOperator& b);

/// (C - sign*iD)|psi>; with sign = sign_convention(i<[A,B]>) its squared norm
/// is exactly the weak-sum gap.
ComplexVector saturation_vector(const StateVector& psi, const HermitianOperator& a,
                                const HermitianOperator& b, int sign);

BoundReport product_bound(const StateVector& psi, const HermitianOperator& a,
                          const HermitianOperator& b);

BoundReport weak_sum_bound(const StateVector& psi, const HermitianOperator& a,
                           const HermitianOperator& b);

/// Throws ValidationError if |<perp|psi>| exceeds kPerpAdmissionTol.
BoundReport mp_sum_bound(const StateVector& psi, const HermitianOperator& a,
                         const HermitianOperator& b, const StateVector& psi_perp);

/// The orthogonal state that turns the sum relation into an equality,
/// normalize((C -/+ iD)|psi>). Throws AlreadySaturatedError when that vector
/// vanishes.
StateVector saturating_perp(const StateVector& psi, const HermitianOperator& a,
                            const HermitianOperator& b);

}  // namespace uncert
