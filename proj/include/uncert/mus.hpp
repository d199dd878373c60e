#pragma once

#include <optional>

#include "uncert/bounds.hpp"
#include "uncert/hilbert.hpp"

namespace uncert {

// Predicate tolerances: exactly representable inputs vs truncated-Fock inputs.
inline constexpr double kMusTol = 1e-9;
inline constexpr double kMusTolFock = 1e-6;

/// |dA dB - |<[A,B]>|/2| <= tol
bool is_product_mus(const StateVector& psi, const HermitianOperator& a,
                    const HermitianOperator& b, double tol = kMusTol);

/// weak-sum gap <= tol, i.e. ||(C -/+ iD)psi||^2 <= tol.
bool is_sum_mus(const StateVector& psi, const HermitianOperator& a,
                const HermitianOperator& b, double tol = kMusTol);

/// ||M psi - <psi|M|psi> psi||. Zero exactly when psi is an eigenvector of M.
/// With `normal` set, M is first checked to be a normal matrix.
double eigenstate_residual(const StateVector& psi, const ComplexMatrix& m, bool normal);

/// || (C^2 + D^2)/(dA^2 + dB^2) psi - psi ||; vanishes where the variance sum
/// is stationary. Throws when both variances vanish.
double variational_residual_lhs(const StateVector& psi, const HermitianOperator& a,
                                const HermitianOperator& b);

/// || (A^2 + B^2)/(|i<[A,B]>| + |<psi|A +/- iB|perp>|^2) psi - psi ||, with the
/// uncentered A and B.
double variational_residual_rhs(const StateVector& psi, const HermitianOperator& a,
                                const HermitianOperator& b, const StateVector& psi_perp);

struct OptimalPerp {
  StateVector state;
  int sign;              // the sign s used in (A - s iB)|psi>
  double overlap{0.0};   // |<psi|state>|, nonzero when <A> or <B> is nonzero
};

/// normalize((A - s iB)|psi>) with s from the sign convention unless
/// `sign_override` is given. Throws AlreadySaturatedError if annihilated.
OptimalPerp optimal_perp(const StateVector& psi, const HermitianOperator& a,
                         const HermitianOperator& b,
                         std::optional<int> sign_override = std::nullopt);

struct MusVerdict {
  bool is_product_mus{false};
  bool is_sum_mus{false};
  std::optional<double> gamma;  // dA/dB, absent when dB < 1e-13
  double residual_AiB{0.0};     // min over both branches of ||(C -/+ iD)psi||
  int residual_AiB_branch{1};   // s of the branch (C - s iD) that gave it
  double residual_AigB{0.0};    // min over branches of ||(C -/+ i gamma D)psi||
  double residual_A2B2{0.0};    // eigenstate residual of A^2 + B^2
  std::optional<double> residual_var_lhs;
  std::optional<double> residual_var_rhs;
  double tol{kMusTol};
};

MusVerdict analyze_mus(const StateVector& psi, const HermitianOperator& a,
                       const HermitianOperator& b, double tol = kMusTol,
                       const StateVector* psi_perp = nullptr);

}  // namespace uncert
