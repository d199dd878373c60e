#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uncert/serialize.hpp"

namespace uncert {

enum class OutputFormat { csv, json };

/// Settings for the theta sweep over the spin family.
struct RunConfig {
  std::uint64_t seed{42};
  double theta_min{0.0};
  double theta_max{6.283185307179586};
  int steps{200};
  int perp_samples{30};
  double j{1.0};
  double hbar{1.0};
  std::string observables{"zy"};  // A then B, from {x, y, z}
  OutputFormat format{OutputFormat::csv};
  std::optional<std::string> out;
  std::optional<std::string> plot;
};

/// One theta row of the sweep.
struct SweepRecord {
  double theta{0.0};
  double lhs{0.0};       // dA^2 + dB^2
  double weak_rhs{0.0};  // |i<[A,B]>|
  double two_dadb{0.0};  // 2 dA dB
  std::vector<double> mp_rhs;
  double residual_AiB{0.0};
  double residual_A2B2{0.0};
  bool is_sum_mus{false};
};

void validate(const RunConfig& cfg);

std::vector<SweepRecord> run_sweep(const RunConfig& cfg);

/// Columns: theta, lhs, weak_rhs, two_dadb, residual_AiB, residual_A2B2,
/// is_sum_mus, mp_rhs_1 ... mp_rhs_k.
std::string sweep_csv(const std::vector<SweepRecord>& rows);
Json sweep_json(const RunConfig& cfg, const std::vector<SweepRecord>& rows);

/// matplotlib script that renders the four curves, the perp dot cloud and the
/// eigenstate markers from the CSV at `csv_path`.
std::string sweep_plot_script(const std::string& csv_path);

/// Runs the sweep and returns the serialized output; writes --out / --plot
/// when set.
std::string cmd_sweep(const RunConfig& cfg);

enum class PerpMode { random, saturating, file };

struct BoundsConfig {
  std::vector<std::string> inputs;  // later files override keys of earlier ones
  PerpMode perp{PerpMode::saturating};
  std::uint64_t seed{42};
  double tol{kMusTol};
  OutputFormat format{OutputFormat::json};
  std::optional<std::string> out;
};

/// Evaluates all three bounds and the MUS verdict for the state and
/// operators in `input` (keys state, A, B, optional psi_perp).
Json evaluate_bounds(const Json& input, PerpMode perp, std::uint64_t seed, double tol);
std::string cmd_bounds(const BoundsConfig& cfg);

struct CvConfig {
  double hbar{1.0};
  double a_mean{1.0};
  double b_mean{0.5};
  Eigen::Index grid_n{kDefaultGridPoints};
  double halfwidth{kDefaultHalfwidth};
  std::optional<double> m_value;   // defaults to hbar
  std::optional<double> m_prime;   // defaults to hbar
  Eigen::Index fock_dim{40};
  OutputFormat format{OutputFormat::json};
  char wavefunction{'L'};
  std::optional<std::string> out;
};

inline constexpr double kCvResidualTol = 1e-3;

Json cv_check(const CvConfig& cfg);
std::string cmd_cv_check(const CvConfig& cfg);

struct HaarAuditConfig {
  Eigen::Index dim{3};
  long samples{100000};
  std::uint64_t seed{7};
  std::optional<std::string> out;
};

Json haar_audit(const HaarAuditConfig& cfg);
std::string cmd_haar_audit(const HaarAuditConfig& cfg);

}  // namespace uncert
