#pragma once

#include "uncert/hilbert.hpp"

namespace uncert {

/// Uniform 1-D grid with an odd number of points (>= 101), so it has a
/// centre sample.
class Grid1D {
 public:
  Grid1D(double x_min, double x_max, Eigen::Index n_points, double hbar);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  Eigen::Index size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double hbar() const noexcept { return hbar_; }
  double x(Eigen::Index i) const noexcept { return x_min_ + h_ * static_cast<double>(i); }
  RealVector points() const;

 private:
  double x_min_;
  double x_max_;
  Eigen::Index n_;
  double h_;
  double hbar_;
};

inline constexpr Eigen::Index kDefaultGridPoints = 4001;
inline constexpr double kDefaultHalfwidth = 12.0;  // in units of sqrt(hbar)

/// [center - w sqrt(hbar), center + w sqrt(hbar)] with n points.
Grid1D centered_grid(double center, double hbar, double halfwidth = kDefaultHalfwidth,
                     Eigen::Index n_points = kDefaultGridPoints);

struct GridWavefunction {
  Grid1D grid;
  ComplexVector values;
};

/// Trapezoidal integral of |psi|^2.
double grid_norm_sq(const GridWavefunction& psi);
/// Rescale to unit trapezoidal norm.
GridWavefunction normalized(GridWavefunction psi);

struct GridMoments {
  double mean_x;
  double mean_p;
  double var_x;
  double var_p;
};

/// <x>, <p>, dx^2, dp^2 with p = -i hbar d/dx (fourth-order central differences).
GridMoments grid_moments(const GridWavefunction& psi);

enum class RiccatiKind { L, R };

/// Linear solution u = c_linear x + c_const of the Riccati equation for the
/// logarithmic derivative of psi_L or psi_R, and the eigenvalue it forces.
struct RiccatiSolution {
  RiccatiKind kind;
  Complex c_linear;
  Complex c_const;
  double m_value;
};

RiccatiSolution riccati_solution(RiccatiKind kind, double a_mean, double b_mean, double hbar);

/// max |u' + u^2 - (2ib/hbar) u - (b^2 + (x-a)^2 - m)/hbar^2| over xs (kind L), or
/// max |u' + u^2 - (x^2 - m')/hbar^2| (kind R).
double riccati_residual(const RiccatiSolution& sol, double a_mean, double b_mean, double hbar,
                        const RealVector& xs);

/// exp[-x^2/(2 hbar) + (a + ib) x / hbar], unit norm, real positive at x = a.
GridWavefunction gaussian_psi_L(const Grid1D& grid, double a_mean, double b_mean);

/// exp[-x^2/(2 hbar)], unit norm. Grid must be symmetric about zero.
GridWavefunction gaussian_psi_R(const Grid1D& grid);

/// Relative residual of
///   hbar^2 psi'' - 2ib hbar psi' - (b^2 + (x-a)^2 - m) psi
/// on interior points, scaled by ||hbar^2 psi''||.
double ode_residual_L(const GridWavefunction& psi, double a_mean, double b_mean, double m_value);

/// Relative residual of (x^2 - m') psi - hbar^2 psi'' on interior points.
double eigen_residual_R(const GridWavefunction& psi, double m_prime);

/// d ln(psi)/dx on interior points, as log(psi[i+1]/psi[i-1]) / 2h.
ComplexVector log_derivative(const GridWavefunction& psi);

}  // namespace uncert
