// Command-line front end: sweep, bounds, cv-check, haar-audit.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "uncert/commands.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

const std::map<std::string, uncert::OutputFormat> kFormats{
    {"csv", uncert::OutputFormat::csv}, {"json", uncert::OutputFormat::json}};

const std::map<std::string, uncert::PerpMode> kPerpModes{
    {"random", uncert::PerpMode::random},
    {"saturating", uncert::PerpMode::saturating},
    {"file", uncert::PerpMode::file}};

// Writes to stdout only when no --out was given.
void print_unless_written(const std::optional<std::string>& out, const std::string& text) {
  if (!out) std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertainty-relation laboratory: product and sum bounds, minimum "
               "uncertainty states, theta sweeps, Gaussian checks"};
  app.require_subcommand(1);

  uncert::RunConfig sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "theta sweep over the spin family");
  sweep_cmd->add_option("--seed", sweep.seed, "RNG seed")->capture_default_str();
  sweep_cmd->add_option("--theta-min", sweep.theta_min, "first theta (rad)")->capture_default_str();
  sweep_cmd->add_option("--theta-max", sweep.theta_max, "last theta (rad)")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "number of theta rows")->capture_default_str();
  sweep_cmd->add_option("--perp-samples", sweep.perp_samples, "random perps per row")
      ->capture_default_str();
  sweep_cmd->add_option("--j", sweep.j, "spin quantum number")->capture_default_str();
  sweep_cmd->add_option("--hbar", sweep.hbar, "hbar")->capture_default_str();
  sweep_cmd->add_option("--observables", sweep.observables, "spin components A,B, e.g. zy")
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats));
  sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
  sweep_cmd->add_option("--plot", sweep.plot, "also write a plotting script here");

  uncert::BoundsConfig bounds;
  std::string bounds_perp = "saturating";
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate all bounds for a state file");
  bounds_cmd->add_option("inputs", bounds.inputs, "state/operator JSON file(s)")->required();
  bounds_cmd->add_option("--perp", bounds_perp, "random, saturating or file")
      ->check(CLI::IsMember({"random", "saturating", "file"}))
      ->capture_default_str();
  bounds_cmd->add_option("--seed", bounds.seed, "RNG seed for random perps")->capture_default_str();
  bounds_cmd->add_option("--tol", bounds.tol, "MUS predicate tolerance")->capture_default_str();
  bounds_cmd->add_option("--format", bounds.format, "json or csv")
      ->transform(CLI::CheckedTransformer(kFormats));
  bounds_cmd->add_option("--out", bounds.out, "output file (default stdout)");

  uncert::CvConfig cv;
  std::string cv_wave = "L";
  auto* cv_cmd = app.add_subcommand("cv-check", "position-momentum Gaussian checks on a grid");
  cv_cmd->add_option("--hbar", cv.hbar, "hbar")->capture_default_str();
  cv_cmd->add_option("--a-mean", cv.a_mean, "<x> of psi_L")->capture_default_str();
  cv_cmd->add_option("--b-mean", cv.b_mean, "<p> of psi_L")->capture_default_str();
  cv_cmd->add_option("--grid-n", cv.grid_n, "grid points (odd, >= 101)")->capture_default_str();
  cv_cmd->add_option("--grid-halfwidth", cv.halfwidth, "half-width in units of sqrt(hbar)")
      ->capture_default_str();
  cv_cmd->add_option("--m", cv.m_value, "eigenvalue m used in the psi_L equation (default hbar)");
  cv_cmd->add_option("--m-prime", cv.m_prime, "eigenvalue m' used for psi_R (default hbar)");
  cv_cmd->add_option("--fock-dim", cv.fock_dim, "Fock truncation for the vacuum cross-check")
      ->capture_default_str();
  cv_cmd->add_option("--format", cv.format, "json, or csv to dump a wavefunction")
      ->transform(CLI::CheckedTransformer(kFormats));
  cv_cmd->add_option("--wavefunction", cv_wave, "L or R (csv format)")
      ->check(CLI::IsMember({"L", "R"}));
  cv_cmd->add_option("--out", cv.out, "output file (default stdout)");

  uncert::HaarAuditConfig haar;
  auto* haar_cmd = app.add_subcommand("haar-audit", "statistical audit of the Haar sampler");
  haar_cmd->add_option("--dim", haar.dim, "matrix dimension")->capture_default_str();
  haar_cmd->add_option("--samples", haar.samples, "number of samples")->capture_default_str();
  haar_cmd->add_option("--seed", haar.seed, "RNG seed")->capture_default_str();
  haar_cmd->add_option("--out", haar.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*sweep_cmd) {
      print_unless_written(sweep.out, uncert::cmd_sweep(sweep));
    } else if (*bounds_cmd) {
      bounds.perp = kPerpModes.at(bounds_perp);
      print_unless_written(bounds.out, uncert::cmd_bounds(bounds));
    } else if (*cv_cmd) {
      cv.wavefunction = cv_wave.front();
      print_unless_written(cv.out, uncert::cmd_cv_check(cv));
    } else if (*haar_cmd) {
      print_unless_written(haar.out, uncert::cmd_haar_audit(haar));
    }
  } catch (const uncert::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const uncert::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
