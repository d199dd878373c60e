#include "uncert/commands.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "uncert/operators.hpp"
#include "uncert/random_states.hpp"

namespace uncert {

namespace {

const HermitianOperator& pick_component(const SpinTriple& s, char c) {
  switch (c) {
    case 'x': return s.jx;
    case 'y': return s.jy;
    case 'z': return s.jz;
    default: throw ValidationError(std::string("unknown spin component '") + c + "'");
  }
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) write_text_file(*path, text);
}

// Accepts a state with norm in [0.9, 1.1] (normalising it, with a warning);
// anything further from unit norm is rejected.
StateVector admit_state(const ComplexVector& v, const char* what, Json& warnings) {
  const double n = v.norm();
  if (!std::isfinite(n) || n < 0.9 || n > 1.1) {
    throw ValidationError(std::string(what) + " is not normalized (norm " + format_double(n) +
                          ")");
  }
  if (std::abs(n - 1.0) > 1e-12) {
    const std::string msg =
        std::string(what) + " had norm " + format_double(n) + "; normalized";
    std::cerr << "warning: " << msg << '\n';
    warnings.push_back(msg);
  }
  return normalize(v);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!std::isfinite(cfg.theta_min) || !std::isfinite(cfg.theta_max) ||
      !(cfg.theta_max > cfg.theta_min)) {
    throw ValidationError("invalid theta range: need finite theta_min < theta_max");
  }
  if (cfg.steps < 2) throw ValidationError("steps must be at least 2");
  if (cfg.perp_samples < 1) throw ValidationError("perp-samples must be at least 1");
  if (cfg.observables.size() != 2 || cfg.observables[0] == cfg.observables[1]) {
    throw ValidationError("observables must name two distinct components, e.g. zy");
  }
}

std::vector<SweepRecord> run_sweep(const RunConfig& cfg) {
  validate(cfg);
  const SpinTriple spin = spin_operators(cfg.j, cfg.hbar);
  const HermitianOperator& a = pick_component(spin, cfg.observables[0]);
  const HermitianOperator& b = pick_component(spin, cfg.observables[1]);
  const Eigen::Index dim = a.dim();
  if (dim < 2) throw ValidationError("sweep needs j >= 1/2");

  std::vector<SweepRecord> rows(static_cast<std::size_t>(cfg.steps));
  const double step = (cfg.theta_max - cfg.theta_min) / static_cast<double>(cfg.steps - 1);
  for (int k = 0; k < cfg.steps; ++k) {
    SweepRecord& row = rows[static_cast<std::size_t>(k)];
    row.theta = k + 1 == cfg.steps ? cfg.theta_max : cfg.theta_min + step * k;
    const StateVector psi = theta_family_state(dim, row.theta);

    const BoundReport weak = weak_sum_bound(psi, a, b);
    const BoundReport prod = product_bound(psi, a, b);
    row.lhs = weak.lhs;
    row.weak_rhs = weak.rhs;
    row.two_dadb = 2.0 * prod.lhs;

    RandomSource rng = RandomSource::for_stream(cfg.seed, static_cast<std::uint64_t>(k));
    row.mp_rhs.reserve(static_cast<std::size_t>(cfg.perp_samples));
    for (int s = 0; s < cfg.perp_samples; ++s) {
      row.mp_rhs.push_back(mp_sum_bound(psi, a, b, random_perp(psi, rng)).rhs);
    }

    const MusVerdict verdict = analyze_mus(psi, a, b, kMusTol);
    row.residual_AiB = verdict.residual_AiB;
    row.residual_A2B2 = verdict.residual_A2B2;
    row.is_sum_mus = verdict.is_sum_mus;
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRecord>& rows) {
  std::ostringstream os;
  const std::size_t k = rows.empty() ? 0 : rows.front().mp_rhs.size();
  os << "theta,lhs,weak_rhs,two_dadb,residual_AiB,residual_A2B2,is_sum_mus";
  for (std::size_t i = 1; i <= k; ++i) os << ",mp_rhs_" << i;
  os << '\n';
  for (const SweepRecord& r : rows) {
    os << format_double(r.theta) << ',' << format_double(r.lhs) << ','
       << format_double(r.weak_rhs) << ',' << format_double(r.two_dadb) << ','
       << format_double(r.residual_AiB) << ',' << format_double(r.residual_A2B2) << ','
       << (r.is_sum_mus ? 1 : 0);
    for (double v : r.mp_rhs) os << ',' << format_double(v);
    os << '\n';
  }
  return os.str();
}

Json sweep_json(const RunConfig& cfg, const std::vector<SweepRecord>& rows) {
  Json j;
  j["seed"] = cfg.seed;
  j["j"] = cfg.j;
  j["hbar"] = cfg.hbar;
  j["observables"] = cfg.observables;
  j["perp_samples"] = cfg.perp_samples;
  Json arr = Json::array();
  for (const SweepRecord& r : rows) {
    Json row;
    row["theta"] = r.theta;
    row["lhs"] = r.lhs;
    row["weak_rhs"] = r.weak_rhs;
    row["two_dadb"] = r.two_dadb;
    row["residual_AiB"] = r.residual_AiB;
    row["residual_A2B2"] = r.residual_A2B2;
    row["is_sum_mus"] = r.is_sum_mus;
    row["mp_rhs"] = r.mp_rhs;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string sweep_plot_script(const std::string& csv_path) {
  Json path = csv_path;  // JSON string quoting is valid Python string syntax
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
        "# Renders a theta sweep CSV: variance sum, weak bound, 2 dA dB,\n"
        "# sum-relation RHS for every random perp, and eigenstate markers.\n"
        "import csv\n"
        "import sys\n"
        "import matplotlib\n"
        "matplotlib.use('Agg')\n"
        "import matplotlib.pyplot as plt\n\n"
     << "path = sys.argv[1] if len(sys.argv) > 1 else " << path.dump() << "\n"
     << "with open(path) as fh:\n"
        "    rows = list(csv.DictReader(fh))\n"
        "theta = [float(r['theta']) for r in rows]\n"
        "lhs = [float(r['lhs']) for r in rows]\n"
        "weak = [float(r['weak_rhs']) for r in rows]\n"
        "two = [float(r['two_dadb']) for r in rows]\n"
        "mp_cols = [c for c in rows[0] if c.startswith('mp_rhs_')]\n\n"
        "fig, ax = plt.subplots(figsize=(7, 4.5))\n"
        "for c in mp_cols:\n"
        "    ax.plot(theta, [float(r[c]) for r in rows], 'k.', ms=1.5,\n"
        "            label='RHS (random perp)' if c == mp_cols[0] else None)\n"
        "ax.plot(theta, weak, 'r-', label='|i<[A,B]>|')\n"
        "ax.plot(theta, lhs, 'g-', label='dA^2 + dB^2')\n"
        "ax.plot(theta, two, 'b-', label='2 dA dB')\n"
        "mus = [i for i, r in enumerate(rows) if float(r['residual_AiB']) < 1e-6]\n"
        "ax.plot([theta[i] for i in mus], [lhs[i] for i in mus], 'co',\n"
        "        label='eigenstate of A -/+ iB')\n"
        "a2b2 = [i for i, r in enumerate(rows) if float(r['residual_A2B2']) < 1e-6]\n"
        "ax.plot([theta[i] for i in a2b2], [lhs[i] for i in a2b2], 'mx',\n"
        "        label='eigenstate of A^2 + B^2')\n"
        "ax.set_xlabel('theta')\n"
        "ax.legend(fontsize=8)\n"
        "fig.tight_layout()\n"
        "fig.savefig(path.rsplit('.', 1)[0] + '.png', dpi=150)\n";
  return os.str();
}

std::string cmd_sweep(const RunConfig& cfg) {
  const std::vector<SweepRecord> rows = run_sweep(cfg);
  const std::string text =
      cfg.format == OutputFormat::csv ? sweep_csv(rows) : sweep_json(cfg, rows).dump(2) + "\n";
  emit(cfg.out, text);
  if (cfg.plot) write_text_file(*cfg.plot, sweep_plot_script(cfg.out.value_or("sweep.csv")));
  return text;
}

Json evaluate_bounds(const Json& input, PerpMode perp, std::uint64_t seed, double tol) {
  for (const char* key : {"state", "A", "B"}) {
    if (!input.contains(key)) throw ValidationError(std::string("missing key \"") + key + "\"");
  }
  Json warnings = Json::array();
  const StateVector psi = admit_state(vector_from_json(input["state"]), "state", warnings);
  const HermitianOperator a(matrix_from_json(input["A"]));
  const HermitianOperator b(matrix_from_json(input["B"]));
  require_same_dim(psi.dim(), a.dim(), "bounds (state vs A)");
  require_same_dim(psi.dim(), b.dim(), "bounds (state vs B)");

  std::optional<StateVector> psi_perp;
  std::string perp_source;
  switch (perp) {
    case PerpMode::file: {
      if (!input.contains("psi_perp")) throw ValidationError("perp mode file needs \"psi_perp\"");
      psi_perp = admit_state(vector_from_json(input["psi_perp"]), "psi_perp", warnings);
      require_same_dim(psi.dim(), psi_perp->dim(), "bounds (state vs psi_perp)");
      perp_source = "file";
      break;
    }
    case PerpMode::saturating: {
      try {
        psi_perp = saturating_perp(psi, a, b);
        perp_source = "saturating";
      } catch (const AlreadySaturatedError&) {
        // every perp gives term_perp = 0 here; any orthogonal state will do
        RandomSource rng(seed);
        psi_perp = random_perp(psi, rng);
        perp_source = "random (state already saturates)";
        warnings.push_back("state already saturates the sum relation; used a random perp");
      }
      break;
    }
    case PerpMode::random: {
      RandomSource rng(seed);
      psi_perp = random_perp(psi, rng);
      perp_source = "random";
      break;
    }
  }

  Json out;
  out["dim"] = psi.dim();
  out["perp_source"] = perp_source;
  out["seed"] = seed;
  out["psi_perp"] = to_json(psi_perp->amplitudes());
  Json reports;
  reports["product"] = to_json(product_bound(psi, a, b));
  reports["mp_sum"] = to_json(mp_sum_bound(psi, a, b, *psi_perp));
  reports["weak_sum"] = to_json(weak_sum_bound(psi, a, b));
  out["reports"] = std::move(reports);
  out["mus"] = to_json(analyze_mus(psi, a, b, tol, &*psi_perp));
  out["warnings"] = std::move(warnings);
  return out;
}

std::string cmd_bounds(const BoundsConfig& cfg) {
  if (cfg.inputs.empty()) throw ValidationError("bounds needs at least one input file");
  Json merged = Json::object();
  for (const std::string& path : cfg.inputs) {
    Json j = read_json_file(path);
    if (!j.is_object()) throw ValidationError("top level of " + path + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) merged[it.key()] = it.value();
  }
  const Json result = evaluate_bounds(merged, cfg.perp, cfg.seed, cfg.tol);

  std::string text;
  if (cfg.format == OutputFormat::json) {
    text = result.dump(2) + "\n";
  } else {
    // rows rebuilt from the JSON reports to keep one source of truth
    text = bound_csv_header() + "\n";
    for (const char* rel : {"product", "mp_sum", "weak_sum"}) {
      const Json& r = result["reports"][rel];
      BoundReport br;
      br.relation = std::string(rel) == "product" ? Relation::product
                    : std::string(rel) == "mp_sum" ? Relation::mp_sum
                                                   : Relation::weak_sum;
      br.lhs = r["lhs"];
      br.rhs = r["rhs"];
      br.gap = r["gap"];
      br.sign_choice = r["sign_choice"];
      br.term_commutator = r["term_commutator"];
      br.term_perp = r["term_perp"];
      text += bound_csv_row(br) + "\n";
    }
  }
  emit(cfg.out, text);
  return text;
}

Json cv_check(const CvConfig& cfg) {
  const double hbar = cfg.hbar;
  const double m = cfg.m_value.value_or(hbar);
  const double mp = cfg.m_prime.value_or(hbar);

  const Grid1D grid_l = centered_grid(cfg.a_mean, hbar, cfg.halfwidth, cfg.grid_n);
  const Grid1D grid_r = centered_grid(0.0, hbar, cfg.halfwidth, cfg.grid_n);
  const GridWavefunction psi_l = gaussian_psi_L(grid_l, cfg.a_mean, cfg.b_mean);
  const GridWavefunction psi_r = gaussian_psi_R(grid_r);

  const double res_l = ode_residual_L(psi_l, cfg.a_mean, cfg.b_mean, m);
  const double res_r = eigen_residual_R(psi_r, mp);

  const RiccatiSolution sol_l = riccati_solution(RiccatiKind::L, cfg.a_mean, cfg.b_mean, hbar);
  const RiccatiSolution sol_r = riccati_solution(RiccatiKind::R, cfg.a_mean, cfg.b_mean, hbar);
  RealVector xs = RealVector::LinSpaced(100, -5.0, 5.0);

  auto riccati_json = [&](const RiccatiSolution& s) {
    Json j;
    j["c_linear"] = to_json(s.c_linear);
    j["c_const"] = to_json(s.c_const);
    j["m_value"] = s.m_value;
    const RealVector pts = s.kind == RiccatiKind::L ? (xs.array() + cfg.a_mean).matrix() : xs;
    j["residual"] = riccati_residual(s, cfg.a_mean, cfg.b_mean, hbar, pts);
    return j;
  };
  auto moments_json = [](const GridMoments& g) {
    Json j;
    j["mean_x"] = g.mean_x;
    j["mean_p"] = g.mean_p;
    j["var_x"] = g.var_x;
    j["var_p"] = g.var_p;
    j["var_sum"] = g.var_x + g.var_p;
    return j;
  };

  const FockAlgebra alg = ladder_operators(cfg.fock_dim, hbar);
  const PositionMomentum xp = position_momentum(alg);
  const StateVector vac = fock_state(cfg.fock_dim, 0);

  Json out;
  out["hbar"] = hbar;
  out["a_mean"] = cfg.a_mean;
  out["b_mean"] = cfg.b_mean;
  out["grid"] = {{"n_points", cfg.grid_n},
                 {"halfwidth", cfg.halfwidth},
                 {"spacing", grid_l.spacing()},
                 {"x_min_L", grid_l.x_min()},
                 {"x_max_L", grid_l.x_max()},
                 {"x_min_R", grid_r.x_min()},
                 {"x_max_R", grid_r.x_max()}};
  out["riccati"] = {{"L", riccati_json(sol_l)}, {"R", riccati_json(sol_r)}};
  out["m_value"] = m;
  out["m_prime"] = mp;
  out["ode_residual_L"] = res_l;
  out["eigen_residual_R"] = res_r;
  out["moments_L"] = moments_json(grid_moments(psi_l));
  out["moments_R"] = moments_json(grid_moments(psi_r));
  out["fock_vacuum"] = {{"fock_dim", cfg.fock_dim},
                        {"var_x", variance(vac, xp.x)},
                        {"var_p", variance(vac, xp.p)}};
  out["m_equals_m_prime_equals_hbar"] = res_l < kCvResidualTol && res_r < kCvResidualTol;
  return out;
}

std::string cmd_cv_check(const CvConfig& cfg) {
  std::string text;
  if (cfg.format == OutputFormat::json) {
    text = cv_check(cfg).dump(2) + "\n";
  } else {
    if (cfg.wavefunction == 'L') {
      const Grid1D g = centered_grid(cfg.a_mean, cfg.hbar, cfg.halfwidth, cfg.grid_n);
      text = wavefunction_csv(gaussian_psi_L(g, cfg.a_mean, cfg.b_mean));
    } else if (cfg.wavefunction == 'R') {
      const Grid1D g = centered_grid(0.0, cfg.hbar, cfg.halfwidth, cfg.grid_n);
      text = wavefunction_csv(gaussian_psi_R(g));
    } else {
      throw ValidationError("wavefunction must be L or R");
    }
  }
  emit(cfg.out, text);
  return text;
}

Json haar_audit(const HaarAuditConfig& cfg) {
  if (cfg.samples < 1000) throw ValidationError("haar-audit needs at least 1000 samples");
  if (cfg.dim < 2) throw ValidationError("haar-audit needs dim >= 2");
  const Eigen::Index d = cfg.dim;
  const auto n = static_cast<double>(cfg.samples);

  RandomSource ref_rng = RandomSource::for_stream(cfg.seed, 1);
  const ComplexMatrix v = haar_unitary(d, ref_rng).matrix();

  RandomSource rng(cfg.seed);
  Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(d, d), s2sq = s2;
  Eigen::MatrixXd s4 = Eigen::MatrixXd::Zero(d, d), s4sq = s4;
  double worst_defect = 0.0;
  for (long k = 0; k < cfg.samples; ++k) {
    const ComplexMatrix u = haar_unitary(d, rng).matrix();
    worst_defect = std::max(worst_defect, unitarity_defect(u));
    const Eigen::MatrixXd p = u.cwiseAbs2();
    s2 += p;
    s2sq += p.cwiseProduct(p);
    const Eigen::MatrixXd w = (v * u).cwiseAbs2();
    const Eigen::MatrixXd w2 = w.cwiseProduct(w);
    s4 += w2;
    s4sq += w2.cwiseProduct(w2);
  }

  const double dd = static_cast<double>(d);
  const double expect2 = 1.0 / dd;
  const double expect4 = 2.0 / (dd * (dd + 1.0));
  auto summarize = [&](const Eigen::MatrixXd& s, const Eigen::MatrixXd& ssq, double expect,
                       double& max_z) {
    Json means = Json::array(), ses = Json::array();
    max_z = 0.0;
    for (Eigen::Index r = 0; r < d; ++r) {
      Json mrow = Json::array(), srow = Json::array();
      for (Eigen::Index c = 0; c < d; ++c) {
        const double mean = s(r, c) / n;
        const double var = std::max(0.0, (ssq(r, c) / n - mean * mean) * n / (n - 1.0));
        const double se = std::sqrt(var / n);
        max_z = std::max(max_z, std::abs(mean - expect) / se);
        mrow.push_back(mean);
        srow.push_back(se);
      }
      means.push_back(std::move(mrow));
      ses.push_back(std::move(srow));
    }
    return std::make_pair(means, ses);
  };

  double z2 = 0.0, z4 = 0.0;
  auto [mean2, se2] = summarize(s2, s2sq, expect2, z2);
  auto [mean4, se4] = summarize(s4, s4sq, expect4, z4);

  Json out;
  out["dim"] = d;
  out["samples"] = cfg.samples;
  out["seed"] = cfg.seed;
  out["max_unitarity_defect"] = worst_defect;
  out["unitarity_pass"] = worst_defect < 1e-12;
  out["expected_mean_abs2"] = expect2;
  out["mean_abs2"] = std::move(mean2);
  out["se_abs2"] = std::move(se2);
  out["max_abs_z_abs2"] = z2;
  out["moments_pass"] = z2 <= 3.0;
  // E|(VU)_ij|^4 must equal the Haar value for a fixed unitary V
  out["left_invariance"] = {{"expected_mean_abs4", expect4},
                            {"mean_abs4", std::move(mean4)},
                            {"se_abs4", std::move(se4)},
                            {"max_abs_z", z4},
                            {"pass", z4 <= 3.0}};
  out["pass"] = worst_defect < 1e-12 && z2 <= 3.0 && z4 <= 3.0;
  return out;
}

std::string cmd_haar_audit(const HaarAuditConfig& cfg) {
  const std::string text = haar_audit(cfg).dump(2) + "\n";
  emit(cfg.out, text);
  return text;
}

}  // namespace uncert
