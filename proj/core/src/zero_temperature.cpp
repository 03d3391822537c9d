#include "bfmix/zero_temperature.hpp"

#include <cmath>
#include <limits>

#include "bfmix/constants.hpp"
#include "bfmix/errors.hpp"
#include "bfmix/numerics.hpp"

namespace bfmix::zero_t {

namespace c = constants;

namespace {

// Hartree factor on the condensate self-interaction.
double boson_interaction_factor(CompatMode mode) { return mode == CompatMode::Paper ? 1.0 : 0.5; }

// (m_b / (2 pi hbar))^{3/2}
double boson_density_scale(const MixtureConfig& cfg) {
  return std::pow(cfg.m_b / (2.0 * c::pi * c::hbar), 1.5);
}

// kappa: dimensionless interaction strength of E_b / (N_b hbar omega_b) in x = omega / omega_b.
double boson_kappa(const MixtureConfig& cfg) {
  return boson_interaction_factor(cfg.compat_mode) * cfg.g_bb * cfg.N_b * boson_density_scale(cfg) *
         std::sqrt(cfg.omega_b) / c::hbar;
}

double residual_x(double x, double kappa) { return 0.75 * (1.0 - 1.0 / (x * x)) + 1.5 * kappa * std::sqrt(x); }

void require_positive_frequency(double w, const char* what) {
  if (!(w > 0.0)) throw DomainError(std::string(what) + ": frequency must be positive");
}

}  // namespace

double boson_energy(double omega, const MixtureConfig& cfg) {
  require_positive_frequency(omega, "boson_energy");
  const double s = boson_interaction_factor(cfg.compat_mode);
  return 0.75 * cfg.N_b * c::hbar * (omega + cfg.omega_b * cfg.omega_b / omega) +
         s * cfg.g_bb * cfg.N_b * cfg.N_b * boson_density_scale(cfg) * std::pow(omega, 1.5);
}

double boson_energy_d1(double omega, const MixtureConfig& cfg) {
  require_positive_frequency(omega, "boson_energy_d1");
  const double s = boson_interaction_factor(cfg.compat_mode);
  return 0.75 * cfg.N_b * c::hbar * (1.0 - cfg.omega_b * cfg.omega_b / (omega * omega)) +
         1.5 * s * cfg.g_bb * cfg.N_b * cfg.N_b * boson_density_scale(cfg) * std::sqrt(omega);
}

double boson_energy_d2(double omega, const MixtureConfig& cfg) {
  require_positive_frequency(omega, "boson_energy_d2");
  const double s = boson_interaction_factor(cfg.compat_mode);
  return 1.5 * cfg.N_b * c::hbar * cfg.omega_b * cfg.omega_b / (omega * omega * omega) +
         0.75 * s * cfg.g_bb * cfg.N_b * cfg.N_b * boson_density_scale(cfg) / std::sqrt(omega);
}

double boson_residual(double omega, const MixtureConfig& cfg) {
  require_positive_frequency(omega, "boson_residual");
  return residual_x(omega / cfg.omega_b, boson_kappa(cfg));
}

namespace {

BosonVariationalResult solve_omega_c_only(const MixtureConfig& cfg) {
  const double kappa = boson_kappa(cfg);
  auto h = [kappa](double x) { return residual_x(x, kappa); };
  double x = 1.0;
  bool has_root = true;
  if (kappa > 0.0) {
    // h is increasing in x, h(1) > 0: the root lies below 1.
    double lo = 1e-3;
    int expansions = 0;
    while (h(lo) > 0.0 && expansions < 10) {
      lo /= 10.0;
      ++expansions;
    }
    x = numerics::bisect(h, lo, 1.0, cfg.rel_tol * 1e-3, "solve_omega_c");
  } else if (kappa < 0.0) {
    // h rises from h(1) = 1.5 kappa < 0 to its maximum at the inflection point
    // of E_b; a local minimum exists only if that maximum is positive.
    const double x_inflection = std::pow(-2.0 / kappa, 0.4);
    if (x_inflection > 1.0 && h(x_inflection) > 0.0) {
      x = numerics::bisect(h, 1.0, x_inflection, cfg.rel_tol * 1e-3, "solve_omega_c");
    } else {
      x = x_inflection;
      has_root = false;
    }
  }
  BosonVariationalResult out;
  out.omega_c = (x == 1.0) ? cfg.omega_b : x * cfg.omega_b;
  out.energy = boson_energy(out.omega_c, cfg);
  out.second_derivative = boson_energy_d2(out.omega_c, cfg);
  out.is_local_minimum = has_root && out.second_derivative > 0.0;
  return out;
}

}  // namespace

BosonVariationalResult solve_omega_c(const MixtureConfig& cfg) {
  BosonVariationalResult out = solve_omega_c_only(cfg);
  if (cfg.g_bb < 0.0) out.N_b_critical = critical_boson_number(cfg).N_b_critical;
  return out;
}

double critical_number_closed_form(double omega_c, const MixtureConfig& cfg) {
  if (cfg.g_bb == 0.0) return std::numeric_limits<double>::infinity();
  const double s = boson_interaction_factor(cfg.compat_mode);
  return (2.0 / s) * c::hbar * cfg.omega_b * cfg.omega_b * std::pow(omega_c, -2.5) *
         std::pow(2.0 * c::pi * c::hbar / cfg.m_b, 1.5) / std::abs(cfg.g_bb);
}

CriticalBosonNumber critical_boson_number(const MixtureConfig& cfg) {
  if (!(cfg.g_bb < 0.0)) {
    throw PreconditionError("critical_boson_number: requires attractive g_bb < 0 (a repulsive condensate does not collapse)");
  }
  MixtureConfig trial = cfg;
  auto stable = [&trial](double n) {
    trial.N_b = n;
    return solve_omega_c_only(trial).is_local_minimum;
  };
  // Integer-resolution bracket first.
  double lo = 0.0;
  double hi = 1.0;
  if (stable(1.0)) {
    lo = 1.0;
    hi = 2.0;
    while (stable(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e30) throw NumericFailure("critical_boson_number", lo, hi, "no collapse found");
    }
    while (hi - lo > 1.0) {
      const double mid = std::floor(0.5 * (lo + hi));
      (stable(mid) ? lo : hi) = mid;
    }
  }
  // Then refine on the real line.
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (stable(mid) ? lo : hi) = mid;
  }
  CriticalBosonNumber out;
  out.N_b_critical = lo;
  trial.N_b = lo;
  out.omega_c = solve_omega_c_only(trial).omega_c;
  out.closed_form = critical_number_closed_form(out.omega_c, cfg);
  return out;
}

// ---------------------------------------------------------------- fermions

double kinetic_prefactor(CompatMode mode) {
  // (1 / 2 pi) (6 pi^2)^{2/3} (3/5)^{3/2} from integrating the Gaussian exactly.
  const double derived = std::pow(6.0 * c::pi * c::pi, 2.0 / 3.0) * std::pow(0.6, 1.5) / (2.0 * c::pi);
  return mode == CompatMode::Paper ? 2.0 * derived : derived;
}

double overlap_prefactor(CompatMode mode) {
  return mode == CompatMode::Paper ? std::pow(c::pi, 1.5) : std::pow(c::pi, -1.5);
}

Overlap overlap_G(double Omega, double omega_c, const MixtureConfig& cfg) {
  require_positive_frequency(Omega, "overlap_G");
  require_positive_frequency(omega_c, "overlap_G");
  const double a = cfg.m_b * omega_c;
  const double denom = cfg.m_f * Omega + a;
  Overlap out;
  out.G = cfg.m_f * a * Omega / (c::hbar * denom);
  out.dG = cfg.m_f * a * a / (c::hbar * denom * denom);
  out.d2G = -2.0 * cfg.m_f * cfg.m_f * a * a / (c::hbar * denom * denom * denom);
  return out;
}

double fermion_P(double Omega, const MixtureConfig& cfg) {
  require_positive_frequency(Omega, "fermion_P");
  return kinetic_prefactor(cfg.compat_mode) * c::hbar * Omega * std::pow(cfg.N_f, 5.0 / 3.0) +
         0.75 * c::hbar * cfg.omega_f * cfg.omega_f * cfg.N_f / Omega;
}

namespace {

void check_fermion_args(double Omega, double r_f, double omega_c, const char* what) {
  require_positive_frequency(Omega, what);
  require_positive_frequency(omega_c, what);
  if (!(r_f >= 0.0)) throw DomainError(std::string(what) + ": r_f must be non-negative");
}

// Prefactor A of the overlap term A G^{3/2} exp(-G r^2).
double overlap_amplitude(const MixtureConfig& cfg) {
  return cfg.g_bf * cfg.N_b * cfg.N_f * overlap_prefactor(cfg.compat_mode);
}

}  // namespace

double fermion_energy(double Omega, double r_f, double omega_c, const MixtureConfig& cfg) {
  check_fermion_args(Omega, r_f, omega_c, "fermion_energy");
  const double G = overlap_G(Omega, omega_c, cfg).G;
  return fermion_P(Omega, cfg) + 0.5 * cfg.m_f * cfg.omega_f * cfg.omega_f * r_f * r_f * cfg.N_f +
         overlap_amplitude(cfg) * std::pow(G, 1.5) * std::exp(-G * r_f * r_f);
}

Gradient2 fermion_energy_gradient(double Omega, double r_f, double omega_c, const MixtureConfig& cfg) {
  check_fermion_args(Omega, r_f, omega_c, "fermion_energy_gradient");
  const auto ov = overlap_G(Omega, omega_c, cfg);
  const double G = ov.G;
  const double r2 = r_f * r_f;
  const double decay = std::exp(-G * r2);
  const double amp = overlap_amplitude(cfg);
  const double phi_G = decay * (1.5 * std::sqrt(G) - r2 * std::pow(G, 1.5));
  const double phi_r = -2.0 * r_f * std::pow(G, 2.5) * decay;
  Gradient2 out;
  out.d_Omega = kinetic_prefactor(cfg.compat_mode) * c::hbar * std::pow(cfg.N_f, 5.0 / 3.0) -
                0.75 * c::hbar * cfg.omega_f * cfg.omega_f * cfg.N_f / (Omega * Omega) + amp * phi_G * ov.dG;
  out.d_r = cfg.m_f * cfg.omega_f * cfg.omega_f * r_f * cfg.N_f + amp * phi_r;
  return out;
}

Hessian2 fermion_energy_hessian(double Omega, double r_f, double omega_c, const MixtureConfig& cfg) {
  check_fermion_args(Omega, r_f, omega_c, "fermion_energy_hessian");
  const auto ov = overlap_G(Omega, omega_c, cfg);
  const double G = ov.G;
  const double r2 = r_f * r_f;
  const double decay = std::exp(-G * r2);
  const double amp = overlap_amplitude(cfg);
  const double sqrtG = std::sqrt(G);
  const double phi_G = decay * (1.5 * sqrtG - r2 * G * sqrtG);
  const double phi_GG = decay * (0.75 / sqrtG - 3.0 * r2 * sqrtG + r2 * r2 * G * sqrtG);
  const double phi_rr = decay * G * G * sqrtG * (-2.0 + 4.0 * G * r2);
  const double phi_Gr = decay * (-5.0 * r_f * G * sqrtG + 2.0 * r2 * r_f * G * G * sqrtG);
  Hessian2 out;
  out.d_OO = 1.5 * c::hbar * cfg.omega_f * cfg.omega_f * cfg.N_f / (Omega * Omega * Omega) +
             amp * (phi_GG * ov.dG * ov.dG + phi_G * ov.d2G);
  out.d_rr = cfg.m_f * cfg.omega_f * cfg.omega_f * cfg.N_f + amp * phi_rr;
  out.d_Or = amp * phi_Gr * ov.dG;
  return out;
}

double decoupled_Omega_c(const MixtureConfig& cfg) {
  return cfg.omega_f * std::sqrt(0.75 / (kinetic_prefactor(cfg.compat_mode) * std::pow(cfg.N_f, 2.0 / 3.0)));
}

double solve_Omega_c(double omega_c, const MixtureConfig& cfg, double r_f) {
  require_positive_frequency(omega_c, "solve_Omega_c");
  const double scale = cfg.N_f * c::hbar;
  auto residual = [&](double Omega) { return fermion_energy_gradient(Omega, r_f, omega_c, cfg).d_Omega / scale; };

  // dE/dOmega -> -inf as Omega -> 0 and -> kinetic constant > 0 as Omega -> inf,
  // so a wide enough log grid always shows a - to + crossing.
  double lo = 1e-3 * cfg.omega_f;
  double hi = 1e3 * cfg.omega_f;
  constexpr int kSamples = 241;
  std::vector<numerics::Bracket> minima;
  for (int expansion = 0; expansion <= 10; ++expansion) {
    const auto xs = numerics::logspace(lo, hi, kSamples + 24 * expansion);
    minima.clear();
    double prev = residual(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const double cur = residual(xs[i]);
      if (prev < 0.0 && cur >= 0.0) minima.push_back({xs[i - 1], xs[i]});
      prev = cur;
    }
    if (!minima.empty()) break;
    lo /= 10.0;
    hi *= 10.0;
  }
  if (minima.empty()) throw NumericFailure("solve_Omega_c", lo, hi, "dE_f/dOmega has no - to + sign change");

  double best = 0.0;
  double best_energy = std::numeric_limits<double>::infinity();
  for (const auto& b : minima) {
    const double root = numerics::bisect(residual, b.lo, b.hi, cfg.rel_tol * 1e-3, "solve_Omega_c");
    const double e = fermion_energy(root, r_f, omega_c, cfg);
    if (e < best_energy) {
      best_energy = e;
      best = root;
    }
  }
  return best;
}

double separation_threshold(double Omega_c, double omega_c, const MixtureConfig& cfg) {
  const double G = overlap_G(Omega_c, omega_c, cfg).G;
  return cfg.m_f * cfg.omega_f * cfg.omega_f /
         (2.0 * cfg.N_b * overlap_prefactor(cfg.compat_mode) * std::pow(G, 2.5));
}

double separation_radius(double Omega_c, double omega_c, const MixtureConfig& cfg) {
  const double threshold = separation_threshold(Omega_c, omega_c, cfg);
  if (cfg.g_bf <= threshold) return 0.0;
  const double G = overlap_G(Omega_c, omega_c, cfg).G;
  return std::sqrt(std::log(cfg.g_bf / threshold) / G);
}

StabilityY stability_Y(double Omega_c, double omega_c, const MixtureConfig& cfg) {
  const auto ov = overlap_G(Omega_c, omega_c, cfg);
  const double coupling = cfg.g_bf * cfg.N_b * overlap_prefactor(cfg.compat_mode);
  const double sqrtG = std::sqrt(ov.G);
  StabilityY out;
  out.first_bracket = c::hbar * cfg.omega_f * cfg.omega_f / (Omega_c * Omega_c * Omega_c) +
                      coupling * (sqrtG * ov.d2G + ov.dG * ov.dG / (2.0 * sqrtG));
  out.second_bracket = cfg.m_f * cfg.omega_f * cfg.omega_f - 2.0 * coupling * ov.G * ov.G * sqrtG;
  out.Y = out.first_bracket * out.second_bracket;
  out.hessian_det = fermion_energy_hessian(Omega_c, 0.0, omega_c, cfg).det();
  return out;
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Coexisting:
      return "Coexisting";
    case Phase::ShellSeparated:
      return "ShellSeparated";
    case Phase::NoMinimum:
      break;
  }
  return "NoMinimum";
}

FermionVariationalResult classify_zero_T(const MixtureConfig& cfg) {
  const auto boson = solve_omega_c_only(cfg);
  if (!boson.is_local_minimum) {
    throw PreconditionError("classify_zero_T: condensate energy has no local minimum (g_bb beyond collapse)");
  }
  FermionVariationalResult out;
  out.omega_c = boson.omega_c;
  out.Omega_c = solve_Omega_c(out.omega_c, cfg);
  const auto y = stability_Y(out.Omega_c, out.omega_c, cfg);
  out.Y = y.Y;
  out.hessian_det = y.hessian_det;
  out.G = overlap_G(out.Omega_c, out.omega_c, cfg).G;
  out.P = fermion_P(out.Omega_c, cfg);
  out.threshold_g_bf = separation_threshold(out.Omega_c, out.omega_c, cfg);
  out.r_fc = separation_radius(out.Omega_c, out.omega_c, cfg);
  if (out.r_fc > 0.0) {
    out.phase = Phase::ShellSeparated;
  } else if (out.Y > 0.0 && out.hessian_det > 0.0) {
    out.phase = Phase::Coexisting;
  } else {
    out.phase = Phase::NoMinimum;
  }
  return out;
}

JointMinimum alternating_minimize(double omega_c, const MixtureConfig& cfg, int max_iterations) {
  JointMinimum out;
  out.Omega = solve_Omega_c(omega_c, cfg);
  out.r_f = separation_radius(out.Omega, omega_c, cfg);
  for (int iter = 1; iter <= max_iterations; ++iter) {
    const double Omega = solve_Omega_c(omega_c, cfg, out.r_f);
    const double r_f = separation_radius(Omega, omega_c, cfg);
    const bool done = std::abs(Omega - out.Omega) <= 1e-12 * Omega &&
                      std::abs(r_f - out.r_f) <= 1e-12 * std::max(r_f, 1e-300);
    out.Omega = Omega;
    out.r_f = r_f;
    out.iterations = iter;
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.energy = fermion_energy(out.Omega, out.r_f, omega_c, cfg);
  return out;
}

}  // namespace bfmix::zero_t
