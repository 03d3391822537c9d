// Acceptance report: one PASS/FAIL line per criterion.
//
//   bfmix_acceptance [--expect-fail 5,8,9] [--only 3]
//
// Exit status is 0 when every criterion matches its expectation (PASS unless
// listed in --expect-fail). An expected failure that passes is reported as
// unexpected, so the list cannot go stale silently.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "bfmix/config.hpp"
#include "bfmix/constants.hpp"
#include "bfmix/finite_temperature.hpp"
#include "bfmix/numerics.hpp"
#include "bfmix/scan.hpp"
#include "bfmix/specfun.hpp"
#include "bfmix/thomas_fermi.hpp"
#include "bfmix/zero_temperature.hpp"
#include "oracles/calculus.hpp"
#include "oracles/energy.hpp"
#include "oracles/quadrature.hpp"
#include "support.hpp"

using namespace bfmix;
using testing_support::rel_diff;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ConfigInput preset_base(const char* tag) { return scan::figure_preset(tag).base; }

// ------------------------------------------------------------------ 1
Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  ConfigInput in = preset_base("fig1");
  in.interaction.g_bb = 0.0;
  const double w0 = zero_t::solve_omega_c(in.resolve()).omega_c;
  const double err0 = rel_diff(w0, *in.omega_b);
  bool decreasing = true;
  double prev = w0;
  for (double g : numerics::linspace(0.005, 0.1, 20)) {
    in.interaction.g_bb = g;
    const double w = zero_t::solve_omega_c(in.resolve()).omega_c;
    decreasing = decreasing && w < prev;
    prev = w;
  }
  const double dt = seconds_since(t0);
  return {err0 <= 1e-9 && decreasing && dt < 1.0,
          "omega_c(0)/omega_b - 1 = " + fmt(err0, 3) + ", strictly decreasing over 20 g_bb: " +
              (decreasing ? "yes" : "no") + ", " + fmt(dt, 3) + " s"};
}

// ------------------------------------------------------------------ 2
Outcome criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  ConfigInput in;
  in.unit_system = UnitSystem::SI;
  in.compat_mode = CompatMode::Paper;
  in.m_b = 7 * constants::atomic_mass_unit;
  in.m_f = 6 * constants::atomic_mass_unit;
  in.omega_b = 166.0;
  in.omega_f = 166.0;
  in.N_b = 1000.0;
  in.N_f = 100.0;
  in.interaction.a_bb = -1.45e-9;
  in.interaction.a_bf = 0.0;
  in.interaction.a_ff = 0.0;
  const auto res = zero_t::critical_boson_number(in.resolve());
  const double dt = seconds_since(t0);
  const double agree = rel_diff(res.N_b_critical, res.closed_form);
  const bool in_range = res.N_b_critical >= 1050 && res.N_b_critical <= 1750;
  return {in_range && agree <= 0.01 && dt < 5.0,
          "N_b^c = " + fmt(res.N_b_critical) + " (bisection), " + fmt(res.closed_form) +
              " (closed form), relative gap " + fmt(agree, 3) + ", " + fmt(dt, 3) + " s"};
}

// ------------------------------------------------------------------ 3
// Derivative error against the functional's own scale E / x^k, so that
// stationary points (exact zero gradient) are measured meaningfully.
double scaled_error(double analytic, double numeric, double natural_scale) {
  return std::abs(analytic - numeric) / std::max({std::abs(analytic), std::abs(numeric), std::abs(natural_scale)});
}

Outcome criterion_3() {
  double worst_eb = 0, worst_ef = 0, worst_grad = 0, worst_curv = 0;
  ConfigInput in = testing_support::lithium_input(CompatMode::Derived);
  for (double g : {-0.005, 0.0, 0.02, 0.1, 0.5}) {
    in.interaction.g_bb = g;
    const auto cfg = in.resolve();
    auto e = [&](double w) { return zero_t::boson_energy(w, cfg); };
    for (double x : {0.5, 0.75, 1.0, 1.5, 2.5}) {
      const double w = x * cfg.omega_b;
      const double E = zero_t::boson_energy(w, cfg);
      worst_eb = std::max(worst_eb, rel_diff(E, oracle::boson_energy(w, cfg)));
      worst_grad = std::max(worst_grad, scaled_error(zero_t::boson_energy_d1(w, cfg), oracle::derivative(e, w, 1e-3 * w), E / w));
      worst_curv = std::max(worst_curv,
                            scaled_error(zero_t::boson_energy_d2(w, cfg), oracle::second_derivative(e, w, 1e-3 * w), E / (w * w)));
    }
  }

  in = testing_support::lithium_input(CompatMode::Derived);
  in.interaction.g_bf = 0.1;
  const auto cfg = in.resolve();
  const double wc = zero_t::solve_omega_c(cfg).omega_c;
  const double W0 = zero_t::decoupled_Omega_c(cfg);
  const double len = std::sqrt(constants::hbar / (cfg.m_f * cfg.omega_f));
  for (double x : {0.3, 0.6, 1.2, 2.5, 5.0}) {
    const double W = x * W0;
    for (double rr : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      const double r = rr * len;
      const double E = zero_t::fermion_energy(W, r, wc, cfg);
      worst_ef = std::max(worst_ef, rel_diff(E, oracle::fermion_energy(W, r, wc, cfg)));
      const auto g = zero_t::fermion_energy_gradient(W, r, wc, cfg);
      const auto h = zero_t::fermion_energy_hessian(W, r, wc, cfg);
      auto eW = [&](double v) { return zero_t::fermion_energy(v, r, wc, cfg); };
      worst_grad = std::max(worst_grad, scaled_error(g.d_Omega, oracle::derivative(eW, W, 1e-3 * W), E / W));
      worst_curv = std::max(worst_curv, scaled_error(h.d_OO, oracle::second_derivative(eW, W, 1e-3 * W), E / (W * W)));
      if (r > 0.0) {
        auto er = [&](double v) { return zero_t::fermion_energy(W, v, wc, cfg); };
        auto eWr = [&](double a, double b) { return zero_t::fermion_energy(a, b, wc, cfg); };
        worst_grad = std::max(worst_grad, scaled_error(g.d_r, oracle::derivative(er, r, 1e-3 * len), E / len));
        worst_curv = std::max(worst_curv, scaled_error(h.d_rr, oracle::second_derivative(er, r, 1e-3 * len), E / (len * len)));
        worst_curv = std::max(worst_curv, scaled_error(h.d_Or, oracle::mixed_derivative(eWr, W, r, 1e-3 * W, 1e-3 * len),
                                                       E / (W * len)));
      } else {
        // E_f is even in r_f: the gradient and mixed entry vanish on the axis.
        worst_grad = std::max(worst_grad, std::abs(g.d_r) / (std::abs(E) / len));
        worst_curv = std::max(worst_curv, std::abs(h.d_Or) / (std::abs(E) / (W * len)));
      }
    }
    const auto ov = zero_t::overlap_G(W, wc, cfg);
    auto G = [&](double v) { return zero_t::overlap_G(v, wc, cfg).G; };
    worst_grad = std::max(worst_grad, scaled_error(ov.dG, oracle::derivative(G, W, 1e-3 * W), ov.G / W));
    worst_curv = std::max(worst_curv, scaled_error(ov.d2G, oracle::second_derivative(G, W, 1e-3 * W), ov.G / (W * W)));
  }
  const bool pass = worst_eb <= 1e-6 && worst_ef <= 1e-6 && worst_grad <= 1e-6 && worst_curv <= 1e-6;
  return {pass, "max relative error E_b " + fmt(worst_eb, 3) + ", E_f " + fmt(worst_ef, 3) +
                    " (25 points each); derivatives vs central differences: first " + fmt(worst_grad, 3) + ", second " +
                    fmt(worst_curv, 3)};
}

// ------------------------------------------------------------------ 4
// Bisection to adjacent doubles on a predicate that is false below the
// threshold and true above it.
double bisect_predicate(const std::function<bool(double)>& above, double lo, double hi) {
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return hi;
    (above(mid) ? hi : lo) = mid;
  }
}

Outcome criterion_4() {
  ConfigInput in = preset_base("fig3a");
  in.interaction.g_bf = 0.05;
  const auto base = in.resolve();
  const double wc = zero_t::solve_omega_c(base).omega_c;
  const double Wc = zero_t::solve_Omega_c(wc, base);
  auto with_g = [&](double g) {
    auto c = base;
    c.g_bf = g;
    return c;
  };
  const double threshold = zero_t::separation_threshold(Wc, wc, base);

  double lo = base.g_bf * 1e-3;
  double hi = base.g_bf;
  auto bracket_negative = [&](double g) { return zero_t::stability_Y(Wc, wc, with_g(g)).second_bracket < 0.0; };
  while (!bracket_negative(hi)) hi *= 10.0;
  const double by_bracket = bisect_predicate(bracket_negative, lo, hi);
  auto separated = [&](double g) { return zero_t::separation_radius(Wc, wc, with_g(g)) > 0.0; };
  const double by_radius = bisect_predicate(separated, lo, hi);

  const double d1 = rel_diff(by_bracket, threshold);
  const double d2 = rel_diff(by_radius, threshold);

  const double G = zero_t::overlap_G(Wc, wc, base).G;
  bool continuous = zero_t::separation_radius(Wc, wc, with_g(threshold)) == 0.0;
  for (double eps : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const double r = zero_t::separation_radius(Wc, wc, with_g(threshold * (1 + eps)));
    continuous = continuous && r * std::sqrt(G) <= 2.0 * std::sqrt(eps);
  }
  bool increasing = true;
  double prev = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double r = zero_t::separation_radius(Wc, wc, with_g(threshold * (1 + 0.1 * k)));
    increasing = increasing && r > prev;
    prev = r;
  }
  return {d1 <= 1e-12 && d2 <= 1e-12 && continuous && increasing,
          "at fixed (Omega_c, omega_c): bracket sign change vs threshold " + fmt(d1, 3) + ", r_fc onset vs threshold " +
              fmt(d2, 3) + ", continuous " + (continuous ? "yes" : "no") + ", increasing " + (increasing ? "yes" : "no")};
}

// ------------------------------------------------------------------ 5
struct Interval {
  bool found = false;
  double lo = 0, hi = 0;
  bool lo_at_edge = false, hi_at_edge = false;
};

Interval coexisting_interval(const char* tag, const std::vector<double>& gs) {
  ConfigInput in = preset_base(tag);
  // Contiguous Coexisting block around g_bf = 0.
  const std::size_t centre = static_cast<std::size_t>(std::min_element(gs.begin(), gs.end(), [](double a, double b) {
                                                        return std::abs(a) < std::abs(b);
                                                      }) - gs.begin());
  auto coexisting = [&](std::size_t i) {
    in.interaction.g_bf = gs[i];
    try {
      return zero_t::classify_zero_T(in.resolve()).phase == zero_t::Phase::Coexisting;
    } catch (const std::exception&) {
      return false;
    }
  };
  Interval out;
  if (!coexisting(centre)) return out;
  out.found = true;
  std::size_t a = centre, b = centre;
  while (a > 0 && coexisting(a - 1)) --a;
  while (b + 1 < gs.size() && coexisting(b + 1)) ++b;
  out.lo = gs[a];
  out.hi = gs[b];
  out.lo_at_edge = a == 0;
  out.hi_at_edge = b + 1 == gs.size();
  return out;
}

Outcome criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto gs = numerics::linspace(-1.0, 1.0, 401);
  const auto small = coexisting_interval("fig3a", gs);
  const auto large = coexisting_interval("fig3b", gs);
  const double dt = seconds_since(t0);
  const bool contains = small.found && (!large.found || (small.lo <= large.lo && small.hi >= large.hi));
  const bool strict = contains && (!large.found || small.lo < large.lo || small.hi > large.hi);
  auto show = [](const Interval& i) {
    if (!i.found) return std::string("empty");
    return "[" + fmt(i.lo) + (i.lo_at_edge ? "(scan edge)" : "") + ", " + fmt(i.hi) + (i.hi_at_edge ? "(scan edge)" : "") +
           "]";
  };
  Outcome o{strict && dt < 10.0, "Coexisting g_bf interval over [-1, 1] (401 points): N_b=1000 " + show(small) +
                                     ", N_b=10000 " + show(large) + ", " + fmt(dt, 3) + " s"};
  if (!strict) o.notes.push_back("both intervals fill the scanned range; the sequential solution never separates");
  return o;
}

// ------------------------------------------------------------------ 6
Outcome criterion_6() {
  ConfigInput in;
  in.unit_system = UnitSystem::Oscillator;
  in.m_b = in.m_f = 7.0;
  in.omega_b = in.omega_f = 166.0;
  in.N_b = 1e5;
  in.N_f = 1e4;
  in.interaction.g_bb = 0.05;
  in.interaction.g_ff = 0.0;

  double worst_norm = 0.0;
  double flat_variation = 0.0;
  bool core_ok = false, shell_ok = false, flat_regime = false;
  for (double ratio : {1.0, 0.5, 2.0}) {
    in.interaction.g_bf = 0.05 * ratio;
    const auto cfg = in.resolve();
    const auto p = tf::profiles(cfg);
    worst_norm = std::max(worst_norm, rel_diff(tf::radial_integral(p.radii, p.n_b), cfg.N_b));

    // Independent normalization of the closed-form fermion density at e_F.
    const double k = 2.0 * cfg.m_f / (constants::hbar * constants::hbar);
    auto density = [&](double r) {
      const double nb = std::max(0.0, (p.mu_b - 0.5 * cfg.m_b * cfg.omega_b * cfg.omega_b * r * r) / cfg.g_bb);
      const double excess = p.e_F - 0.5 * cfg.m_f * cfg.omega_f * cfg.omega_f * r * r - cfg.g_bf * nb;
      return excess > 0.0 ? 4.0 * M_PI * r * r * std::pow(k * excess, 1.5) / (6.0 * M_PI * M_PI) : 0.0;
    };
    const double R_F = std::sqrt(2.0 * p.e_F / (cfg.m_f * cfg.omega_f * cfg.omega_f));
    const double n_f = oracle::tanh_sinh(density, 0.0, p.R_b, 1e-12) +
                       (R_F > p.R_b ? oracle::tanh_sinh(density, p.R_b, R_F, 1e-12) : 0.0);
    worst_norm = std::max(worst_norm, rel_diff(n_f, cfg.N_f));

    const auto argmax = static_cast<std::size_t>(std::max_element(p.n_f.begin(), p.n_f.end()) - p.n_f.begin());
    if (ratio == 1.0) {
      flat_regime = p.regime == tf::Regime::Flat;
      double lo = p.n_f[0], hi = p.n_f[0];
      for (std::size_t i = 0; i < p.radii.size() && p.radii[i] <= p.R_b; ++i) {
        lo = std::min(lo, p.n_f[i]);
        hi = std::max(hi, p.n_f[i]);
      }
      flat_variation = (hi - lo) / hi;
    } else if (ratio < 1.0) {
      core_ok = p.regime == tf::Regime::Core && argmax == 0;
    } else {
      shell_ok = p.regime == tf::Regime::Shell && p.radii[argmax] >= p.R_b * (1 - 1e-6);
    }
  }
  return {flat_regime && flat_variation < 1e-8 && core_ok && shell_ok && worst_norm <= 1e-6,
          "Flat variation " + fmt(flat_variation, 3) + ", Core argmax at 0: " + (core_ok ? "yes" : "no") +
              ", Shell argmax at R_b: " + (shell_ok ? "yes" : "no") + ", worst normalization " + fmt(worst_norm, 3)};
}

// ------------------------------------------------------------------ 7
Outcome criterion_7() {
  using specfun::PolyOrder;
  const double g = specfun::bose_g(PolyOrder::three_halves(), 1.0);
  double worst = 0.0;
  int points = 0;
  const auto zs = numerics::linspace(0.02, 0.98, 24);
  const auto etas = numerics::linspace(-8.0, 80.0, 25);
  for (int i = 0; i < 3; ++i) {
    const PolyOrder nu(0.5 + i);
    std::vector<double> bose_z(zs.begin(), zs.end());
    bose_z.push_back(0.9999);
    for (double z : bose_z) {
      worst = std::max(worst, rel_diff(specfun::bose_g(nu, z), oracle::bose_integral(nu.value(), z)));
      ++points;
    }
    for (double eta : etas) {
      worst = std::max(worst, rel_diff(specfun::fermi_f_log(nu, eta), oracle::fermi_integral(nu.value(), eta)));
      ++points;
    }
  }
  double worst_trip = 0.0;
  for (double z : numerics::logspace(1e-8, 0.999999, 25)) {
    const auto f = specfun::bose_fugacity_from_density(specfun::bose_g(PolyOrder::three_halves(), z));
    worst_trip = std::max(worst_trip, rel_diff(f.z, z));
  }
  for (double eta : numerics::linspace(-30.0, 300.0, 25)) {
    const auto f = specfun::fermi_fugacity_from_density(specfun::fermi_f_log(PolyOrder::three_halves(), eta));
    worst_trip = std::max(worst_trip, std::abs(f.log_z - eta) / std::max(1.0, std::abs(eta)));
  }
  return {std::abs(g - 2.612) <= 1e-3 && points == 150 && worst <= 1e-10 && worst_trip <= 1e-10,
          "g_3/2(1) = " + fmt(g, 12) + ", max error vs quadrature oracle " + fmt(worst, 3) + " on " +
              std::to_string(points) + " points, round trips " + fmt(worst_trip, 3)};
}

// ------------------------------------------------------------------ 8, 9
struct WindowSummary {
  finite_t::TemperatureWindow window;
  std::optional<std::array<double, 2>> unstable;
  double Z_lo = 0, Z_hi = 0;
};

WindowSummary window_at(double g_bf, double r_over_a) {
  ConfigInput in = preset_base("fig4");
  in.interaction.g_bf = g_bf;
  const auto cfg = in.resolve();
  const double TF = finite_t::fermi_temperature(cfg);
  const double lo = 0.01 * TF;
  const double hi = TF;
  const double r = r_over_a * cfg.oscillator_length();
  WindowSummary s;
  s.window = finite_t::critical_window(cfg, lo, hi, r);
  s.unstable = s.window.unstable_interval(lo, hi);
  s.Z_lo = finite_t::stability_Z(cfg, lo, r);
  s.Z_hi = finite_t::stability_Z(cfg, hi, r);
  return s;
}

bool nested(const std::optional<std::array<double, 2>>& inner, const std::optional<std::array<double, 2>>& outer) {
  if (!inner) return true;
  if (!outer) return false;
  return (*inner)[0] >= (*outer)[0] && (*inner)[1] <= (*outer)[1];
}

Outcome criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  ConfigInput probe = preset_base("fig4");
  const double TF = finite_t::fermi_temperature(probe.resolve());
  const auto w3 = window_at(0.3, 0.0);
  const auto w02 = window_at(0.02, 0.0);
  const auto w01 = window_at(0.01, 0.0);
  const double dt = seconds_since(t0);

  const bool window_03 = w3.window.exists && !w3.window.multi_root;
  const bool nest = nested(w01.unstable, w02.unstable) && nested(w02.unstable, w3.unstable);
  bool extremes = true;
  for (const auto* w : {&w3, &w02, &w01}) extremes = extremes && w->Z_lo > 0.0 && w->Z_hi > 0.0;

  auto show = [&](const char* g, const WindowSummary& s) {
    std::string t = std::string("g_bf=") + g + ": ";
    if (!s.unstable) return t + "stable on [0.01, 1] T_F";
    return t + "Z<0 for T/T_F in [" + fmt((*s.unstable)[0] / TF, 4) + ", " + fmt((*s.unstable)[1] / TF, 4) + "]" +
           (s.window.exists ? "" : " (one-sided)");
  };
  Outcome o{window_03 && nest && extremes && dt < 30.0,
            show("0.3", w3) + "; " + show("0.02", w02) + "; " + show("0.01", w01) + "; nested " + (nest ? "yes" : "no") +
                ", Z>0 at both extremes " + (extremes ? "yes" : "no") + ", " + fmt(dt, 3) + " s"};
  if (!window_03) {
    o.notes.push_back("Z / (lambda_b^2 lambda_f^2) is non-decreasing in T for g_bb, g_ff >= 0, so Z changes sign at most "
                      "once (negative to positive); a window closed on both sides cannot occur");
  }
  return o;
}

Outcome criterion_9() {
  constexpr double r_over_a = 1.0;
  const auto centre = window_at(0.02, 0.0);
  const auto off = window_at(0.02, r_over_a);
  const bool both = centre.unstable.has_value() && off.unstable.has_value();
  const bool strict = both && (*off.unstable)[0] >= (*centre.unstable)[0] && (*off.unstable)[1] <= (*centre.unstable)[1] &&
                      ((*off.unstable)[0] > (*centre.unstable)[0] || (*off.unstable)[1] < (*centre.unstable)[1]);
  auto show = [](const WindowSummary& s) {
    return s.unstable ? "[" + fmt((*s.unstable)[0], 4) + ", " + fmt((*s.unstable)[1], 4) + "] K" : std::string("none");
  };
  Outcome o{strict, "g_bf=0.02 unstable window at r=0: " + show(centre) + ", at r=" + fmt(r_over_a) + " a: " + show(off)};
  if (!centre.unstable) o.notes.push_back("no unstable window at the trap centre, so there is nothing to contain");
  return o;
}

// ------------------------------------------------------------------ 10
Outcome criterion_10() {
  ConfigInput in = preset_base("fig4");
  in.m_f = *in.m_b;
  in.compat_mode = CompatMode::Paper;
  in.temperature.reset();
  in.T_over_TF = 0.01;
  const auto base = in.resolve();
  const double T = *base.temperature;
  const auto s = finite_t::thermal_state(base, T);

  // Coupling scale: l_bb = 10 L with L = lambda_f^2-normalized ideal Fermi term
  // at T -> 0, so the mean-field terms dominate the kinetic one.
  const double L = std::sqrt(M_PI) / 2.0 * std::cbrt(4.0 / (3.0 * std::sqrt(M_PI) * s.rho_f));
  const double k = base.m_b / (4.0 * M_PI * constants::hbar * constants::hbar);  // l_bb = k g_bb
  const double scale = 10.0 * L / k;

  std::mt19937_64 rng(20240611);
  auto ratio = [&rng] {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 0.25 * std::pow(16.0, u);
  };
  int agree = 0;
  Outcome o;
  for (int i = 0; i < 20; ++i) {
    auto cfg = base;
    cfg.g_bb = scale * ratio();
    cfg.g_ff = scale * ratio();
    cfg.g_bf = scale * ratio();
    const double Z = finite_t::stability_Z(cfg, T);
    const double label = finite_t::low_T_criterion(cfg);
    if ((Z > 0) == (label > 0)) {
      ++agree;
    } else {
      // Equal masses, condensed bosons: Z = 4 lambda^4 k^2 [g_bb (2 g_ff + L / k) - g_bf^2].
      const double bb = cfg.g_bb / scale, ff = cfg.g_ff / scale, bf = cfg.g_bf / scale;
      o.notes.push_back("sample " + std::to_string(i) + ": g/scale = (" + fmt(bb, 4) + ", " + fmt(ff, 4) + ", " + fmt(bf, 4) +
                        "), g_bb g_ff - g_bf^2 = " + fmt(bb * ff - bf * bf, 4) + " but g_bb (2 g_ff + 0.1) - g_bf^2 = " +
                        fmt(bb * (2 * ff + 0.1) - bf * bf, 4) +
                        ": the l_ff lambda_f^2 term carries 2 m / (2 pi hbar^2) against 1 / (4 pi hbar^2) for l_bb, "
                        "and the ideal Fermi term adds L");
    }
  }
  o.pass = agree >= 16;
  o.detail = "sign(Z) matches sign(g_bb g_ff - g_bf^2) on " + std::to_string(agree) + "/20 triples at T = 0.01 T_F";
  return o;
}

// ------------------------------------------------------------------ 11
Outcome criterion_11() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> differing;
  for (const auto& tag : scan::preset_tags()) {
    auto csv = [&](const char* workers) {
      std::ostringstream out, err;
      const int code = cli::run({"--workers", workers, tag}, out, err);
      return code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
    };
    const std::string a = csv("1");
    const std::string b = csv("1");
    const std::string c = csv("4");
    if (a != b || a != c || a.rfind("exit ", 0) == 0) differing.push_back(tag);
  }
  std::string list;
  for (const auto& d : differing) list += " " + d;
  return {differing.empty(), std::to_string(scan::preset_tags().size()) +
                                 " presets, serial x2 and 4 workers: " + (differing.empty() ? "byte-identical" : "differ:" + list) +
                                 ", " + fmt(seconds_since(t0), 3) + " s"};
}

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expect_fail = parse_list(argv[++i]);
    } else if (arg == "--only" && i + 1 < argc) {
      only = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: bfmix_acceptance [--expect-fail 5,8,9] [--only 1,2]\n";
      return 2;
    }
  }

  const std::vector<std::function<Outcome()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                          criterion_5, criterion_6, criterion_7, criterion_8,
                                                          criterion_9, criterion_10, criterion_11};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}};
    }
    const bool expected = o.pass != static_cast<bool>(expect_fail.count(id));
    if (!expected) ++unexpected;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail;
    if (!o.pass && expected) std::cout << " [expected]";
    if (o.pass && !expected) std::cout << " [unexpected pass]";
    std::cout << '\n';
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
  }
  return unexpected == 0 ? 0 : 1;
}
