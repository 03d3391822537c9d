#include "bfmix/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bfmix/errors.hpp"
#include "bfmix/numerics.hpp"

namespace bfmix::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kLn2 = std::numbers::ln2;

// Gamma(nu) for nu = 1/2, 3/2, 5/2.
constexpr std::array<double, 3> kGamma = {kSqrtPi, 0.5 * kSqrtPi, 0.75 * kSqrtPi};
// Gamma(1 - nu): Gamma(1/2), Gamma(-1/2), Gamma(-3/2).
constexpr std::array<double, 3> kGammaReflected = {kSqrtPi, -2.0 * kSqrtPi, 4.0 * kSqrtPi / 3.0};

constexpr int kRobinsonTerms = 40;
constexpr double kSeriesSwitch = 0.5;
// Beyond this eta the Fermi integral is split into an exact power plus two
// exponentially weighted corrections.
constexpr double kDegenerateEta = 60.0;
constexpr double kFermiTail = 50.0;

struct RobinsonTable {
  // coeff[i][k] = zeta(nu_i - k) (-1)^k / k!
  std::array<std::array<double, kRobinsonTerms>, 3> coeff{};
};

const RobinsonTable& robinson_table() {
  static const RobinsonTable table = [] {
    RobinsonTable t;
    const std::array<double, 3> orders = {0.5, 1.5, 2.5};
    for (std::size_t i = 0; i < orders.size(); ++i) {
      double factorial = 1.0;
      for (int k = 0; k < kRobinsonTerms; ++k) {
        if (k > 0) factorial *= k;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        t.coeff[i][static_cast<std::size_t>(k)] = sign * riemann_zeta(orders[i] - k) / factorial;
      }
    }
    return t;
  }();
  return table;
}

double bose_series(double nu, double z) {
  double sum = 0.0;
  double zk = 1.0;
  for (int k = 1; k <= 100000; ++k) {
    zk *= z;
    const double term = zk / std::pow(static_cast<double>(k), nu);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

double fermi_series(double nu, double z) {
  // Alternating; only used for z <= 1/2, where it converges geometrically.
  double sum = 0.0;
  double zk = 1.0;
  for (int k = 1; k <= 100000; ++k) {
    zk *= z;
    const double term = zk / std::pow(static_cast<double>(k), nu);
    sum += (k % 2 == 1) ? term : -term;
    if (term <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double robinson(const PolyOrder& nu, double alpha) {
  const auto& c = robinson_table().coeff[static_cast<std::size_t>(nu.index())];
  double sum = 0.0;
  double ak = 1.0;
  for (int k = 0; k < kRobinsonTerms; ++k) {
    const double term = c[static_cast<std::size_t>(k)] * ak;
    sum += term;
    if (k > 2 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    ak *= alpha;
  }
  const double singular = (alpha == 0.0) ? 0.0 : kGammaReflected[static_cast<std::size_t>(nu.index())] * std::pow(alpha, nu.value() - 1.0);
  return singular + sum;
}

// 1 / (e^x + 1) without overflow.
double fermi_weight(double x) {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

double fermi_integral(const PolyOrder& nu, double eta) {
  const double order = nu.value();
  const double gamma = kGamma[static_cast<std::size_t>(nu.index())];
  if (eta < kDegenerateEta) {
    // x = t^2 removes the x^{-1/2} endpoint singularity; split at the Fermi edge.
    auto integrand = [order, eta](double t) {
      const double t2 = t * t;
      return 2.0 * std::pow(t, 2.0 * order - 1.0) * fermi_weight(t2 - eta);
    };
    const double edge = std::sqrt(std::max(eta, 0.0));
    const double t_max = std::sqrt(std::max(eta, 0.0) + kFermiTail);
    double total = 0.0;
    if (edge > 0.0) total += numerics::integrate(integrand, 0.0, edge, 1e-300, 1e-14).value;
    total += numerics::integrate(integrand, edge, t_max, 1e-300, 1e-14).value;
    return total / gamma;
  }
  // f = [eta^nu / nu - int_0^eta (eta-y)^{nu-1} w(y) dy + int_0^inf (eta+y)^{nu-1} w(y) dy] / Gamma(nu)
  auto below = [order, eta](double y) { return std::pow(eta - y, order - 1.0) * fermi_weight(y); };
  auto above = [order, eta](double y) { return std::pow(eta + y, order - 1.0) * fermi_weight(y); };
  const double lead = std::pow(eta, order) / order;
  const double corr_below = numerics::integrate(below, 0.0, kFermiTail, 1e-300, 1e-15).value;
  const double corr_above = numerics::integrate(above, 0.0, kFermiTail, 1e-300, 1e-15).value;
  return (lead - corr_below + corr_above) / gamma;
}

}  // namespace

PolyOrder::PolyOrder(double nu) : nu_(nu), index_(-1) {
  if (nu == 0.5) {
    index_ = 0;
  } else if (nu == 1.5) {
    index_ = 1;
  } else if (nu == 2.5) {
    index_ = 2;
  } else {
    throw DomainError("PolyOrder: only orders 1/2, 3/2, 5/2 are supported");
  }
}

double riemann_zeta(double s) {
  if (s == 1.0) throw DomainError("riemann_zeta: pole at s = 1");
  if (s < 0.5) {
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * std::tgamma(1.0 - s) *
           riemann_zeta(1.0 - s);
  }
  // Euler-Maclaurin with N = 20 and ten Bernoulli corrections.
  constexpr int n = 20;
  constexpr std::array<double, 10> bernoulli = {1.0 / 6.0,     -1.0 / 30.0,     1.0 / 42.0,     -1.0 / 30.0,
                                                5.0 / 66.0,    -691.0 / 2730.0, 7.0 / 6.0,      -3617.0 / 510.0,
                                                43867.0 / 798.0, -174611.0 / 330.0};
  double sum = 0.0;
  for (int k = n - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const double nn = n;
  sum += std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
  double rising = s;        // s (s+1) ... (s + 2j - 2)
  double factorial = 2.0;   // (2j)!
  double power = std::pow(nn, -s - 1.0);
  for (int j = 1; j <= 10; ++j) {
    sum += bernoulli[static_cast<std::size_t>(j - 1)] / factorial * rising * power;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= nn * nn;
  }
  return sum;
}

double bose_g(PolyOrder nu, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("bose_g: fugacity must lie in [0, 1]");
  if (z == 0.0) return 0.0;
  if (nu.index() == 0 && z >= 1.0 - 1e-13) return kDivergent;
  if (z <= kSeriesSwitch) return bose_series(nu.value(), z);
  return robinson(nu, -std::log(z));
}

double bose_g_alpha(PolyOrder nu, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("bose_g_alpha: alpha = -ln z must be non-negative");
  if (std::isinf(alpha)) return 0.0;
  if (alpha >= kLn2) return bose_series(nu.value(), std::exp(-alpha));
  if (nu.index() == 0 && alpha <= 1e-13) return kDivergent;
  return robinson(nu, alpha);
}

double fermi_f(PolyOrder nu, double z) {
  if (!(z >= 0.0)) throw DomainError("fermi_f: fugacity must be non-negative");
  if (z == 0.0) return 0.0;
  if (z <= kSeriesSwitch) return fermi_series(nu.value(), z);
  return fermi_integral(nu, std::log(z));
}

double fermi_f_log(PolyOrder nu, double eta) {
  if (std::isnan(eta)) throw DomainError("fermi_f_log: eta is NaN");
  if (eta == -std::numeric_limits<double>::infinity()) return 0.0;
  if (eta <= -kLn2) return fermi_series(nu.value(), std::exp(eta));
  return fermi_integral(nu, eta);
}

Fugacity bose_fugacity_from_density(double rho_lambda3) {
  if (!(rho_lambda3 >= 0.0)) throw DomainError("bose_fugacity_from_density: density must be non-negative");
  Fugacity out;
  out.species = Species::Bose;
  if (rho_lambda3 == 0.0) return out;
  const auto g32 = PolyOrder::three_halves();
  if (rho_lambda3 >= bose_g(g32, 1.0)) {
    out.z = 1.0;
    out.log_z = 0.0;
    out.condensed = true;
    return out;
  }
  // z <= g_{3/2}(z) <= zeta(3/2) z brackets the root within a factor 2.62.
  double lo = rho_lambda3 / bose_g(g32, 1.0);
  double hi = std::min(rho_lambda3, 1.0);
  auto residual = [&](double z) { return bose_g(g32, z) - rho_lambda3; };
  double z = (residual(hi) <= 0.0) ? hi : numerics::bisect(residual, lo, hi, 1e-15, "bose_fugacity_from_density");
  out.z = z;
  out.log_z = std::log(z);
  return out;
}

Fugacity fermi_fugacity_from_density(double rho_lambda3) {
  if (!(rho_lambda3 >= 0.0)) throw DomainError("fermi_fugacity_from_density: density must be non-negative");
  Fugacity out;
  out.species = Species::Fermi;
  if (rho_lambda3 == 0.0) return out;
  const auto f32 = PolyOrder::three_halves();
  auto residual = [&](double eta) { return fermi_f_log(f32, eta) - rho_lambda3; };
  // Initial guess: Boltzmann limit for small densities, degenerate limit otherwise.
  const double guess =
      rho_lambda3 < 1.0 ? std::log(rho_lambda3) : std::pow(0.75 * kSqrtPi * rho_lambda3, 2.0 / 3.0);
  double step = 1.0;
  double lo = guess - step;
  double hi = guess + step;
  for (int i = 0; i < 200 && residual(lo) > 0.0; ++i) {
    step *= 2.0;
    lo = guess - step;
  }
  step = 1.0;
  for (int i = 0; i < 200 && residual(hi) < 0.0; ++i) {
    step *= 2.0;
    hi = guess + step;
  }
  double f_lo = residual(lo);
  for (int iter = 0; iter < 300; ++iter) {
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = residual(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  out.log_z = 0.5 * (lo + hi);
  out.z = std::exp(out.log_z);
  return out;
}

}  // namespace bfmix::specfun
