#pragma once

// Small deterministic numerical kernels shared by the analysis modules:
// bracketed bisection, bracket search, adaptive Gauss-Kronrod quadrature and
// sampled-grid integration. Every routine runs a fixed schedule for fixed
// inputs, so results are bit-reproducible across runs and threads.

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bfmix/errors.hpp"

namespace bfmix::numerics {

using ScalarFn = std::function<double(double)>;

struct Bracket {
  double lo;
  double hi;
};

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one is
/// zero). Stops once hi - lo <= rel_tol * max(|lo|, |hi|). Wide positive
/// brackets are split geometrically until they are within a factor of 4.
/// Throws NumericFailure naming `solver` if the endpoints do not bracket a root.
double bisect(const ScalarFn& f, double lo, double hi, double rel_tol, const std::string& solver);

/// Same as bisect() but with the endpoint values already known.
double bisect(const ScalarFn& f, double lo, double f_lo, double hi, double f_hi, double rel_tol,
              const std::string& solver);

/// Searches for a sign change of f on a positive axis. Starts from
/// [lo, hi] and widens the bracket by one decade on each side per step, up to
/// `max_expansions` steps. Throws NumericFailure with the final bracket if no
/// sign change appears.
Bracket expand_bracket(const ScalarFn& f, double lo, double hi, int max_expansions,
                       const std::string& solver);

/// Sign changes of f sampled on `points` log-spaced abscissae in [lo, hi].
/// Returned brackets are adjacent sample pairs, in ascending order.
std::vector<Bracket> sign_changes_log(const ScalarFn& f, double lo, double hi, int points);

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on a finite interval.
/// Subdivides the interval with the largest error estimate until the total
/// estimate is below max(abs_tol, rel_tol * |value|) or `max_intervals` is hit.
QuadratureResult integrate(const ScalarFn& f, double a, double b, double abs_tol, double rel_tol,
                           int max_intervals = 2000);

/// Integral of samples on a uniform ascending grid: composite Simpson, with a
/// 3/8-rule panel when the interval count is odd.
double integrate_uniform(std::span<const double> x, std::span<const double> y);

/// n uniformly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

/// n log-spaced points from lo to hi inclusive (lo, hi > 0).
std::vector<double> logspace(double lo, double hi, int n);

}  // namespace bfmix::numerics
