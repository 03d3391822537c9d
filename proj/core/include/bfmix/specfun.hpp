#pragma once

// Bose and Fermi integrals of half-integer order and their inversion.
//
//   g_nu(z) = sum_{k>=1} z^k / k^nu          = Li_nu(z),   0 <= z <= 1
//   f_nu(z) = -sum_{k>=1} (-z)^k / k^nu      = -Li_nu(-z), z >= 0
//
// Both are evaluated to ~1e-12 relative accuracy:
//   * power series for z <= 1/2,
//   * Robinson's expansion in alpha = -ln z for Bose z in (1/2, 1],
//   * adaptive Gauss-Kronrod on the Fermi-Dirac integral for Fermi z > 1/2,
//     split at x = ln z, with the degenerate part integrated exactly once
//     ln z is large.
// All functions are pure and thread-safe.

#include <limits>

namespace bfmix::specfun {

/// Order of a Bose/Fermi integral. Only 1/2, 3/2 and 5/2 are supported.
class PolyOrder {
 public:
  /// Throws DomainError for any other order.
  explicit PolyOrder(double nu);

  static PolyOrder half() { return PolyOrder(0.5); }
  static PolyOrder three_halves() { return PolyOrder(1.5); }
  static PolyOrder five_halves() { return PolyOrder(2.5); }

  double value() const noexcept { return nu_; }
  int index() const noexcept { return index_; }  // 0, 1, 2 for 1/2, 3/2, 5/2

  friend bool operator==(const PolyOrder&, const PolyOrder&) = default;

 private:
  double nu_;
  int index_;
};

enum class Species { Bose, Fermi };

/// Fugacity of one species. For very degenerate Fermi gases `z` may overflow
/// to +inf; `log_z` always carries the exact value.
struct Fugacity {
  double z = 0.0;
  double log_z = -std::numeric_limits<double>::infinity();
  Species species = Species::Bose;
  bool condensed = false;  // Bose only: rho lambda^3 >= g_{3/2}(1)
};

/// g_nu(1/2 at z -> 1) diverges; bose_g returns this value (+inf) for nu = 1/2
/// and z >= 1 - 1e-13. Test with is_divergent().
inline constexpr double kDivergent = std::numeric_limits<double>::infinity();
inline bool is_divergent(double value) { return value == kDivergent; }

/// Bose integral g_nu(z). Throws DomainError unless 0 <= z <= 1.
double bose_g(PolyOrder nu, double z);

/// Bose integral as a function of alpha = -ln z >= 0.
double bose_g_alpha(PolyOrder nu, double alpha);

/// Fermi integral f_nu(z). Throws DomainError for z < 0.
double fermi_f(PolyOrder nu, double z);

/// Fermi integral as a function of eta = ln z (any real eta).
double fermi_f_log(PolyOrder nu, double eta);

/// Riemann zeta for real s != 1: Euler-Maclaurin for s > 1, functional
/// equation otherwise.
double riemann_zeta(double s);

/// Inverts g_{3/2}(z) = rho_lambda3. Returns z = 1 with `condensed` set when
/// rho_lambda3 >= g_{3/2}(1). Throws DomainError for negative input.
Fugacity bose_fugacity_from_density(double rho_lambda3);

/// Inverts f_{3/2}(z) = rho_lambda3 (unique since f_{3/2} is increasing and
/// unbounded). Throws DomainError for negative input.
Fugacity fermi_fugacity_from_density(double rho_lambda3);

}  // namespace bfmix::specfun
