#include "bfmix/numerics.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <queue>

namespace bfmix {

namespace {

std::string format_bracket(const std::string& solver, double lo, double hi, const std::string& what) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), " [bracket %.6g, %.6g]", lo, hi);
  return solver + ": " + what + buf;
}

}  // namespace

NumericFailure::NumericFailure(std::string solver, double lo, double hi, const std::string& what)
    : std::runtime_error(format_bracket(solver, lo, hi, what)), solver_(std::move(solver)), lo_(lo), hi_(hi) {}

namespace numerics {

double bisect(const ScalarFn& f, double lo, double hi, double rel_tol, const std::string& solver) {
  return bisect(f, lo, f(lo), hi, f(hi), rel_tol, solver);
}

double bisect(const ScalarFn& f, double lo, double f_lo, double hi, double f_hi, double rel_tol,
              const std::string& solver) {
  if (lo > hi) {
    std::swap(lo, hi);
    std::swap(f_lo, f_hi);
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::isnan(f_lo) || std::isnan(f_hi) || std::signbit(f_lo) == std::signbit(f_hi)) {
    throw NumericFailure(solver, lo, hi, "endpoints do not bracket a root");
  }
  for (int iter = 0; iter < 400; ++iter) {
    const double scale = std::max(std::abs(lo), std::abs(hi));
    if (hi - lo <= rel_tol * scale) break;
    const double mid = (lo > 0.0 && hi > 4.0 * lo) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::isnan(f_mid)) throw NumericFailure(solver, lo, hi, "function returned NaN inside bracket");
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Bracket expand_bracket(const ScalarFn& f, double lo, double hi, int max_expansions, const std::string& solver) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  for (int step = 0;; ++step) {
    if (!std::isnan(f_lo) && !std::isnan(f_hi) && std::signbit(f_lo) != std::signbit(f_hi)) return {lo, hi};
    if (f_lo == 0.0 || f_hi == 0.0) return {lo, hi};
    if (step == max_expansions) break;
    lo /= 10.0;
    hi *= 10.0;
    f_lo = f(lo);
    f_hi = f(hi);
  }
  throw NumericFailure(solver, lo, hi, "no sign change after bracket expansion");
}

std::vector<Bracket> sign_changes_log(const ScalarFn& f, double lo, double hi, int points) {
  const auto xs = logspace(lo, hi, points);
  std::vector<Bracket> out;
  double prev = f(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = f(xs[i]);
    if ((prev < 0.0 && cur >= 0.0) || (prev >= 0.0 && cur < 0.0)) out.push_back({xs[i - 1], xs[i]});
    prev = cur;
  }
  return out;
}

namespace {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const ScalarFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = f(center);
  double kronrod = f_center * kWgk[7];
  double gauss = f_center * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const ScalarFn& f, double a, double b, double abs_tol, double rel_tol,
                           int max_intervals) {
  if (a == b) return {};
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int count = 1;
  while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) && count < max_intervals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Re-sum from the leaves: the running total accumulates cancellation error.
  double value = 0.0;
  double err = 0.0;
  std::vector<Segment> leaves;
  leaves.reserve(heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const auto& s : leaves) {
    value += s.value;
    err += s.error;
  }
  return {value, err, count};
}

double integrate_uniform(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw std::invalid_argument("integrate_uniform: size mismatch");
  if (n < 2) return 0.0;
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  const std::size_t intervals = n - 1;
  std::size_t simpson_end = intervals;  // index of the last point covered by Simpson panels
  double tail = 0.0;
  if (intervals % 2 == 1) {
    if (intervals == 1) return 0.5 * h * (y[0] + y[1]);
    simpson_end = intervals - 3;
    tail = 3.0 * h / 8.0 * (y[simpson_end] + 3.0 * y[simpson_end + 1] + 3.0 * y[simpson_end + 2] + y[simpson_end + 3]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) sum += y[i] + 4.0 * y[i + 1] + y[i + 2];
  return sum * h / 3.0 + tail;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / std::max(1, n - 1));
  out.front() = lo;
  if (n > 1) out.back() = hi;
  return out;
}

}  // namespace numerics
}  // namespace bfmix
