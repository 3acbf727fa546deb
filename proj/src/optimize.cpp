#include "berlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "berlab/types.hpp"

namespace berlab {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

struct Incumbent {
  double x;
  double fx;
  void offer(double xn, double fn) {
    // NaN never wins; ties keep the earlier point.
    if (fn < fx) {
      x = xn;
      fx = fn;
    }
  }
};

void golden_section(const std::function<double(double)>& f, double a, double b, double tol,
                    Incumbent& best) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  best.offer(c, fc);
  best.offer(d, fd);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      best.offer(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      best.offer(d, fd);
    }
  }
}

}  // namespace

ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              int grid, double refine_tol, bool periodic, int candidates) {
  if (grid < 3) throw Error(ErrorCode::InvalidConfig, "grid must have at least 3 points");
  if (!(hi > lo)) throw Error(ErrorCode::InvalidConfig, "empty interval");
  const double h = periodic ? (hi - lo) / grid : (hi - lo) / (grid - 1);
  std::vector<double> xs(static_cast<std::size_t>(grid));
  std::vector<double> fs(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    xs[static_cast<std::size_t>(i)] = (i == grid - 1 && !periodic) ? hi : lo + i * h;
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }

  Incumbent best{xs[0], fs[0]};
  for (int i = 1; i < grid; ++i) best.offer(xs[static_cast<std::size_t>(i)], fs[static_cast<std::size_t>(i)]);

  auto at = [&](int i) {
    if (periodic) i = (i % grid + grid) % grid;
    return fs[static_cast<std::size_t>(i)];
  };

  // Local minima of the sampled function, best first (ties by index).
  std::vector<int> minima;
  for (int i = 0; i < grid; ++i) {
    const bool left_ok = (!periodic && i == 0) || at(i) <= at(i - 1);
    const bool right_ok = (!periodic && i == grid - 1) || at(i) <= at(i + 1);
    if (left_ok && right_ok) minima.push_back(i);
  }
  if (minima.empty()) minima.push_back(0);
  std::stable_sort(minima.begin(), minima.end(),
                   [&](int l, int r) { return fs[static_cast<std::size_t>(l)] < fs[static_cast<std::size_t>(r)]; });
  if (static_cast<int>(minima.size()) > candidates) minima.resize(static_cast<std::size_t>(candidates));

  for (int i : minima) {
    double a = xs[static_cast<std::size_t>(i)] - h;
    double b = xs[static_cast<std::size_t>(i)] + h;
    if (!periodic) {
      a = std::max(a, lo);
      b = std::min(b, hi);
    }
    golden_section(f, a, b, refine_tol, best);
  }

  double x = best.x;
  if (periodic) {
    const double period = hi - lo;
    x = lo + std::fmod(std::fmod(x - lo, period) + period, period);
  }
  return {x, best.fx};
}

ScalarMinimum maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              int grid, double refine_tol, bool periodic, int candidates) {
  auto r = minimize_scalar([&](double x) { return -f(x); }, lo, hi, grid, refine_tol, periodic,
                           candidates);
  return {r.argmin, -r.value};
}

double power_mean(const PowerMean& pm) {
  if (pm.a < 0 || pm.b < 0) throw Error(ErrorCode::InvalidInput, "power mean needs a, b >= 0");
  if (!(pm.alpha > 0 && pm.alpha < 1)) throw Error(ErrorCode::InvalidInput, "power mean needs 0 < alpha < 1");
  if (pm.r == 0.0) return std::pow(pm.a, pm.alpha) * std::pow(pm.b, 1.0 - pm.alpha);
  if (pm.r < 0 && (pm.a == 0.0 || pm.b == 0.0)) return 0.0;
  return std::pow(pm.alpha * std::pow(pm.a, pm.r) + (1.0 - pm.alpha) * std::pow(pm.b, pm.r), 1.0 / pm.r);
}

bool check_power_mean(double a, double b, double alpha, double r, double s) {
  if (r > s) throw Error(ErrorCode::InvalidInput, "check_power_mean needs r <= s");
  const double mr = power_mean({a, b, alpha, r});
  const double ms = power_mean({a, b, alpha, s});
  return mr <= ms + 1e-12 * std::max(1.0, ms);
}

}  // namespace berlab
