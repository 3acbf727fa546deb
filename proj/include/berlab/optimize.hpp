#pragma once

#include <functional>

namespace berlab {

struct ScalarMinimum {
  double argmin = 0.0;
  double value = 0.0;
};

/// Grid scan over [lo, hi] followed by golden-section refinement.
///
/// `grid` points are equispaced and include both endpoints, or exclude `hi`
/// when `periodic` is set (f(lo) == f(hi) is then assumed). The best
/// `candidates` local minima of the grid are each refined inside their
/// neighbouring cells down to bracket width `refine_tol`. The returned point
/// is the best point actually evaluated, so `value` is always f(argmin) and is
/// an upper bound on the true minimum.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              int grid, double refine_tol, bool periodic = false,
                              int candidates = 1);

/// Maximization counterpart of minimize_scalar; `value` is a lower bound on the true max.
ScalarMinimum maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              int grid, double refine_tol, bool periodic = false,
                              int candidates = 1);

/// Weighted power mean M_r(a, b, alpha) of nonnegative a and b.
struct PowerMean {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.5;
  double r = 1.0;
};

/// (alpha a^r + (1 - alpha) b^r)^{1/r}; a^alpha b^{1-alpha} at r = 0; 0 for r < 0 with a zero argument.
double power_mean(const PowerMean& pm);

/// M_r(a, b, alpha) <= M_s(a, b, alpha) + 1e-12 * max(1, M_s) for r <= s.
bool check_power_mean(double a, double b, double alpha, double r, double s);

}  // namespace berlab
