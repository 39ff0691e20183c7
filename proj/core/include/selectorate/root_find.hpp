#pragma once

#include <functional>

namespace selectorate {

struct BracketedRoot {
  double x = 0.0;
  double f_x = 0.0;
  int iterations = 0;
};

/// Bisection on [lo, hi]. f(lo) and f(hi) must differ in sign (BracketError
/// otherwise); the bracket halves every iteration. Returns the first midpoint
/// with |f(x)| <= tol or bracket width <= tol, or the midpoint once the
/// bracket cannot shrink further in floating point. ConvergenceError after
/// 200 iterations.
BracketedRoot root_find_bracketed(const std::function<double(double)>& f,
                                  double lo, double hi, double tol);

}  // namespace selectorate
