#include "selectorate/root_find.hpp"

#include <cmath>
#include <sstream>

#include "selectorate/errors.hpp"

namespace selectorate {

namespace {
constexpr int kMaxIterations = 200;
}

BracketedRoot root_find_bracketed(const std::function<double(double)>& f,
                                  double lo, double hi, double tol) {
  if (!(lo < hi)) {
    std::ostringstream msg;
    msg << "bracket is degenerate: lo=" << lo << " hi=" << hi;
    throw BracketError(msg.str());
  }
  double f_lo = f(lo);
  if (f_lo == 0.0) return {lo, f_lo, 0};
  double f_hi = f(hi);
  if (f_hi == 0.0) return {hi, f_hi, 0};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream msg;
    msg << "no sign change on bracket: f(" << lo << ")=" << f_lo << ", f("
        << hi << ")=" << f_hi;
    throw BracketError(msg.str());
  }

  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (std::abs(f_mid) <= tol || (hi - lo) <= tol) return {mid, f_mid, iter};
    // Bracket exhausted in floating point; the midpoint is as good as it gets.
    if (!(mid > lo) || !(mid < hi)) return {mid, f_mid, iter};
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  std::ostringstream msg;
  msg << "no convergence after " << kMaxIterations
      << " bisection steps; bracket [" << lo << ", " << hi << "], tol=" << tol;
  throw ConvergenceError(msg.str());
}

}  // namespace selectorate
