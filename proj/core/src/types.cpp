#include "selectorate/types.hpp"

#include <cmath>
#include <sstream>

namespace selectorate {

namespace {

[[noreturn]] void fail_validation(const std::string& what) {
  throw ValidationError(what);
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    std::ostringstream msg;
    msg << name << " must be finite, got " << x;
    fail_validation(msg.str());
  }
}

}  // namespace

void PolityParams::validate() const {
  require_finite(n_residents, "N");
  require_finite(selectorate, "S");
  require_finite(coalition, "W");
  require_finite(base_revenue, "R");
  require_finite(tax_rate, "r");
  require_finite(public_price, "p");
  require_finite(discount, "delta");
  if (!(coalition >= 1.0))
    fail_validation("coalition size W must be at least 1");
  if (!(selectorate >= coalition))
    fail_validation("selectorate S must be at least the coalition size W");
  if (!(n_residents >= selectorate))
    fail_validation("resident count N must be at least the selectorate S");
  if (!(discount > 0.0 && discount < 1.0))
    fail_validation("discount delta must lie strictly inside (0, 1)");
  if (!(tax_rate >= 0.0 && tax_rate <= 1.0))
    fail_validation("tax rate r must lie in [0, 1]");
  if (!(public_price > 0.0))
    fail_validation("public-good price p must be positive");
  if (!(base_revenue >= 0.0))
    fail_validation("base revenue R must be nonnegative");
}

namespace {

void require_exponent(double a, const char* name) {
  if (!(a > 0.0 && a < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie strictly inside (0, 1), got " << a;
    fail_validation(msg.str());
  }
}

}  // namespace

void FunctionFamily::validate() const {
  require_exponent(v_exponent, "v_exponent");
  require_exponent(u_exponent, "u_exponent");
  require_exponent(phi_exponent, "phi_exponent");
}

double FunctionFamily::v(double g) const { return std::pow(g, v_exponent); }

double FunctionFamily::v_g(double g) const {
  return v_exponent * std::pow(g, v_exponent - 1.0);
}

double FunctionFamily::u(double z) const { return std::pow(z, u_exponent); }

double FunctionFamily::u_z(double z) const {
  return u_exponent * std::pow(z, u_exponent - 1.0);
}

double FunctionFamily::u_inv(double value) const {
  return std::pow(value, 1.0 / u_exponent);
}

double FunctionFamily::phi(double g) const {
  return std::pow(g, phi_exponent);
}

double FunctionFamily::phi_g(double g) const {
  return phi_exponent * std::pow(g, phi_exponent - 1.0);
}

void Allocation::validate() const {
  if (!(public_goods >= 0.0))
    throw DomainError("public goods g must be nonnegative");
  if (!(private_goods >= 0.0))
    throw DomainError("private goods z must be nonnegative");
}

}  // namespace selectorate
