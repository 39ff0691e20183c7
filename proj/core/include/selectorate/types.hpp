#pragma once

#include "selectorate/errors.hpp"

namespace selectorate {

/// Scalar description of a polity: N residents, a selectorate of S potential
/// supporters, a winning coalition of W members the leader must keep, non-tax
/// revenue R, tax rate r, per-unit public-good price p and the common
/// discount factor delta. Group sizes are real-valued (not integer) so that
/// parameter sweeps trace smooth curves.
struct PolityParams {
  double n_residents = 0.0;   // N
  double selectorate = 0.0;   // S
  double coalition = 0.0;     // W
  double base_revenue = 0.0;  // R
  double tax_rate = 0.0;      // r
  double public_price = 0.0;  // p
  double discount = 0.0;      // delta

  /// Enforces N >= S >= W >= 1, 0 < delta < 1, 0 <= r <= 1, p > 0, R >= 0.
  void validate() const;
};

/// Increasing strictly concave power functions x^a with a in (0,1):
/// v values public goods, u values private goods (u(0) = 0), phi is the
/// production function in the tax base. Keeping the whole family in power
/// form makes u invertible, which the binding-constraint inversion needs.
struct FunctionFamily {
  double v_exponent = 0.5;
  double u_exponent = 0.5;
  double phi_exponent = 0.5;

  double v(double g) const;
  double v_g(double g) const;
  double u(double z) const;
  double u_z(double z) const;
  /// Inverse of u on [0, inf): u_inv(u(z)) = z.
  double u_inv(double value) const;
  double phi(double g) const;
  double phi_g(double g) const;

  /// Enforces every exponent strictly inside (0, 1).
  void validate() const;
};

/// A candidate offer: g public goods polity-wide and z private goods per
/// coalition member (total private spending is W*z).
struct Allocation {
  double public_goods = 0.0;   // g
  double private_goods = 0.0;  // z, per coalition member

  /// Enforces g >= 0 and z >= 0.
  void validate() const;
};

/// The challenger's best immediate offer (g_hat, z_hat), which exhausts the
/// budget, together with its one-period value v(g_hat) + u(z_hat).
struct Benchmark {
  double g_hat = 0.0;
  double z_hat = 0.0;
  double offer_value = 0.0;
};

}  // namespace selectorate
