#pragma once

#include "selectorate/types.hpp"

namespace selectorate {

/// Total government revenue R + N*r*phi(g). Strictly increasing and concave
/// in g. Rejects g < 0.
double revenue(const PolityParams& params, const FunctionFamily& fns,
               double public_goods);

/// The leader's leftover resources revenue(g) - p*g - W*z. May be negative;
/// callers interpret negative values as infeasible spending.
double discretionary(const PolityParams& params, const FunctionFamily& fns,
                     const Allocation& alloc);

/// Private goods implied by a binding budget at g: (R + N*r*phi(g) - p*g)/W.
/// Negative values are returned, not clamped, so solvers can detect
/// infeasible g.
double z_from_budget(const PolityParams& params, const FunctionFamily& fns,
                     double public_goods);

/// The g at which marginal tax revenue equals the public-good price,
/// N*r*phi_g(g) = p. z_from_budget is maximized there. Returns 0 when the
/// polity collects no taxes (N*r = 0).
double net_revenue_peak_g(const PolityParams& params,
                          const FunctionFamily& fns);

/// The g beyond the peak at which the binding budget runs out of private
/// goods, i.e. the larger root of z_from_budget(g) = 0. Throws
/// InfeasibleError when no g yields positive private goods.
double budget_exhaustion_g(const PolityParams& params,
                           const FunctionFamily& fns);

/// Weight carried by u(z) in the simplified retention constraint,
/// k(rho) = 1 + (delta/(1-delta)) * (rho - W/S). k(1) matches asymmetric
/// uncertainty, k(W/S) = 1 matches equal uncertainty (offer matching).
double select_weight(const PolityParams& params, double retention_probability);

/// Coefficient (1-delta)*S / (S - delta*W) multiplying v_g in the
/// asymmetric first-order condition; the reciprocal of select_weight(1).
double afoc_coefficient(const PolityParams& params);

/// Generalized first-order condition along the binding retention constraint:
/// (1/k(rho)) * v_g(g) + ((N*r*phi_g(g) - p)/W) * u_z(z).
/// Requires g > 0 and z > 0 (power-function derivatives diverge at 0).
double foc_residual(const PolityParams& params, const FunctionFamily& fns,
                    const Allocation& alloc, double retention_probability);

/// Equal-uncertainty first-order condition, zero at the challenger optimum:
/// v_g(g) + ((N*r*phi_g(g) - p)/W) * u_z(z).
double efoc_residual(const PolityParams& params, const FunctionFamily& fns,
                     const Allocation& alloc);

/// Asymmetric-uncertainty first-order condition, foc_residual at rho = 1.
double afoc_residual(const PolityParams& params, const FunctionFamily& fns,
                     const Allocation& alloc);

/// Retention constraint residual
///   v(g) + u(z) - offer_value + (delta/(1-delta)) * (rho - W/S) * u(z).
/// Nonnegative means the leader's offer retains the coalition. rho = 1 is
/// the asymmetric-uncertainty constraint.
double select_residual(const PolityParams& params, const FunctionFamily& fns,
                       const Allocation& alloc, const Benchmark& bench,
                       double retention_probability = 1.0);

/// The unique z >= 0 making select_residual zero at this g, from
/// u(z) = (offer_value - v(g)) / k(rho). Throws DomainError when
/// v(g) exceeds the benchmark value (no z >= 0 can bind the constraint).
double z_from_select(const PolityParams& params, const FunctionFamily& fns,
                     double public_goods, const Benchmark& bench,
                     double retention_probability = 1.0);

/// Analytic slope of the constraint-implied z(g):
/// -(1/k(rho)) * v_g(g) / u_z(z(g)). Always negative on its domain.
double dz_dg_select(const PolityParams& params, const FunctionFamily& fns,
                    double public_goods, const Benchmark& bench,
                    double retention_probability = 1.0);

/// Discounted value of the best credible challenger offer against a leader
/// playing `steady` forever:
///   offer_value + (delta/(1-delta)) * v(g) + (delta/(1-delta)) * (W/S) * u(z).
double credible_challenger_value(const PolityParams& params,
                                 const FunctionFamily& fns,
                                 const Benchmark& bench,
                                 const Allocation& steady);

/// Discounted value of the incumbent's steady offer,
/// (v(g) + u(z)) / (1 - delta). Subtracting credible_challenger_value
/// reproduces select_residual at rho = 1.
double incumbent_stream_value(const PolityParams& params,
                              const FunctionFamily& fns,
                              const Allocation& steady);

}  // namespace selectorate
