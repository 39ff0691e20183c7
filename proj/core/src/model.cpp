#include "selectorate/model.hpp"

#include <cmath>
#include <sstream>

#include "selectorate/root_find.hpp"

namespace selectorate {

namespace {

void require_nonnegative_g(double g) {
  if (!(g >= 0.0)) {
    std::ostringstream msg;
    msg << "public goods g must be nonnegative, got " << g;
    throw DomainError(msg.str());
  }
}

void require_interior(const Allocation& alloc) {
  if (!(alloc.public_goods > 0.0 && alloc.private_goods > 0.0)) {
    std::ostringstream msg;
    msg << "first-order conditions need g > 0 and z > 0, got g="
        << alloc.public_goods << " z=" << alloc.private_goods;
    throw DomainError(msg.str());
  }
}

}  // namespace

double revenue(const PolityParams& params, const FunctionFamily& fns,
               double public_goods) {
  require_nonnegative_g(public_goods);
  return params.base_revenue +
         params.n_residents * params.tax_rate * fns.phi(public_goods);
}

double discretionary(const PolityParams& params, const FunctionFamily& fns,
                     const Allocation& alloc) {
  alloc.validate();
  return revenue(params, fns, alloc.public_goods) -
         params.public_price * alloc.public_goods -
         params.coalition * alloc.private_goods;
}

double z_from_budget(const PolityParams& params, const FunctionFamily& fns,
                     double public_goods) {
  require_nonnegative_g(public_goods);
  return (revenue(params, fns, public_goods) -
          params.public_price * public_goods) /
         params.coalition;
}

double net_revenue_peak_g(const PolityParams& params,
                          const FunctionFamily& fns) {
  const double tax_scale = params.n_residents * params.tax_rate;
  if (tax_scale == 0.0) return 0.0;
  // Solve N*r*a*g^(a-1) = p for g.
  const double a = fns.phi_exponent;
  return std::pow(tax_scale * a / params.public_price, 1.0 / (1.0 - a));
}

double budget_exhaustion_g(const PolityParams& params,
                           const FunctionFamily& fns) {
  const double peak = net_revenue_peak_g(params, fns);
  const double z_peak = z_from_budget(params, fns, peak);
  if (!(z_peak > 0.0)) {
    throw InfeasibleError(
        "parameters admit no public-goods level with positive private-goods "
        "capacity");
  }
  double hi = std::max(peak, 1.0);
  while (z_from_budget(params, fns, hi) > 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw InfeasibleError("budget never exhausts at finite g");
  }
  const auto root = root_find_bracketed(
      [&](double g) { return z_from_budget(params, fns, g); }, peak, hi,
      1e-13 * std::max(1.0, hi));
  return root.x;
}

double select_weight(const PolityParams& params,
                     double retention_probability) {
  const double d = params.discount;
  return 1.0 + d / (1.0 - d) *
                   (retention_probability -
                    params.coalition / params.selectorate);
}

double afoc_coefficient(const PolityParams& params) {
  return (1.0 - params.discount) * params.selectorate /
         (params.selectorate - params.discount * params.coalition);
}

double foc_residual(const PolityParams& params, const FunctionFamily& fns,
                    const Allocation& alloc, double retention_probability) {
  require_interior(alloc);
  const double weight = select_weight(params, retention_probability);
  const double marginal_net_revenue =
      params.n_residents * params.tax_rate * fns.phi_g(alloc.public_goods) -
      params.public_price;
  return fns.v_g(alloc.public_goods) / weight +
         marginal_net_revenue / params.coalition *
             fns.u_z(alloc.private_goods);
}

double efoc_residual(const PolityParams& params, const FunctionFamily& fns,
                     const Allocation& alloc) {
  return foc_residual(params, fns, alloc,
                      params.coalition / params.selectorate);
}

double afoc_residual(const PolityParams& params, const FunctionFamily& fns,
                     const Allocation& alloc) {
  return foc_residual(params, fns, alloc, 1.0);
}

double select_residual(const PolityParams& params, const FunctionFamily& fns,
                       const Allocation& alloc, const Benchmark& bench,
                       double retention_probability) {
  alloc.validate();
  const double d = params.discount;
  const double u_value = fns.u(alloc.private_goods);
  return fns.v(alloc.public_goods) + u_value - bench.offer_value +
         d / (1.0 - d) *
             (retention_probability -
              params.coalition / params.selectorate) *
             u_value;
}

double z_from_select(const PolityParams& params, const FunctionFamily& fns,
                     double public_goods, const Benchmark& bench,
                     double retention_probability) {
  require_nonnegative_g(public_goods);
  const double weight = select_weight(params, retention_probability);
  const double target =
      (bench.offer_value - fns.v(public_goods)) / weight;
  if (target < 0.0) {
    std::ostringstream msg;
    msg << "v(g) exceeds the benchmark offer value at g=" << public_goods
        << "; the retention constraint cannot bind with z >= 0";
    throw DomainError(msg.str());
  }
  return fns.u_inv(target);
}

double dz_dg_select(const PolityParams& params, const FunctionFamily& fns,
                    double public_goods, const Benchmark& bench,
                    double retention_probability) {
  const double z =
      z_from_select(params, fns, public_goods, bench, retention_probability);
  if (!(public_goods > 0.0) || !(z > 0.0)) {
    throw DomainError(
        "dz_dg_select needs g > 0 and an interior constraint point (z > 0)");
  }
  const double weight = select_weight(params, retention_probability);
  return -fns.v_g(public_goods) / (weight * fns.u_z(z));
}

double credible_challenger_value(const PolityParams& params,
                                 const FunctionFamily& fns,
                                 const Benchmark& bench,
                                 const Allocation& steady) {
  steady.validate();
  const double future = params.discount / (1.0 - params.discount);
  return bench.offer_value + future * fns.v(steady.public_goods) +
         future * (params.coalition / params.selectorate) *
             fns.u(steady.private_goods);
}

double incumbent_stream_value(const PolityParams& params,
                              const FunctionFamily& fns,
                              const Allocation& steady) {
  steady.validate();
  return (fns.v(steady.public_goods) + fns.u(steady.private_goods)) /
         (1.0 - params.discount);
}

}  // namespace selectorate
