#include "dunkl/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

// Monotone (Fritsch-Carlson) cubic Hermite interpolant.
struct MonotoneCubic {
  std::vector<double> x, y, d;

  static MonotoneCubic fit(std::vector<double> xs, std::vector<double> ys) {
    MonotoneCubic c;
    c.x = std::move(xs);
    c.y = std::move(ys);
    const std::size_t n = c.x.size();
    c.d.assign(n, 0.0);
    if (n < 2) return c;
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = c.x[i + 1] - c.x[i];
      delta[i] = (c.y[i + 1] - c.y[i]) / h[i];
    }
    c.d[0] = delta[0];
    c.d[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) {
        c.d[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        c.d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
      }
    }
    return c;
  }

  std::size_t locate(double t) const {
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = static_cast<std::size_t>(it - x.begin());
    if (i == 0) return 0;
    if (i >= x.size()) return x.size() - 2;
    return i - 1;
  }

  double eval(double t) const {
    const std::size_t i = locate(t);
    const double h = x[i + 1] - x[i];
    const double s = (t - x[i]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * y[i] + h10 * h * d[i] + h01 * y[i + 1] + h11 * h * d[i + 1];
  }

  double deriv(double t) const {
    const std::size_t i = locate(t);
    const double h = x[i + 1] - x[i];
    const double s = (t - x[i]) / h;
    const double g00 = (6.0 * s * s - 6.0 * s) / h;
    const double g10 = 3.0 * s * s - 4.0 * s + 1.0;
    const double g01 = (6.0 * s - 6.0 * s * s) / h;
    const double g11 = 3.0 * s * s - 2.0 * s;
    return g00 * y[i] + g10 * d[i] + g01 * y[i + 1] + g11 * d[i + 1];
  }
};

double chamber_sphere_constant(const RootSystem& rs) {
  return sphere_constant(rs) / group_order_for_constants(rs);
}

}  // namespace

double set_rearrangement(const RootSystem& rs, const ChamberSign& chamber, double mass) {
  (void)chamber;  // chambers are congruent under the group; the constant is shared
  if (mass < 0.0)
    throw Error(ErrorCode::NegativeMass, "rearrangement mass must be nonnegative");
  if (mass == 0.0) return 0.0;
  const double d = rs.effective_dimension();
  return std::pow(d * mass / chamber_sphere_constant(rs), 1.0 / d);
}

DistributionFunction distribution_function(const RootSystem& rs, const ScalarField& field,
                                           const ChamberSign& chamber,
                                           const std::vector<double>& levels) {
  DistributionFunction out;
  out.levels = levels;
  std::sort(out.levels.begin(), out.levels.end(), std::greater<double>());
  out.masses = distribution_masses(rs, field, out.levels, WeightedDomain::full_chamber(chamber));
  return out;
}

std::vector<double> default_level_grid(const RootSystem& rs, const ScalarField& field,
                                       int count) {
  const double m = sup_norm(rs, field, WeightedDomain::full_space());
  if (!(m > 0.0)) throw Error(ErrorCode::Validation, "field is identically zero");
  std::vector<double> grid = log_grid(1e-4 * m, m * (1.0 - 1e-9), count);
  std::reverse(grid.begin(), grid.end());
  return grid;
}

RadialProfile decreasing_rearrangement(const RootSystem& rs, const ScalarField& field,
                                       const ChamberSign& chamber,
                                       const std::vector<double>& level_grid) {
  if (field.support_radius <= 0.0 && field.decay == Decay::None)
    throw Error(ErrorCode::UnboundedField,
                "rearrangement requires compact support or a decay declaration");
  const double tmax = sup_norm(rs, field, WeightedDomain::full_space());
  DistributionFunction dist = distribution_function(rs, field, chamber, level_grid);

  // Level/radius knots, radius ascending as the level descends; an extra
  // zero-level knot at (almost) the support mass pins down the outer tail.
  std::vector<double> radii = {0.0};
  std::vector<double> values = {tmax};
  for (std::size_t i = 0; i < dist.levels.size(); ++i) {
    const double r = set_rearrangement(rs, chamber, dist.masses[i]);
    if (r > radii.back() + 1e-12 && dist.levels[i] < values.back()) {
      radii.push_back(r);
      values.push_back(dist.levels[i]);
    }
  }
  const double zero_mass =
      distribution_masses(rs, field, {1e-6 * tmax}, WeightedDomain::full_chamber(chamber))
          .front();
  double r_end = set_rearrangement(rs, chamber, zero_mass);
  if (r_end <= radii.back() + 1e-12) r_end = radii.back() * (1.0 + 1e-6) + 1e-12;
  radii.push_back(r_end);
  values.push_back(0.0);

  auto spline = std::make_shared<MonotoneCubic>(MonotoneCubic::fit(radii, values));
  RadialProfile out;
  out.evaluator = [spline, r_end](double r) {
    if (r < 0.0) r = -r;
    if (r >= r_end) return 0.0;
    return std::max(spline->eval(r), 0.0);
  };
  out.derivative = [spline, r_end](double r) {
    if (r < 0.0) r = -r;
    if (r >= r_end) return 0.0;
    return spline->deriv(r);
  };
  out.description = "symmetric decreasing rearrangement (monotone cubic through " +
                    std::to_string(radii.size()) + " level knots)";
  return out;
}

double profile_lp_norm(const RootSystem& rs, const RadialProfile& profile, double p,
                       double r_max) {
  const double d = rs.effective_dimension();
  const double c = chamber_sphere_constant(rs);
  const double integral = radial_integral(
      d, [&](double r) { return std::pow(std::abs(profile.evaluator(r)), p); }, r_max, 1e-10);
  return std::pow(c * integral, 1.0 / p);
}

double profile_gradient_lp_norm(const RootSystem& rs, const RadialProfile& profile, double p,
                                double r_max) {
  const double d = rs.effective_dimension();
  const double c = chamber_sphere_constant(rs);
  const double integral = radial_integral(
      d, [&](double r) { return std::pow(std::abs(profile.derivative(r)), p); }, r_max, 1e-10);
  return std::pow(c * integral, 1.0 / p);
}

double profile_support_radius(const RadialProfile& profile, double hint) {
  double hi = std::max(hint, 1.0);
  while (profile.evaluator(hi) > 0.0 && hi < 1e8) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (profile.evaluator(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace dunkl
