#pragma once

#include <vector>

#include "dunkl/constants.hpp"
#include "dunkl/fields.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// Level/mass table of a field on a chamber: masses[i] = mu_k({|f| > levels[i]}).
struct DistributionFunction {
  std::vector<double> levels;  // decreasing
  std::vector<double> masses;  // nondecreasing
};

/// Radius r such that the chamber ball of radius r has the given mu_k mass.
double set_rearrangement(const RootSystem& rs, const ChamberSign& chamber, double mass);

/// Level-set masses of |f| over the chamber at the given (decreasing) levels.
DistributionFunction distribution_function(const RootSystem& rs, const ScalarField& field,
                                           const ChamberSign& chamber,
                                           const std::vector<double>& levels);

/// Default level grid: `count` logarithmic levels from max|f| down to
/// max|f| * 1e-4.
std::vector<double> default_level_grid(const RootSystem& rs, const ScalarField& field,
                                       int count = 200);

/// Symmetric decreasing rearrangement f* as a radial profile on the chamber,
/// built from the layer-cake representation through the level/radius table
/// with monotone cubic interpolation.
RadialProfile decreasing_rearrangement(const RootSystem& rs, const ScalarField& field,
                                       const ChamberSign& chamber,
                                       const std::vector<double>& level_grid);

/// L^p norm of a radial profile over the chamber (w.r.t. mu_k).
double profile_lp_norm(const RootSystem& rs, const RadialProfile& profile, double p,
                       double r_max);
/// L^p norm of the radial derivative over the chamber (w.r.t. mu_k).
double profile_gradient_lp_norm(const RootSystem& rs, const RadialProfile& profile, double p,
                                double r_max);

/// Largest radius at which the profile is positive (support cutoff baked into
/// the interpolant).
double profile_support_radius(const RadialProfile& profile, double hint);

}  // namespace dunkl
