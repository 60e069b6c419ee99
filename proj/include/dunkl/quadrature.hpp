#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "dunkl/fields.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

enum class DomainKind { FullSpace, Ball, Box, ChamberBall, Chamber };

/// An integration region carrying the measure mu_k.
struct WeightedDomain {
  DomainKind kind = DomainKind::FullSpace;
  double radius = 0.0;          // Ball / ChamberBall
  Eigen::VectorXd lo, hi;       // Box
  ChamberSign chamber;          // ChamberBall / Chamber
  bool has_chamber = false;

  static WeightedDomain full_space();
  static WeightedDomain ball(double radius);
  static WeightedDomain box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);
  static WeightedDomain chamber_ball(const ChamberSign& sign, double radius);
  static WeightedDomain full_chamber(const ChamberSign& sign);
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long cells_used = 0;
};

struct CellRecord {
  Eigen::VectorXd lo, hi;  // polar cells use (r, phi) coordinates
  double contribution;
};

using PointFunction = std::function<double(const Eigen::VectorXd&)>;

/// Integral of g d(mu_k) over a bounded domain; FullSpace/Chamber require a
/// truncation radius chosen by the field-aware wrapper below.
IntegralResult integrate_weighted(const RootSystem& rs, const PointFunction& g,
                                  const WeightedDomain& domain, double tolerance,
                                  std::vector<CellRecord>* cells = nullptr);

/// Field-aware wrapper: truncates FullSpace/Chamber using the field's support
/// radius or decay declaration (power p applied to the integrand's decay).
IntegralResult integrate_field(const RootSystem& rs, const ScalarField& field,
                               const PointFunction& g, const WeightedDomain& domain,
                               double tolerance, double decay_power = 1.0,
                               std::vector<CellRecord>* cells = nullptr);

/// Truncation radius for a declared-decay field at the given tolerance.
double truncation_radius(const ScalarField& field, double decay_power, double tolerance,
                         double effective_dim);

double lp_norm(const RootSystem& rs, const ScalarField& field, double p,
               const WeightedDomain& domain, double tolerance = 1e-8);
double sup_norm(const RootSystem& rs, const ScalarField& field, const WeightedDomain& domain);

/// mu_k measure of {x in domain : |f(x)| > level}.
double level_set_mass(const RootSystem& rs, const ScalarField& field, double level,
                      const WeightedDomain& domain);

/// Masses of the superlevel sets {|f| > t} for every level in `levels`, in one
/// pass.  Much cheaper than repeated level_set_mass calls.
std::vector<double> distribution_masses(const RootSystem& rs, const ScalarField& field,
                                        const std::vector<double>& levels,
                                        const WeightedDomain& domain);

/// sup over the level grid of t * mu_k(|f|>t)^{1/q}.
double weak_lq_norm(const RootSystem& rs, const ScalarField& field, double q,
                    const std::vector<double>& level_grid, const WeightedDomain& domain);

/// Integral of w_k over the unit sphere (two endpoint weights when N = 1).
double sphere_weight_integral(const RootSystem& rs, double tolerance = 1e-10);

/// Weighted perimeter p(A) of Ball, Box or ChamberBall boundaries.
double perimeter(const RootSystem& rs, const WeightedDomain& domain, double tolerance = 1e-10);

/// Radial reduction: integral over the full space of g(|x|) d(mu_k) equals
/// sphere_weight_integral * int_0^inf g(r) r^{d-1} dr.
double radial_integral(double effective_dim, const std::function<double(double)>& g,
                       double r_max, double tolerance = 1e-10);

std::vector<double> log_grid(double lo, double hi, int points);

namespace quad_detail {
/// Adaptive 1-D Gauss-Legendre; deterministic left-to-right recursion.
double integrate_1d(const std::function<double(double)>& g, double a, double b,
                    double tol_abs, double* err_out = nullptr, long* cells = nullptr);
}  // namespace quad_detail

}  // namespace dunkl
