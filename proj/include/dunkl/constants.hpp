#pragma once

#include <functional>
#include <string>
#include <utility>

#include "dunkl/root_system.hpp"

namespace dunkl {

/// Radial profile with an analytic derivative (extremal machinery).
struct RadialProfile {
  std::function<double(double)> evaluator;
  std::function<double(double)> derivative;
  std::string description;
};

struct ConstantsReport {
  double gamma = 0.0;
  double effective_dimension = 0.0;
  double macdonald_mehta = 0.0;
  double sphere_constant = 0.0;
  double nash_constant = 0.0;
  double sobolev_from_nash = 0.0;
  double talenti_bound = 0.0;
  double weyl_constant = 0.0;
  double classical_constant = 0.0;
  double dunkl_lower = 0.0;
  double dunkl_upper = 0.0;
  double gamma_bound_constant = 0.0;
};

/// Natural log of the Beta function.
double log_beta(double a, double b);

/// Gaussian weighted-volume normalization M_k = int e^{-|x|^2/2} dmu_k.
/// Closed form: the per-root product formula for product systems, and the
/// exact polar factorization (radial Gamma factor times the closed-form
/// circular weight integral) for rank-2 dihedral families.
double macdonald_mehta(const RootSystem& rs);

/// Closed form of the circular weight integral (rank <= 2 systems).
double sphere_constant_closed_form(const RootSystem& rs);

/// p(B_1) = M_k / (2^{d/2 - 1} Gamma(d/2)).
double sphere_constant(const RootSystem& rs);

/// Order of the reflection group used in constant formulas (1 when k == 0).
double group_order_for_constants(const RootSystem& rs);

/// Radial Sobolev quotient J(g) with q = p d/(d - p).
double talenti_functional(const RadialProfile& profile, double d, double p,
                          double r_max = 0.0);

/// Sharp bound of the radial Sobolev quotient.
double talenti_bound(double d, double p);

/// Sharp per-chamber Sobolev constant for exponent p.
double weyl_constant(const RootSystem& rs, double p);

/// (lower, upper) bracket for the full-space Sobolev constant at p = 2; upper
/// is also the classical (chamber) constant.
std::pair<double, double> dunkl_constant_bounds(const RootSystem& rs);

/// Nash inequality constant ||f||_2^{1+2/d} <= C ||grad_k f||_2 ||f||_1^{2/d}.
double nash_constant(const RootSystem& rs);

/// Nash constant via direct numeric minimization over the radius parameter
/// (cross-check oracle for the closed form).
double nash_constant_numeric(double A, double B, double d);

/// Sobolev p = 2 constant reachable from the Nash constant.
double sobolev_from_nash(const RootSystem& rs, double nash_c);

/// phi(r) = (a + b r^{p'})^{1 - d/p}, the equality profile of the radial
/// Sobolev quotient.
RadialProfile extremal_profile(double d, double p, double a, double b);

/// Lower bound constant C with Gamma(f) >= C |grad_k f|^2.
double gamma_bound_constant(const RootSystem& rs);

ConstantsReport constants_report(const RootSystem& rs, double p = 2.0);

}  // namespace dunkl
