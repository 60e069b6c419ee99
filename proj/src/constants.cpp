#include "dunkl/constants.hpp"

#include <cmath>
#include <limits>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Per-orbit multiplicity values in orbit order.
std::vector<double> orbit_multiplicities(const RootSystem& rs) {
  std::vector<double> out(rs.num_orbits(), 0.0);
  for (int j = 0; j < rs.positive_roots.cols(); ++j) out[rs.orbit[j]] = rs.multiplicity[j];
  return out;
}

// Closed form of the circular integral of w_k for a regular dihedral system
// with m positive roots.  Splitting the roots into rotation orbits reduces the
// product of |<alpha, theta>|^{2k} factors to powers of |cos| and |sin| of a
// single folded angle, whose integrals are Beta functions.
double dihedral_circle_integral(const RootSystem& rs) {
  const int m = static_cast<int>(rs.positive_roots.cols());
  const auto ks = orbit_multiplicities(rs);
  if (m % 2 == 1) {
    const double k = ks.at(0);
    return std::pow(2.0, (2.0 - m) * k) * 2.0 * kPi *
           std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0)) / std::sqrt(kPi);
  }
  const int p = m / 2;
  const double k1 = ks.at(0);
  const double k2 = ks.size() > 1 ? ks.at(1) : ks.at(0);
  return std::pow(2.0, (2.0 - p) * (k1 + k2)) * 2.0 *
         std::exp(std::lgamma(k1 + 0.5) + std::lgamma(k2 + 0.5) -
                  std::lgamma(k1 + k2 + 1.0));
}

bool is_regular_dihedral(const RootSystem& rs) {
  if (rs.dimension != 2) return false;
  return rs.family == FamilyTag::A2 || rs.family == FamilyTag::B2 ||
         rs.family == FamilyTag::Dihedral;
}

}  // namespace

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double sphere_constant_closed_form(const RootSystem& rs) {
  if (rs.dimension == 1) {
    Eigen::VectorXd e(1);
    e << 1.0;
    return weight(rs, e) + weight(rs, -e);
  }
  if (is_regular_dihedral(rs)) return dihedral_circle_integral(rs);
  if (rs.dimension == 2) return sphere_weight_integral(rs, 1e-12);
  throw Error(ErrorCode::UnsupportedRootSystem,
              "no circular weight integral for this system");
}

double macdonald_mehta(const RootSystem& rs) {
  if (rs.is_product() || rs.trivial_multiplicity()) {
    double prod = 1.0;
    for (int j = 0; j < rs.positive_roots.cols(); ++j) {
      const double k = rs.multiplicity[j];
      prod *= std::exp(std::lgamma(2.0 * k + 1.0) - std::lgamma(k + 1.0));
    }
    return std::pow(2.0 * kPi, 0.5 * rs.dimension) * prod;
  }
  // Polar factorization: the radial Gaussian moment times the circular weight
  // integral (exact for rank <= 2).
  const double d = rs.effective_dimension();
  const double radial = std::exp((0.5 * d - 1.0) * std::log(2.0) + std::lgamma(0.5 * d));
  return radial * sphere_constant_closed_form(rs);
}

double sphere_constant(const RootSystem& rs) {
  const double d = rs.effective_dimension();
  return macdonald_mehta(rs) /
         std::exp((0.5 * d - 1.0) * std::log(2.0) + std::lgamma(0.5 * d));
}

double group_order_for_constants(const RootSystem& rs) {
  // Walls with zero multiplicity carry no weight; the chamber decomposition
  // only sees the subgroup generated by the weighted roots.
  std::vector<Eigen::VectorXd> active;
  for (int j = 0; j < rs.positive_roots.cols(); ++j)
    if (rs.multiplicity[j] > 0.0) active.push_back(rs.positive_roots.col(j));
  if (active.empty()) return 1.0;
  Eigen::MatrixXd roots(rs.dimension, static_cast<int>(active.size()));
  for (std::size_t j = 0; j < active.size(); ++j) roots.col(static_cast<int>(j)) = active[j];
  RootSystem sub = build_custom_root_system(roots, std::vector<double>(active.size(), 1.0));
  return static_cast<double>(generate_group(sub).elements.size());
}

double talenti_bound(double d, double p) {
  if (!(p > 1.0 && p < d))
    throw Error(ErrorCode::ParameterRange, "the radial Sobolev bound requires 1 < p < d");
  const double pp = p / (p - 1.0);
  return std::pow(d, -1.0 / p) * std::pow((p - 1.0) / (d - p), 1.0 / pp) *
         std::exp((-1.0 / d) * (log_beta(d / p, d / pp) - std::log(pp)));
}

double talenti_functional(const RadialProfile& profile, double d, double p, double r_max) {
  if (!(p > 1.0 && p < d))
    throw Error(ErrorCode::ParameterRange, "the radial Sobolev quotient requires 1 < p < d");
  const double q = p * d / (d - p);
  // The gradient integral can converge as slowly as 1/R (e.g. the d=3, p=2
  // equality profile), so the default cutoff is generous.
  if (r_max <= 0.0) r_max = 2e6;
  auto num = [&](double R) {
    return radial_integral(
        d, [&](double r) { return std::pow(std::abs(profile.evaluator(r)), q); }, R, 1e-11);
  };
  auto den = [&](double R) {
    return radial_integral(
        d, [&](double r) { return std::pow(std::abs(profile.derivative(r)), p); }, R, 1e-11);
  };
  const double n1 = num(0.5 * r_max), n2 = num(r_max);
  const double d1 = den(0.5 * r_max), d2 = den(r_max);
  if (std::abs(n2 - n1) > 1e-3 * std::abs(n2) || std::abs(d2 - d1) > 1e-3 * std::abs(d2) ||
      !(n2 > 0.0) || !(d2 > 0.0))
    throw Error(ErrorCode::DivergentIntegral,
                "radial Sobolev quotient integrals do not converge by the cutoff radius");
  return std::pow(n2, 1.0 / q) / std::pow(d2, 1.0 / p);
}

double weyl_constant(const RootSystem& rs, double p) {
  const double d = rs.effective_dimension();
  if (!(p > 1.0 && p < d))
    throw Error(ErrorCode::ParameterRange, "the chamber Sobolev constant requires 1 < p < d");
  const double q = p * d / (d - p);
  const double chamber_sphere = sphere_constant(rs) / group_order_for_constants(rs);
  return std::pow(chamber_sphere, 1.0 / q - 1.0 / p) * talenti_bound(d, p);
}

std::pair<double, double> dunkl_constant_bounds(const RootSystem& rs) {
  const double d = rs.effective_dimension();
  if (!(d > 2.0))
    throw Error(ErrorCode::ParameterRange, "the Sobolev bracket requires N + 2*gamma > 2");
  const double mk = macdonald_mehta(rs);
  const double G = group_order_for_constants(rs);
  const double front = std::sqrt(2.0 / (d * (d - 2.0)));
  const double core = std::exp(std::lgamma(d) - std::lgamma(0.5 * d)) / mk;
  const double lower = front * std::pow(core, 1.0 / d);
  const double upper = front * std::pow(G * core, 1.0 / d);
  return {lower, upper};
}

double nash_constant(const RootSystem& rs) {
  const double d = rs.effective_dimension();
  const double mk = macdonald_mehta(rs);
  const double pb1 = sphere_constant(rs);
  return std::pow((d + 2.0) / d, (d + 2.0) / (2.0 * d)) * std::pow(0.5 * d, 1.0 / d) *
         std::pow(pb1 / (d * mk * mk), 1.0 / d);
}

double nash_constant_numeric(double A, double B, double d) {
  // Golden-section minimization of A/R^2 + B R^d over R > 0.
  auto g = [&](double R) { return A / (R * R) + B * std::pow(R, d); };
  double lo = 1e-8, hi = 1e8;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 400; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = g(x2);
    }
  }
  return g(0.5 * (lo + hi));
}

double sobolev_from_nash(const RootSystem& rs, double nash_c) {
  const double d = rs.effective_dimension();
  if (!(d > 2.0))
    throw Error(ErrorCode::ParameterRange, "the Nash-to-Sobolev chain requires d > 2");
  const double p = d / (d + 2.0);
  const double q = 2.0 * d / (d - 2.0);
  return std::pow(2.0, 1.0 / (2.0 * p - 1.0)) * std::pow(std::pow(2.0, q) - 1.0, 1.0 / q) *
         nash_c;
}

RadialProfile extremal_profile(double d, double p, double a, double b) {
  if (!(a > 0.0 && b > 0.0 && p > 1.0 && p < d))
    throw Error(ErrorCode::ParameterRange,
                "the equality profile requires a, b > 0 and 1 < p < d");
  const double pp = p / (p - 1.0);
  const double e = 1.0 - d / p;
  RadialProfile out;
  out.evaluator = [=](double r) { return std::pow(a + b * std::pow(r, pp), e); };
  out.derivative = [=](double r) {
    return e * std::pow(a + b * std::pow(r, pp), e - 1.0) * b * pp * std::pow(r, pp - 1.0);
  };
  out.description = "(a + b r^{p'})^{1 - d/p}";
  return out;
}

double gamma_bound_constant(const RootSystem& rs) {
  double ctilde = std::numeric_limits<double>::infinity();
  int active = 0;
  for (int j = 0; j < rs.positive_roots.cols(); ++j) {
    const double k = rs.multiplicity[j];
    if (k > 0.0) {
      ++active;
      ctilde = std::min(ctilde, 1.0 / (2.0 * k));
    }
  }
  if (active == 0) return 1.0;
  const double r = ctilde / static_cast<double>(active);
  return r / (1.0 + r);
}

ConstantsReport constants_report(const RootSystem& rs, double p) {
  ConstantsReport rep;
  rep.gamma = rs.gamma();
  rep.effective_dimension = rs.effective_dimension();
  rep.macdonald_mehta = macdonald_mehta(rs);
  rep.sphere_constant = sphere_constant(rs);
  rep.gamma_bound_constant = gamma_bound_constant(rs);
  const double d = rep.effective_dimension;
  rep.nash_constant = nash_constant(rs);
  if (d > 2.0) {
    const auto bounds = dunkl_constant_bounds(rs);
    rep.dunkl_lower = bounds.first;
    rep.dunkl_upper = bounds.second;
    rep.classical_constant = bounds.second;
    rep.sobolev_from_nash = sobolev_from_nash(rs, rep.nash_constant);
  }
  if (p > 1.0 && p < d) {
    rep.talenti_bound = talenti_bound(d, p);
    rep.weyl_constant = weyl_constant(rs, p);
  }
  return rep;
}

}  // namespace dunkl
