#include "dunkl/field_catalog.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace dunkl {

ScalarField make_gaussian(int dim) {
  ScalarField f;
  f.name = "gaussian";
  f.decay = Decay::Gaussian;
  f.decay_scale = 1.0;
  f.value = [](const Eigen::VectorXd& x) { return std::exp(-0.5 * x.squaredNorm()); };
  f.gradient = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(-std::exp(-0.5 * x.squaredNorm()) * x);
  };
  f.hessian = [dim](const Eigen::VectorXd& x) {
    const double g = std::exp(-0.5 * x.squaredNorm());
    return Eigen::MatrixXd(g * (x * x.transpose() - Eigen::MatrixXd::Identity(dim, dim)));
  };
  return f;
}

ScalarField make_odd_gaussian(int dim) {
  ScalarField f;
  f.name = "odd-gaussian";
  f.decay = Decay::Gaussian;
  f.decay_scale = 1.0;
  f.value = [](const Eigen::VectorXd& x) { return x[0] * std::exp(-0.5 * x.squaredNorm()); };
  f.gradient = [](const Eigen::VectorXd& x) {
    const double g = std::exp(-0.5 * x.squaredNorm());
    Eigen::VectorXd out = -x[0] * g * x;
    out[0] += g;
    return out;
  };
  f.hessian = [dim](const Eigen::VectorXd& x) {
    const double g = std::exp(-0.5 * x.squaredNorm());
    Eigen::MatrixXd h = x[0] * (x * x.transpose() - Eigen::MatrixXd::Identity(dim, dim));
    h.row(0) -= x.transpose();
    h.col(0) -= x;
    return Eigen::MatrixXd(g * h);
  };
  return f;
}

ScalarField make_talenti_field(int dim, double a, double b, double p, double d) {
  if (!(a > 0 && b > 0 && p > 1 && p < d))
    throw Error(ErrorCode::ParameterRange, "talenti field needs a,b>0 and 1<p<d");
  const double pprime = p / (p - 1.0);
  const double expo = 1.0 - d / p;
  ScalarField f;
  f.name = "talenti";
  f.decay = Decay::Polynomial;
  f.decay_rate = (d - p) / (p - 1.0);
  f.value = [a, b, pprime, expo](const Eigen::VectorXd& x) {
    return std::pow(a + b * std::pow(x.norm(), pprime), expo);
  };
  f.gradient = [a, b, pprime, expo](const Eigen::VectorXd& x) {
    const double r = x.norm();
    if (r == 0.0) return Eigen::VectorXd(Eigen::VectorXd::Zero(x.size()));
    const double base = a + b * std::pow(r, pprime);
    const double dr = expo * std::pow(base, expo - 1.0) * b * pprime * std::pow(r, pprime - 1.0);
    return Eigen::VectorXd((dr / r) * x);
  };
  if (pprime == 2.0) {
    f.hessian = [a, b, expo, dim](const Eigen::VectorXd& x) {
      // phi = (a + b r^2)^expo
      const double base = a + b * x.squaredNorm();
      const double c1 = 2.0 * b * expo * std::pow(base, expo - 1.0);
      const double c2 = 4.0 * b * b * expo * (expo - 1.0) * std::pow(base, expo - 2.0);
      return Eigen::MatrixXd(c1 * Eigen::MatrixXd::Identity(dim, dim) + c2 * x * x.transpose());
    };
  }
  return f;
}

ScalarField make_bump(const Eigen::VectorXd& center, double radius) {
  if (radius <= 0) throw Error(ErrorCode::ParameterRange, "bump radius must be positive");
  ScalarField f;
  f.name = "bump";
  f.support_radius = center.norm() + radius;
  const Eigen::VectorXd c = center;
  const double r2 = radius * radius;
  f.value = [c, r2](const Eigen::VectorXd& x) {
    const double s = (x - c).squaredNorm() / r2;
    if (s >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s));
  };
  f.gradient = [c, r2](const Eigen::VectorXd& x) {
    const Eigen::VectorXd u = x - c;
    const double s = u.squaredNorm() / r2;
    if (s >= 1.0) return Eigen::VectorXd(Eigen::VectorXd::Zero(x.size()));
    const double v = std::exp(1.0 - 1.0 / (1.0 - s));
    const double dvds = -v / ((1.0 - s) * (1.0 - s));
    return Eigen::VectorXd(dvds * (2.0 / r2) * u);
  };
  f.hessian = [c, r2](const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    const Eigen::VectorXd u = x - c;
    const double s = u.squaredNorm() / r2;
    if (s >= 1.0) return Eigen::MatrixXd(Eigen::MatrixXd::Zero(n, n));
    const double v = std::exp(1.0 - 1.0 / (1.0 - s));
    const double om = 1.0 - s;
    const double dvds = -v / (om * om);
    const double d2vds2 = v * (2.0 * s - 1.0) / (om * om * om * om);
    const Eigen::VectorXd ds = (2.0 / r2) * u;
    return Eigen::MatrixXd(d2vds2 * ds * ds.transpose() +
                           dvds * (2.0 / r2) * Eigen::MatrixXd::Identity(n, n));
  };
  return f;
}

ScalarField make_gaussian_mixture(int dim, std::uint64_t seed, int count) {
  if (count < 1) throw Error(ErrorCode::ParameterRange, "mixture count must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> center_dist(0.0, 1.2);
  std::uniform_real_distribution<double> amp_dist(0.5, 1.5);
  std::uniform_real_distribution<double> width_dist(0.7, 1.3);
  std::bernoulli_distribution sign_dist(0.5);

  struct Lump {
    Eigen::VectorXd center;
    double amp, inv_var;
  };
  std::vector<Lump> lumps;
  double max_center = 0.0, max_scale = 0.0;
  for (int m = 0; m < count; ++m) {
    Lump lump;
    lump.center.resize(dim);
    for (int i = 0; i < dim; ++i) lump.center[i] = center_dist(rng);
    lump.amp = amp_dist(rng) * (sign_dist(rng) ? 1.0 : -1.0);
    const double sigma = width_dist(rng);
    lump.inv_var = 1.0 / (sigma * sigma);
    max_center = std::max(max_center, lump.center.norm());
    max_scale = std::max(max_scale, sigma);
    lumps.push_back(std::move(lump));
  }

  ScalarField f;
  f.name = "mixture-" + std::to_string(seed);
  f.decay = Decay::Gaussian;
  f.decay_scale = max_scale;
  f.support_radius = 0.0;
  f.value = [lumps](const Eigen::VectorXd& x) {
    double v = 0.0;
    for (const auto& l : lumps) v += l.amp * std::exp(-0.5 * l.inv_var * (x - l.center).squaredNorm());
    return v;
  };
  f.gradient = [lumps](const Eigen::VectorXd& x) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
    for (const auto& l : lumps) {
      const Eigen::VectorXd u = x - l.center;
      g += -l.amp * l.inv_var * std::exp(-0.5 * l.inv_var * u.squaredNorm()) * u;
    }
    return g;
  };
  f.hessian = [lumps, dim](const Eigen::VectorXd& x) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& l : lumps) {
      const Eigen::VectorXd u = x - l.center;
      const double e = l.amp * std::exp(-0.5 * l.inv_var * u.squaredNorm());
      h += e * (l.inv_var * l.inv_var * u * u.transpose() -
                l.inv_var * Eigen::MatrixXd::Identity(dim, dim));
    }
    return h;
  };
  f.decay_scale = max_scale;
  f.decay_shift = max_center;
  return f;
}

namespace {

// C^2 smoothstep, 0 below 0 and 1 above 1.
double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

}  // namespace

ScalarField make_smoothed_indicator(double a, double b, double eta) {
  if (!(a < b) || eta <= 0)
    throw Error(ErrorCode::ParameterRange, "indicator needs a < b and eta > 0");
  ScalarField f;
  f.name = "indicator";
  f.support_radius = std::max(std::abs(a), std::abs(b)) + eta;
  f.value = [a, b, eta](const Eigen::VectorXd& x) {
    const double t = x[0];
    return smoothstep((t - (a - 0.5 * eta)) / eta) * smoothstep(((b + 0.5 * eta) - t) / eta);
  };
  return f;
}

ScalarField parse_field_spec(const std::string& spec, const RootSystem& rs) {
  const int dim = rs.dimension;
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(std::stod(item));
  }
  if (head == "gaussian") return make_gaussian(dim);
  if (head == "odd-gaussian" || head == "polynomial-times-gaussian") return make_odd_gaussian(dim);
  if (head == "talenti") {
    const double a = args.size() > 0 ? args[0] : 1.0;
    const double b = args.size() > 1 ? args[1] : 1.0;
    const double p = args.size() > 2 ? args[2] : 2.0;
    return make_talenti_field(dim, a, b, p, rs.effective_dimension());
  }
  if (head == "bump") {
    if (args.size() != static_cast<size_t>(dim) + 1)
      throw Error(ErrorCode::Validation, "bump needs N center coordinates and a radius");
    Eigen::VectorXd center(dim);
    for (int i = 0; i < dim; ++i) center[i] = args[static_cast<size_t>(i)];
    return make_bump(center, args.back());
  }
  if (head == "random-mixture") {
    const std::uint64_t seed = args.size() > 0 ? static_cast<std::uint64_t>(args[0]) : 42;
    const int count = args.size() > 1 ? static_cast<int>(args[1]) : 3;
    return make_gaussian_mixture(dim, seed, count);
  }
  if (head == "indicator") {
    if (dim != 1) throw Error(ErrorCode::Validation, "indicator fields are 1-dimensional");
    const double a = args.size() > 0 ? args[0] : 1.0;
    const double b = args.size() > 1 ? args[1] : 2.0;
    const double eta = args.size() > 2 ? args[2] : 0.01;
    return make_smoothed_indicator(a, b, eta);
  }
  throw Error(ErrorCode::Validation, "unknown field '" + spec + "'");
}

std::vector<ScalarField> default_test_family(const RootSystem& rs, std::uint64_t seed,
                                             int mixture_count) {
  const int dim = rs.dimension;
  std::vector<ScalarField> family;
  family.push_back(make_gaussian(dim));
  family.push_back(make_odd_gaussian(dim));
  family.push_back(make_talenti_field(dim, 1.0, 1.0, 2.0, rs.effective_dimension()));
  Eigen::VectorXd c1 = Eigen::VectorXd::Constant(dim, 0.9);
  Eigen::VectorXd c2 = Eigen::VectorXd::Constant(dim, -0.4);
  family.push_back(make_bump(c1, 1.4));
  family.push_back(make_bump(c2, 0.8));
  for (int m = 0; m < mixture_count; ++m)
    family.push_back(make_gaussian_mixture(dim, seed + static_cast<std::uint64_t>(m), 3));
  return family;
}

std::vector<ScalarField> chamber_test_family(const RootSystem& rs, const Chamber& chamber,
                                             std::uint64_t seed, int count) {
  // Distance from t * rep to the nearest wall grows linearly in t; bumps are
  // centred on the representative ray with radii clear of every wall.
  double wall_clearance = 1.0;  // min over roots of |<alpha, rep>| / |alpha|
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const Eigen::VectorXd alpha = rs.positive_roots.col(j);
    wall_clearance = std::min(wall_clearance, std::abs(alpha.dot(chamber.representative)) / alpha.norm());
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist_center(1.0, 2.5);
  std::uniform_real_distribution<double> dist_frac(0.35, 0.8);
  std::vector<ScalarField> family;
  for (int m = 0; m < count; ++m) {
    const double t = dist_center(rng);
    const double radius = dist_frac(rng) * t * wall_clearance;
    family.push_back(make_bump(t * chamber.representative, radius));
    family.back().name += "-ch" + std::to_string(m);
  }
  return family;
}

bool lp_integrable(const ScalarField& field, double p, double effective_dim) {
  if (field.support_radius > 0.0) return true;
  if (field.decay == Decay::Gaussian) return true;
  if (field.decay == Decay::Polynomial) return p * field.decay_rate > effective_dim + 0.1;
  return false;
}

}  // namespace dunkl
