#include "dunkl/fields.hpp"

#include <cmath>
#include <limits>

namespace dunkl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Wall threshold below which difference quotients switch to their analytic
// limit <grad f(xbar), alpha> at the midpoint xbar = (x + s_a x)/2.
constexpr double kWallTol = 1e-8;

double fd_step1(const Eigen::VectorXd& x) { return std::cbrt(kEps) * (1.0 + x.norm()); }
double fd_step2(const Eigen::VectorXd& x) {
  return std::pow(kEps, 0.25) * (1.0 + x.norm());
}

}  // namespace

Eigen::VectorXd eval_gradient(const ScalarField& field, const Eigen::VectorXd& x) {
  if (field.has_gradient()) return field.gradient(x);
  const double h = fd_step1(x);
  Eigen::VectorXd g(x.size());
  Eigen::VectorXd xp = x, xm = x;
  for (int i = 0; i < x.size(); ++i) {
    xp[i] = x[i] + h;
    xm[i] = x[i] - h;
    g[i] = (field.value(xp) - field.value(xm)) / (2.0 * h);
    xp[i] = x[i];
    xm[i] = x[i];
  }
  return g;
}

Eigen::MatrixXd eval_hessian(const ScalarField& field, const Eigen::VectorXd& x) {
  if (field.has_hessian()) return field.hessian(x);
  const int n = static_cast<int>(x.size());
  const double h = fd_step2(x);
  Eigen::MatrixXd hess(n, n);
  const double f0 = field.value(x);
  Eigen::VectorXd xa = x;
  for (int i = 0; i < n; ++i) {
    xa[i] = x[i] + h;
    const double fp = field.value(xa);
    xa[i] = x[i] - h;
    const double fm = field.value(xa);
    xa[i] = x[i];
    hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      xa[i] = x[i] + h; xa[j] = x[j] + h;
      const double fpp = field.value(xa);
      xa[j] = x[j] - h;
      const double fpm = field.value(xa);
      xa[i] = x[i] - h; xa[j] = x[j] + h;
      const double fmp = field.value(xa);
      xa[j] = x[j] - h;
      const double fmm = field.value(xa);
      xa[i] = x[i]; xa[j] = x[j];
      hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }
  return hess;
}

double classical_laplacian(const ScalarField& field, const Eigen::VectorXd& x) {
  return eval_hessian(field, x).trace();
}

namespace {

// (f(x) - f(s_a x)) / <a,x> with the analytic wall limit.
double difference_quotient(const ScalarField& field, const Eigen::VectorXd& alpha,
                           const Eigen::VectorXd& x, double ip) {
  if (std::abs(ip) < kWallTol * (1.0 + x.norm())) {
    const Eigen::VectorXd midpoint = x - 0.5 * ip * alpha;
    return eval_gradient(field, midpoint).dot(alpha);
  }
  const Eigen::VectorXd reflected = x - ip * alpha;  // |alpha|^2 = 2
  return (field.value(x) - field.value(reflected)) / ip;
}

}  // namespace

Eigen::VectorXd difference_parts(const RootSystem& rs, const ScalarField& field,
                                 const Eigen::VectorXd& x) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(x.size());
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const double k = rs.multiplicity[j];
    if (k == 0.0) continue;
    const Eigen::VectorXd alpha = rs.positive_roots.col(j);
    d += k * difference_quotient(field, alpha, x, alpha.dot(x)) * alpha;
  }
  return d;
}

Eigen::VectorXd dunkl_gradient(const RootSystem& rs, const ScalarField& field,
                               const Eigen::VectorXd& x) {
  return eval_gradient(field, x) + difference_parts(rs, field, x);
}

double dunkl_laplacian(const RootSystem& rs, const ScalarField& field, const Eigen::VectorXd& x) {
  double value = classical_laplacian(field, x);
  if (rs.trivial_multiplicity()) return value;
  const Eigen::VectorXd grad = eval_gradient(field, x);
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const double k = rs.multiplicity[j];
    if (k == 0.0) continue;
    const Eigen::VectorXd alpha = rs.positive_roots.col(j);
    const double ip = alpha.dot(x);
    if (std::abs(ip) < kWallTol * (1.0 + x.norm())) {
      // Bracket limit on the wall: (1/2) alpha^T H(xbar) alpha.
      const Eigen::VectorXd midpoint = x - 0.5 * ip * alpha;
      const Eigen::MatrixXd hess = eval_hessian(field, midpoint);
      value += 2.0 * k * 0.5 * alpha.dot(hess * alpha);
    } else {
      const Eigen::VectorXd reflected = x - ip * alpha;
      value += 2.0 * k *
               (grad.dot(alpha) / ip - (field.value(x) - field.value(reflected)) / (ip * ip));
    }
  }
  return value;
}

double carre_du_champ(const RootSystem& rs, const ScalarField& field, const Eigen::VectorXd& x) {
  double gamma = eval_gradient(field, x).squaredNorm();
  for (int j = 0; j < rs.num_positive_roots(); ++j) {
    const double k = rs.multiplicity[j];
    if (k == 0.0) continue;
    const Eigen::VectorXd alpha = rs.positive_roots.col(j);
    const double q = difference_quotient(field, alpha, x, alpha.dot(x));
    gamma += k * q * q;
  }
  return gamma;
}

double carre_du_champ_via_definition(const RootSystem& rs, const ScalarField& field,
                                     const Eigen::VectorXd& x) {
  const ScalarField f2 = squared_field(field);
  return 0.5 * (dunkl_laplacian(rs, f2, x) - 2.0 * field.value(x) * dunkl_laplacian(rs, field, x));
}

DunklPointValues dunkl_point_values(const RootSystem& rs, const ScalarField& field,
                                    const Eigen::VectorXd& x) {
  DunklPointValues v;
  v.classical_gradient = eval_gradient(field, x);
  v.difference_parts = difference_parts(rs, field, x);
  v.dunkl_gradient = v.classical_gradient + v.difference_parts;
  v.dunkl_laplacian = dunkl_laplacian(rs, field, x);
  v.gamma_value = carre_du_champ(rs, field, x);
  return v;
}

ScalarField squared_field(const ScalarField& field) {
  ScalarField out;
  out.name = field.name + "^2";
  out.support_radius = field.support_radius;
  out.decay = field.decay;
  out.decay_scale = field.decay_scale / std::sqrt(2.0);
  out.decay_shift = field.decay_shift;
  out.decay_rate = 2.0 * field.decay_rate;
  auto base = field.value;
  out.value = [base](const Eigen::VectorXd& x) {
    const double f = base(x);
    return f * f;
  };
  if (field.has_gradient()) {
    auto grad = field.gradient;
    out.gradient = [base, grad](const Eigen::VectorXd& x) {
      return Eigen::VectorXd(2.0 * base(x) * grad(x));
    };
    if (field.has_hessian()) {
      auto hess = field.hessian;
      out.hessian = [base, grad, hess](const Eigen::VectorXd& x) {
        const Eigen::VectorXd g = grad(x);
        return Eigen::MatrixXd(2.0 * (g * g.transpose() + base(x) * hess(x)));
      };
    }
  }
  return out;
}

ScalarField abs_field(const ScalarField& field) {
  ScalarField out;
  out.name = "|" + field.name + "|";
  out.support_radius = field.support_radius;
  out.decay = field.decay;
  out.decay_scale = field.decay_scale;
  out.decay_shift = field.decay_shift;
  out.decay_rate = field.decay_rate;
  auto base = field.value;
  out.value = [base](const Eigen::VectorXd& x) { return std::abs(base(x)); };
  if (field.has_gradient()) {
    auto grad = field.gradient;
    out.gradient = [base, grad](const Eigen::VectorXd& x) {
      return Eigen::VectorXd((base(x) >= 0 ? 1.0 : -1.0) * grad(x));
    };
  }
  return out;
}

ScalarField scaled_field(const ScalarField& field, double factor) {
  ScalarField out = field;
  auto base = field.value;
  out.value = [base, factor](const Eigen::VectorXd& x) { return factor * base(x); };
  if (field.has_gradient()) {
    auto grad = field.gradient;
    out.gradient = [grad, factor](const Eigen::VectorXd& x) {
      return Eigen::VectorXd(factor * grad(x));
    };
  }
  if (field.has_hessian()) {
    auto hess = field.hessian;
    out.hessian = [hess, factor](const Eigen::VectorXd& x) {
      return Eigen::MatrixXd(factor * hess(x));
    };
  }
  return out;
}

}  // namespace dunkl
