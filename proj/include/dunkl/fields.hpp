#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "dunkl/root_system.hpp"

namespace dunkl {

enum class Decay { None, Gaussian, Polynomial };

/// A scalar function on R^N with optional analytic derivatives and decay
/// metadata used by full-space quadrature.
struct ScalarField {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;  // may be empty
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;   // may be empty
  double support_radius = 0.0;  // 0 means unbounded support
  Decay decay = Decay::None;
  double decay_scale = 1.0;  // Gaussian: exp(-|x|^2 / (2 scale^2)) envelope
  double decay_shift = 0.0;  // Gaussian: envelope centre offset (|x| - shift)
  double decay_rate = 0.0;   // Polynomial: |f| <= C (1+|x|)^{-rate}
  std::string name;

  double operator()(const Eigen::VectorXd& x) const { return value(x); }
  bool has_gradient() const { return static_cast<bool>(gradient); }
  bool has_hessian() const { return static_cast<bool>(hessian); }
};

/// Values of the full Dunkl calculus at one point.
struct DunklPointValues {
  Eigen::VectorXd classical_gradient;
  Eigen::VectorXd difference_parts;
  Eigen::VectorXd dunkl_gradient;  // classical_gradient + difference_parts
  double dunkl_laplacian = 0.0;
  double gamma_value = 0.0;  // carre-du-champ
};

/// Analytic gradient when present, else central differences with
/// h = eps^{1/3} (1+|x|).
Eigen::VectorXd eval_gradient(const ScalarField& field, const Eigen::VectorXd& x);
Eigen::MatrixXd eval_hessian(const ScalarField& field, const Eigen::VectorXd& x);
double classical_laplacian(const ScalarField& field, const Eigen::VectorXd& x);

Eigen::VectorXd difference_parts(const RootSystem& rs, const ScalarField& field,
                                 const Eigen::VectorXd& x);
Eigen::VectorXd dunkl_gradient(const RootSystem& rs, const ScalarField& field,
                               const Eigen::VectorXd& x);
double dunkl_laplacian(const RootSystem& rs, const ScalarField& field, const Eigen::VectorXd& x);

/// Gamma(f) = |grad f|^2 + sum_a k_a ((f(x)-f(s_a x)) / <a,x>)^2.
double carre_du_champ(const RootSystem& rs, const ScalarField& field, const Eigen::VectorXd& x);

/// Gamma(f) = (Delta_k(f^2) - 2 f Delta_k f) / 2; independent route used as
/// the oracle for carre_du_champ.
double carre_du_champ_via_definition(const RootSystem& rs, const ScalarField& field,
                                     const Eigen::VectorXd& x);

DunklPointValues dunkl_point_values(const RootSystem& rs, const ScalarField& field,
                                    const Eigen::VectorXd& x);

/// f^2 with derivatives propagated from f.
ScalarField squared_field(const ScalarField& field);
/// |f|; gradient defined away from zeros of f.
ScalarField abs_field(const ScalarField& field);
ScalarField scaled_field(const ScalarField& field, double factor);

}  // namespace dunkl
