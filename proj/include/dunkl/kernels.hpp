#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dunkl/fields.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// One-dimensional Dunkl kernel E_k(x, y).  Series for small arguments, an
/// integral representation for large ones; |x*y| is capped at 50.
double rank1_kernel_eval(double k, double x, double y);

/// E_k(i*u) for real u (unit-modulus-bounded oscillatory case).
std::complex<double> rank1_kernel_imag(double k, double u);

/// Product-system Dunkl kernel E_k(x, y) = prod_j E_{k_j}(x_j, y_j).
double product_kernel_eval(const RootSystem& rs, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y);

/// Product-system E_k(-i*xi, x).
std::complex<double> product_kernel_imag(const RootSystem& rs, const Eigen::VectorXd& xi,
                                         const Eigen::VectorXd& x);

/// Heat kernel h_t(x, y) for product systems.
double heat_kernel(const RootSystem& rs, double t, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y);

/// Pointwise upper bound for the heat kernel (reflection-group envelope).
double heat_kernel_bound(const RootSystem& rs, double t, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y);

/// Heat semigroup P_t f(x) by kernel quadrature; t = 0 returns f(x).
double heat_apply(const RootSystem& rs, const ScalarField& field, double t,
                  const Eigen::VectorXd& x, double tolerance = 1e-8);

/// Grid supremum of |P_t f| over a truncation box.
double semigroup_sup_norm(const RootSystem& rs, const ScalarField& field, double t,
                          double tolerance = 1e-7);

/// Dunkl transform D_k(f)(xi) = M_k^{-1} * integral of f(x) E_k(-i xi, x) dmu_k.
std::complex<double> dunkl_transform(const RootSystem& rs, const ScalarField& field,
                                     const Eigen::VectorXd& xi, double tolerance = 1e-8);

/// Heat-semigroup Besov norm sup_t t^{-s/2} ||P_t f||_inf over the t grid; s < 0.
double besov_norm(const RootSystem& rs, const ScalarField& field, double s,
                  const std::vector<double>& t_grid);

}  // namespace dunkl
