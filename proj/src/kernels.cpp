#include "dunkl/kernels.hpp"

#include <cmath>

#include "dunkl/constants.hpp"
#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

constexpr double kArgumentCap = 50.0;
constexpr double kSeriesSwitch = 8.0;

// Coordinate multiplicities of a Z_2^N product system: entry j is the
// multiplicity attached to the root along coordinate j (0 when absent).
Eigen::VectorXd coordinate_multiplicities(const RootSystem& rs) {
  if (!rs.is_product())
    throw Error(ErrorCode::UnsupportedRootSystem,
                "kernel evaluation is limited to coordinate-product systems");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(rs.dimension);
  for (int j = 0; j < rs.positive_roots.cols(); ++j) {
    int axis = 0;
    rs.positive_roots.col(j).cwiseAbs().maxCoeff(&axis);
    out[axis] = rs.multiplicity[j];
  }
  return out;
}

// Series sum_m c_m z^m with c_0 = 1, c_m = c_{m-1}/d_m, d_m = m + 2k (odd m)
// or m (even m); reduces to exp for k = 0.
template <typename Scalar>
Scalar kernel_series(double k, Scalar z) {
  Scalar term = Scalar(1.0), sum = Scalar(1.0);
  for (int m = 1; m <= 500; ++m) {
    const double dm = (m % 2 == 1) ? m + 2.0 * k : static_cast<double>(m);
    term = term * z / dm;
    sum += term;
    if (std::abs(term) < 1e-16 * (1.0 + std::abs(sum))) return sum;
  }
  throw Error(ErrorCode::NoConvergence, "kernel series did not converge within 500 terms");
}

// E_k(iu) = A_k * int_{-1}^1 e^{i u t} (1-t)^{k-1} (1+t)^k dt with
// A_k = 2^{-2k} / B(k, k+1).  The substitution t = sin(theta) turns the
// boundary factors into sin/cos powers of psi = pi/4 - theta/2 whose combined
// exponents are 2k-1 and 2k+1, so the integrand stays bounded down to k = 1/2.
// The 2^{2k} Jacobian factor cancels the 2^{-2k} in A_k exactly.
std::complex<double> kernel_imag_integral(double k, double u) {
  const double logA = -log_beta(k, k + 1.0);
  auto density = [&](double theta) {
    const double psi = 0.25 * M_PI - 0.5 * theta;
    const double es = 2.0 * k - 1.0;  // exponent of sin(psi), vanishing at theta = pi/2
    const double ls = es == 0.0 ? 0.0 : es * std::log(std::sin(psi));
    const double lc = (2.0 * k + 1.0) * std::log(std::cos(psi));
    return std::exp(logA + ls + lc);
  };
  const double half_pi = 0.5 * M_PI;
  const double re = quad_detail::integrate_1d(
      [&](double theta) { return density(theta) * std::cos(u * std::sin(theta)); }, -half_pi,
      half_pi, 1e-13);
  const double im = quad_detail::integrate_1d(
      [&](double theta) { return density(theta) * std::sin(u * std::sin(theta)); }, -half_pi,
      half_pi, 1e-13);
  return {re, im};
}

// e^{-w} * 1F1(a; b; w) for w > 0 summed term by term in log scale.  All
// series terms are positive, so there is no cancellation, and shifting each
// term by -w keeps every exponential in range for arbitrarily large w.
double scaled_1f1(double a, double b, double w) {
  double log_term = 0.0;
  double sum = std::exp(-w);
  for (int n = 1; n < 200000; ++n) {
    log_term += std::log(w * (a + n - 1.0) / ((b + n - 1.0) * n));
    const double t = std::exp(log_term - w);
    sum += t;
    if (static_cast<double>(n) > w && t < 1e-17 * sum) return sum;
  }
  throw Error(ErrorCode::NoConvergence, "confluent series did not converge");
}

// Large-argument expansion e^{-w} 1F1(a; b; w) ~ G(b)/G(a) w^{a-b}
// sum_j (b-a)_j (1-a)_j / (j! w^j), truncated at its smallest term.
double scaled_1f1_asymptotic(double a, double b, double w) {
  const double pref = std::exp(std::lgamma(b) - std::lgamma(a) + (a - b) * std::log(w));
  double term = 1.0, sum = 1.0, prev = 1.0;
  for (int j = 1; j <= 40; ++j) {
    term *= (b - a + j - 1.0) * (j - a) / (j * w);
    if (std::abs(term) > prev) break;
    prev = std::abs(term);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  return pref * sum;
}

// e^{-|z|} E_k(z) for real z.  Bounded by 1, free of overflow and of the
// series argument cap; this is what the heat kernel needs, where the Gaussian
// prefactor absorbs the growth of E_k.  Writing E_k through the confluent
// function, E_k(z) = e^z 1F1(k; 2k+1; -2z), and applying Kummer's transform
// on the positive side gives e^{-|z|} E_k(z) = e^{-w} 1F1(a; 2k+1; w) with
// w = 2|z| and a = k+1 (z > 0) or a = k (z < 0): a positive-term series for
// either sign, with no endpoint singularities for small multiplicities.
double rank1_kernel_scaled(double k, double z) {
  if (k == 0.0) return z >= 0.0 ? 1.0 : std::exp(2.0 * z);
  if (std::abs(z) <= kSeriesSwitch) return kernel_series(k, z) * std::exp(-std::abs(z));
  const double w = 2.0 * std::abs(z);
  const double a = z > 0.0 ? k + 1.0 : k;
  const double b = 2.0 * k + 1.0;
  // The direct series needs about w terms; past that the asymptotic expansion
  // reaches full precision in a handful of terms as long as k^2 << w.
  if (w <= std::max(1400.0, 40.0 * k * k)) return scaled_1f1(a, b, w);
  return scaled_1f1_asymptotic(a, b, w);
}

double spread_radius(const Eigen::VectorXd& x, double t, double tolerance) {
  const double sigma = std::sqrt(2.0 * t);
  const double tail = std::sqrt(4.0 * t * std::log(1.0 / std::max(tolerance * 1e-3, 1e-300)));
  return x.cwiseAbs().maxCoeff() + tail + 4.0 * sigma + 1.0;
}

}  // namespace

double rank1_kernel_eval(double k, double x, double y) {
  const double z = x * y;
  if (std::abs(z) > kArgumentCap)
    throw Error(ErrorCode::ArgumentTooLarge, "kernel argument |x*y| exceeds the cap of 50");
  if (k < 0.0)
    throw Error(ErrorCode::NegativeMultiplicity, "kernel multiplicity must be nonnegative");
  if (k == 0.0) return std::exp(z);
  // Positive-term series is cancellation-free for z >= 0; negative arguments
  // of large modulus go through the scaled confluent evaluation, for which
  // the e^{|z|} factor is harmless under the argument cap.
  if (z >= 0.0 || std::abs(z) <= kSeriesSwitch) return kernel_series(k, z);
  return rank1_kernel_scaled(k, z) * std::exp(std::abs(z));
}

std::complex<double> rank1_kernel_imag(double k, double u) {
  if (std::abs(u) > kArgumentCap)
    throw Error(ErrorCode::ArgumentTooLarge, "kernel argument exceeds the cap of 50");
  if (k == 0.0) return {std::cos(u), std::sin(u)};
  if (std::abs(u) <= kSeriesSwitch) return kernel_series(k, std::complex<double>(0.0, u));
  return kernel_imag_integral(k, u);
}

double product_kernel_eval(const RootSystem& rs, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) {
  const Eigen::VectorXd ks = coordinate_multiplicities(rs);
  double out = 1.0;
  for (int j = 0; j < rs.dimension; ++j) out *= rank1_kernel_eval(ks[j], x[j], y[j]);
  return out;
}

std::complex<double> product_kernel_imag(const RootSystem& rs, const Eigen::VectorXd& xi,
                                         const Eigen::VectorXd& x) {
  const Eigen::VectorXd ks = coordinate_multiplicities(rs);
  std::complex<double> out(1.0, 0.0);
  // E_k(-i xi, x) = conj(E_k(i xi, x)): the series coefficients are real.
  for (int j = 0; j < rs.dimension; ++j) out *= std::conj(rank1_kernel_imag(ks[j], xi[j] * x[j]));
  return out;
}

double heat_kernel(const RootSystem& rs, double t, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonpositiveTime, "heat kernel requires t > 0");
  const double d = rs.effective_dimension();
  const double norm = macdonald_mehta(rs) * std::pow(2.0 * t, 0.5 * d);
  const Eigen::VectorXd ks = coordinate_multiplicities(rs);
  // Coordinatewise: e^{-(x_j^2+y_j^2)/4t} E(x_j y_j / 2t)
  //   = e^{-(|x_j|-|y_j|)^2/4t} * [e^{-|z|} E(z)], z = x_j y_j / 2t,
  // which avoids overflow and the series argument cap for any x, y, t.
  double out = 1.0 / norm;
  for (int j = 0; j < rs.dimension; ++j) {
    const double gap = std::abs(x[j]) - std::abs(y[j]);
    out *= std::exp(-gap * gap / (4.0 * t)) *
           rank1_kernel_scaled(ks[j], x[j] * y[j] / (2.0 * t));
  }
  return out;
}

double heat_kernel_bound(const RootSystem& rs, double t, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonpositiveTime, "heat kernel requires t > 0");
  const Eigen::VectorXd ks = coordinate_multiplicities(rs);
  // max over the group orbit of e^{-|gx-y|^2/4t}: coordinatewise sign choice.
  double expo = 0.0;
  for (int j = 0; j < rs.dimension; ++j) {
    const double direct = (x[j] - y[j]) * (x[j] - y[j]);
    const double flipped = (x[j] + y[j]) * (x[j] + y[j]);
    expo += ks[j] > 0.0 ? std::min(direct, flipped) : direct;
  }
  const double d = rs.effective_dimension();
  return std::exp(-expo / (4.0 * t)) /
         (macdonald_mehta(rs) * std::pow(2.0 * t, 0.5 * d));
}

double heat_apply(const RootSystem& rs, const ScalarField& field, double t,
                  const Eigen::VectorXd& x, double tolerance) {
  if (t < 0.0) throw Error(ErrorCode::NegativeTime, "the heat semigroup requires t >= 0");
  if (t == 0.0) return field.value(x);
  // The kernel concentrates near the orbit of x; integrate over a box that
  // covers every reflected center plus the Gaussian spread, intersected with
  // the field's own support when that is smaller.
  double R = spread_radius(x, t, tolerance);
  if (field.support_radius > 0.0) R = std::min(R, field.support_radius + 1e-9);
  const Eigen::VectorXd lo = Eigen::VectorXd::Constant(rs.dimension, -R);
  const Eigen::VectorXd hi = Eigen::VectorXd::Constant(rs.dimension, R);
  auto g = [&](const Eigen::VectorXd& y) { return heat_kernel(rs, t, x, y) * field.value(y); };
  return integrate_weighted(rs, g, WeightedDomain::box(lo, hi), tolerance).value;
}

double semigroup_sup_norm(const RootSystem& rs, const ScalarField& field, double t,
                          double tolerance) {
  if (t == 0.0) return sup_norm(rs, field, WeightedDomain::full_space());
  // P_t f decays away from the support of f; a grid over the support plus the
  // heat spread captures the supremum to grid resolution.
  double L = std::sqrt(2.0 * t) * 3.0 + 1.0;
  if (field.support_radius > 0.0)
    L += field.support_radius;
  else
    L += truncation_radius(field, 1.0, 1e-8, rs.effective_dimension());
  const int n = rs.dimension;
  const int grid = (n == 1) ? 129 : 17;
  std::vector<int> idx(n, 0);
  Eigen::VectorXd x(n);
  double best = 0.0;
  for (;;) {
    for (int i = 0; i < n; ++i) x[i] = -L + 2.0 * L * idx[i] / double(grid - 1);
    best = std::max(best, std::abs(heat_apply(rs, field, t, x, tolerance)));
    int i = 0;
    while (i < n && ++idx[i] == grid) idx[i++] = 0;
    if (i == n) break;
  }
  return best;
}

std::complex<double> dunkl_transform(const RootSystem& rs, const ScalarField& field,
                                     const Eigen::VectorXd& xi, double tolerance) {
  const double inv_mk = 1.0 / macdonald_mehta(rs);
  auto re = [&](const Eigen::VectorXd& x) {
    return field.value(x) * product_kernel_imag(rs, xi, x).real();
  };
  auto im = [&](const Eigen::VectorXd& x) {
    return field.value(x) * product_kernel_imag(rs, xi, x).imag();
  };
  const WeightedDomain dom = WeightedDomain::full_space();
  const double vre = integrate_field(rs, field, re, dom, tolerance).value;
  const double vim = integrate_field(rs, field, im, dom, tolerance).value;
  return {inv_mk * vre, inv_mk * vim};
}

double besov_norm(const RootSystem& rs, const ScalarField& field, double s,
                  const std::vector<double>& t_grid) {
  if (!(s < 0.0))
    throw Error(ErrorCode::NonnegativeS, "the heat-semigroup Besov norm requires s < 0");
  double best = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw Error(ErrorCode::NonpositiveTime, "Besov t-grid must be positive");
    best = std::max(best, std::pow(t, -0.5 * s) * semigroup_sup_norm(rs, field, t, 1e-7));
  }
  return best;
}

}  // namespace dunkl
