#include "dunkl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "dunkl/errors.hpp"
#include "dunkl/field_catalog.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rearrange.hpp"

namespace dunkl {

namespace {

using Eigen::VectorXd;

struct Ctx {
  const RootSystem& rs;
  const SuiteConfig& cfg;
  std::vector<ScalarField> family;
  std::vector<Chamber> chambers;
  ConstantsReport constants;
  double d = 0.0;
  bool product = false;
  bool rank1_product = false;  // full semigroup machinery available
};

std::mt19937_64 check_rng(const Ctx& ctx, const std::string& name) {
  unsigned long h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned long>(c)) * 1099511628211ull;
  return std::mt19937_64(ctx.cfg.seed ^ h);
}

VectorXd sample_point(const Ctx& ctx, std::mt19937_64& rng, double L) {
  std::uniform_real_distribution<double> u(-L, L);
  for (int tries = 0; tries < 1000; ++tries) {
    VectorXd x(ctx.rs.dimension);
    for (int i = 0; i < ctx.rs.dimension; ++i) x[i] = u(rng);
    bool ok = x.norm() > 1e-2;
    for (int j = 0; ok && j < ctx.rs.positive_roots.cols(); ++j)
      if (std::abs(ctx.rs.positive_roots.col(j).dot(x)) < 1e-2 * (1.0 + x.norm())) ok = false;
    if (ok) return x;
  }
  throw Error(ErrorCode::Validation, "could not sample a point away from the walls");
}

// Accumulates quadrature error estimates so the FAIL threshold can include
// the 2x margin mandated for every inequality check.
struct ErrAcc {
  double sum = 0.0;
  double add(const IntegralResult& r) {
    sum += std::abs(r.error_estimate);
    return r.value;
  }
};

ScalarField dunkl_gradient_field(const RootSystem& rs, const ScalarField& f) {
  ScalarField g;
  const RootSystem* rsp = &rs;
  ScalarField base = f;
  g.value = [rsp, base](const VectorXd& x) { return dunkl_gradient(*rsp, base, x).norm(); };
  g.support_radius = f.support_radius;
  g.decay = f.decay;
  g.decay_scale = f.decay_scale;
  g.decay_shift = f.decay_shift;
  g.decay_rate = f.decay == Decay::Polynomial ? f.decay_rate + 1.0 : f.decay_rate;
  g.name = f.name + ":|grad_k|";
  return g;
}

ScalarField classical_gradient_field(const ScalarField& f) {
  ScalarField g;
  ScalarField base = f;
  g.value = [base](const VectorXd& x) { return eval_gradient(base, x).norm(); };
  g.support_radius = f.support_radius;
  g.decay = f.decay;
  g.decay_scale = f.decay_scale;
  g.decay_shift = f.decay_shift;
  g.decay_rate = f.decay == Decay::Polynomial ? f.decay_rate + 1.0 : f.decay_rate;
  g.name = f.name + ":|grad|";
  return g;
}

// ||h||_p over the full space with an error estimate folded into `acc`.
// tol = 0 selects a dimension-appropriate default: two-dimensional adaptive
// refinement of |f|^p kinks makes 1e-8 unaffordable above rank 1.
double lp_with_err(const Ctx& ctx, const ScalarField& h, double p, ErrAcc& acc,
                   double tol = 0.0) {
  if (tol == 0.0) tol = ctx.rs.dimension >= 2 ? 1e-7 : 1e-8;
  auto g = [&h, p](const VectorXd& x) { return std::pow(std::abs(h.value(x)), p); };
  IntegralResult r =
      integrate_field(ctx.rs, h, g, WeightedDomain::full_space(), tol, p);
  const double v = std::max(r.value, 0.0);
  const double norm = std::pow(v, 1.0 / p);
  if (v > 0.0) acc.sum += std::abs(r.error_estimate) / (p * v) * norm;
  return norm;
}

double chamber_lp_with_err(const Ctx& ctx, const ScalarField& h, double p,
                           const ChamberSign& sign, ErrAcc& acc, double tol = 1e-8) {
  auto g = [&h, p](const VectorXd& x) { return std::pow(std::abs(h.value(x)), p); };
  IntegralResult r =
      integrate_field(ctx.rs, h, g, WeightedDomain::full_chamber(sign), tol, p);
  const double v = std::max(r.value, 0.0);
  const double norm = std::pow(v, 1.0 / p);
  if (v > 0.0) acc.sum += std::abs(r.error_estimate) / (p * v) * norm;
  return norm;
}

CheckResult make_result(const std::string& name, const std::string& statement, double tol) {
  CheckResult r;
  r.name = name;
  r.statement = statement;
  r.tolerance = tol;
  return r;
}

void add_row(CheckResult& r, const std::string& field, double lhs, double rhs, bool pass) {
  CheckRow row;
  row.field = field;
  row.lhs = lhs;
  row.rhs = rhs;
  row.ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : INFINITY);
  row.pass = pass;
  r.rows.push_back(row);
}

void track_worst(CheckResult& r, const std::string& field, double lhs, double rhs) {
  const double ratio = rhs != 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : INFINITY);
  if (r.rows.empty() || ratio > r.ratio) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = ratio;
    r.witness = field;
  }
}

CheckResult skipped(const std::string& name, const std::string& statement,
                    const std::string& why) {
  CheckResult r = make_result(name, statement, 0.0);
  r.status = CheckStatus::SkippedUnsupported;
  r.note = why;
  return r;
}

std::vector<double> heat_times(const Ctx& ctx) {
  return log_grid(0.05, 1.0, std::max(2, ctx.cfg.t_points * ctx.cfg.refine_factor));
}

ScalarField difference_with_semigroup(const Ctx& ctx, const ScalarField& f, double t) {
  ScalarField h;
  const RootSystem* rsp = &ctx.rs;
  ScalarField base = f;
  h.value = [rsp, base, t](const VectorXd& x) {
    return base.value(x) - heat_apply(*rsp, base, t, x, 1e-8);
  };
  h.decay = Decay::Gaussian;
  const double width = base.support_radius > 0.0 ? base.support_radius : base.decay_scale;
  h.decay_scale = width + std::sqrt(2.0 * t) + 0.5;
  h.decay_shift = base.decay_shift;
  h.name = base.name + ":(I-P_t)";
  return h;
}

// Fields of the family that are in L^p(mu_k) for all needed exponents.  On
// rank >= 2 systems, p <= 1 norms of sign-changing mixtures are excluded: the
// kink curves of |f| defeat two-dimensional adaptive refinement.
std::vector<const ScalarField*> integrable_fields(const Ctx& ctx, double p) {
  std::vector<const ScalarField*> out;
  for (const ScalarField& f : ctx.family) {
    if (!lp_integrable(f, p, ctx.d)) continue;
    if (p <= 1.0 && ctx.rs.dimension >= 2 && f.name.rfind("mixture", 0) == 0) continue;
    out.push_back(&f);
  }
  return out;
}

// --- individual checks ------------------------------------------------------

CheckResult check_cdc_identity(const Ctx& ctx) {
  CheckResult r = make_result("CDC_IDENTITY",
                              "two carre-du-champ evaluations agree pointwise",
                              1e-8 * ctx.cfg.tol_scale);
  auto rng = check_rng(ctx, r.name);
  double worst = 0.0;
  std::string witness;
  for (const ScalarField& f : ctx.family) {
    double field_worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const VectorXd x = sample_point(ctx, rng, 2.5);
      const double a = carre_du_champ(ctx.rs, f, x);
      const double b = carre_du_champ_via_definition(ctx.rs, f, x);
      const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-10});
      field_worst = std::max(field_worst, rel);
    }
    add_row(r, f.name, field_worst, r.tolerance, field_worst <= r.tolerance);
    if (field_worst > worst) {
      worst = field_worst;
      witness = f.name;
    }
  }
  r.lhs = worst;
  r.rhs = r.tolerance;
  r.ratio = worst / r.tolerance;
  r.witness = witness;
  r.status = worst <= r.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult check_dirichlet_eq(const Ctx& ctx) {
  CheckResult r = make_result(
      "DIRICHLET_EQ", "integral of the carre-du-champ equals the Dunkl Dirichlet energy",
      1e-4 * ctx.cfg.tol_scale);
  double worst = 0.0;
  for (const ScalarField& f : ctx.family) {
    ErrAcc acc;
    // The gradient surrogate carries the (faster) decay of the integrands.
    const ScalarField carrier = dunkl_gradient_field(ctx.rs, f);
    auto gamma_fn = [&](const VectorXd& x) { return carre_du_champ(ctx.rs, f, x); };
    auto grad_fn = [&](const VectorXd& x) {
      return dunkl_gradient(ctx.rs, f, x).squaredNorm();
    };
    const double a = acc.add(
        integrate_field(ctx.rs, carrier, gamma_fn, WeightedDomain::full_space(), 1e-8, 2.0));
    const double b = acc.add(
        integrate_field(ctx.rs, carrier, grad_fn, WeightedDomain::full_space(), 1e-8, 2.0));
    const double rel = std::abs(a - b) / std::max(std::abs(b), 1e-12);
    const bool pass = rel <= r.tolerance + 2.0 * acc.sum / std::max(std::abs(b), 1e-12);
    add_row(r, f.name, a, b, pass);
    if (rel > worst) {
      worst = rel;
      r.lhs = a;
      r.rhs = b;
      r.witness = f.name;
      r.error_margin = acc.sum;
    }
    if (!pass) r.status = CheckStatus::Fail;
  }
  r.ratio = r.rhs != 0.0 ? r.lhs / r.rhs : 1.0;
  r.note = "worst relative deviation " + std::to_string(worst);
  return r;
}

CheckResult check_grad_domination(const Ctx& ctx) {
  CheckResult r = make_result("GRAD_DOMINATION",
                              "classical Dirichlet energy bounded by the Dunkl one",
                              1e-8 * ctx.cfg.tol_scale);
  for (const ScalarField& f : ctx.family) {
    ErrAcc acc;
    const ScalarField carrier = dunkl_gradient_field(ctx.rs, f);
    auto cg = [&](const VectorXd& x) { return eval_gradient(f, x).squaredNorm(); };
    auto dg = [&](const VectorXd& x) { return dunkl_gradient(ctx.rs, f, x).squaredNorm(); };
    const double lhs =
        acc.add(integrate_field(ctx.rs, carrier, cg, WeightedDomain::full_space(), 1e-8, 2.0));
    const double rhs =
        acc.add(integrate_field(ctx.rs, carrier, dg, WeightedDomain::full_space(), 1e-8, 2.0));
    const bool pass = lhs <= rhs + r.tolerance * rhs + 2.0 * acc.sum;
    add_row(r, f.name, lhs, rhs, pass);
    track_worst(r, f.name, lhs, rhs);
    r.error_margin = std::max(r.error_margin, acc.sum);
    if (!pass) r.status = CheckStatus::Fail;
  }
  return r;
}

CheckResult check_mod_ineq(const Ctx& ctx) {
  CheckResult r = make_result("MOD_INEQ",
                              "carre-du-champ of |f| dominated by that of f pointwise",
                              1e-9 * ctx.cfg.tol_scale);
  auto rng = check_rng(ctx, r.name);
  for (const ScalarField& f : ctx.family) {
    const ScalarField af = abs_field(f);
    double worst_excess = 0.0;
    double worst_rhs = 1.0;
    for (int i = 0; i < 200; ++i) {
      const VectorXd x = sample_point(ctx, rng, 2.5);
      if (std::abs(f.value(x)) < 1e-6) continue;
      const double a = carre_du_champ(ctx.rs, af, x);
      const double b = carre_du_champ(ctx.rs, f, x);
      if (a - b > worst_excess) {
        worst_excess = a - b;
        worst_rhs = std::max(b, 1e-12);
      }
    }
    const bool pass = worst_excess <= r.tolerance * worst_rhs + 1e-12;
    add_row(r, f.name, worst_excess, r.tolerance * worst_rhs, pass);
    track_worst(r, f.name, worst_excess, r.tolerance * worst_rhs + 1e-12);
    if (!pass) r.status = CheckStatus::Fail;
  }
  return r;
}

CheckResult check_gamma_lower(const Ctx& ctx) {
  CheckResult r = make_result("GAMMA_LOWER",
                              "carre-du-champ dominates C times the Dunkl gradient squared",
                              1e-9 * ctx.cfg.tol_scale);
  const double C = ctx.constants.gamma_bound_constant;
  auto rng = check_rng(ctx, r.name);
  for (const ScalarField& f : ctx.family) {
    double worst = 0.0;  // max of C|grad_k f|^2 / Gamma(f)
    for (int i = 0; i < 1000; ++i) {
      const VectorXd x = sample_point(ctx, rng, 3.0);
      const double g = carre_du_champ(ctx.rs, f, x);
      const double lhs = C * dunkl_gradient(ctx.rs, f, x).squaredNorm();
      if (g <= 1e-300) continue;
      worst = std::max(worst, lhs / g);
    }
    const bool pass = worst <= 1.0 + r.tolerance;
    add_row(r, f.name, worst, 1.0, pass);
    track_worst(r, f.name, worst, 1.0);
    if (!pass) r.status = CheckStatus::Fail;
  }
  r.note = "C = " + std::to_string(C);
  return r;
}

CheckResult check_nash(const Ctx& ctx) {
  CheckResult r = make_result("NASH", "Nash inequality with the closed-form constant",
                              1e-9 * ctx.cfg.tol_scale);
  const double C = ctx.constants.nash_constant;
  for (const ScalarField* f : integrable_fields(ctx, 1.0)) {
    ErrAcc acc;
    const double n2 = lp_with_err(ctx, *f, 2.0, acc);
    const double n1 = lp_with_err(ctx, *f, 1.0, acc);
    const double g2 = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), 2.0, acc);
    const double lhs = std::pow(n2, 1.0 + 2.0 / ctx.d);
    const double rhs = C * g2 * std::pow(n1, 2.0 / ctx.d);
    const bool pass = lhs <= rhs + r.tolerance * rhs + 2.0 * acc.sum;
    add_row(r, f->name, lhs, rhs, pass);
    track_worst(r, f->name, lhs, rhs);
    r.error_margin = std::max(r.error_margin, acc.sum);
    if (!pass) r.status = CheckStatus::Fail;
  }
  return r;
}

CheckResult check_sobolev_p2(const Ctx& ctx) {
  if (!(ctx.d > 2.0))
    return skipped("SOBOLEV_P2", "p = 2 Sobolev inequality from the Nash chain",
                   "requires effective dimension > 2");
  CheckResult r = make_result("SOBOLEV_P2", "p = 2 Sobolev inequality from the Nash chain",
                              1e-9 * ctx.cfg.tol_scale);
  const double q = 2.0 * ctx.d / (ctx.d - 2.0);
  const double C = ctx.constants.sobolev_from_nash;
  for (const ScalarField* f : integrable_fields(ctx, q)) {
    ErrAcc acc;
    const double nq = lp_with_err(ctx, *f, q, acc);
    const double g2 = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), 2.0, acc);
    const double rhs = C * g2;
    const bool pass = nq <= rhs + r.tolerance * rhs + 2.0 * acc.sum;
    add_row(r, f->name, nq, rhs, pass);
    track_worst(r, f->name, nq, rhs);
    r.error_margin = std::max(r.error_margin, acc.sum);
    if (!pass) r.status = CheckStatus::Fail;
  }
  r.note = "q = " + std::to_string(q);
  return r;
}

// Representative subset for the (expensive) semigroup-based checks.
std::vector<const ScalarField*> semigroup_fields(const Ctx& ctx, bool need_l1) {
  std::vector<const ScalarField*> out;
  for (const ScalarField& f : ctx.family) {
    if (need_l1 && !lp_integrable(f, 1.0, ctx.d)) continue;
    if (f.name.rfind("mixture", 0) == 0 && out.size() >= 3) continue;
    out.push_back(&f);
    if (out.size() == 3) break;
  }
  return out;
}

CheckResult check_pseudo_poincare(const Ctx& ctx) {
  const char* stmt = "||f - P_t f||_p bounded by sqrt(t) ||grad_k f||_p (bounded ratio)";
  if (!ctx.rank1_product)
    return skipped("PSEUDO_POINCARE", stmt,
                   "semigroup norm checks require a rank-1 product system");
  CheckResult r = make_result("PSEUDO_POINCARE", stmt, 1e-6 * ctx.cfg.tol_scale);
  double worst = 0.0;
  for (double p : {1.0, 2.0}) {
    for (const ScalarField* f : semigroup_fields(ctx, p == 1.0)) {
      ErrAcc acc;
      const double gp = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), p, acc, 1e-7);
      for (double t : heat_times(ctx)) {
        ErrAcc inner;
        const ScalarField h = difference_with_semigroup(ctx, *f, t);
        const double diff = lp_with_err(ctx, h, p, inner, 1e-6);
        const double ratio = diff / (std::sqrt(t) * gp);
        const std::string label = f->name + ":p=" + std::to_string(int(p)) +
                                  ":t=" + std::to_string(t);
        add_row(r, label, diff, std::sqrt(t) * gp, std::isfinite(ratio));
        if (ratio > worst) {
          worst = ratio;
          r.lhs = diff;
          r.rhs = std::sqrt(t) * gp;
          r.witness = label;
        }
      }
    }
  }
  r.ratio = worst;
  r.status = std::isfinite(worst) && worst < 1e6 ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = "max ratio " + std::to_string(worst) + " (constant not asserted)";
  return r;
}

CheckResult check_grad_semigroup(const Ctx& ctx) {
  const char* stmt = "|grad_k P_t f| <= sqrt(N) P_t |grad_k f| pointwise";
  if (!ctx.product)
    return skipped("GRAD_SEMIGROUP", stmt, "kernel checks require a product system");
  CheckResult r = make_result("GRAD_SEMIGROUP", stmt, 1e-6 * ctx.cfg.tol_scale);
  auto rng = check_rng(ctx, r.name);
  const int npts = ctx.rs.dimension == 1 ? 12 : 3;
  for (const ScalarField* f : semigroup_fields(ctx, false)) {
    const ScalarField gk = dunkl_gradient_field(ctx.rs, *f);
    for (double t : {0.1, 0.5}) {
      ScalarField ptf;
      const RootSystem* rsp = &ctx.rs;
      ScalarField base = *f;
      ptf.value = [rsp, base, t](const VectorXd& y) {
        return heat_apply(*rsp, base, t, y, 1e-9);
      };
      ptf.decay = Decay::Gaussian;
      ptf.decay_scale = (base.support_radius > 0 ? base.support_radius : base.decay_scale) +
                        std::sqrt(2.0 * t);
      for (int i = 0; i < npts; ++i) {
        const VectorXd x = sample_point(ctx, rng, 2.0);
        const double lhs = dunkl_gradient(ctx.rs, ptf, x).norm();
        const double rhs =
            std::sqrt(double(ctx.rs.dimension)) * heat_apply(ctx.rs, gk, t, x, 1e-8);
        const bool pass = lhs <= rhs * (1.0 + r.tolerance) + 1e-9;
        add_row(r, f->name + ":t=" + std::to_string(t), lhs, rhs, pass);
        track_worst(r, f->name, lhs, rhs);
        if (!pass) r.status = CheckStatus::Fail;
      }
    }
  }
  return r;
}

CheckResult check_reverse_poincare(const Ctx& ctx) {
  const char* stmt = "P_t(f^2) - (P_t f)^2 >= (2C/sqrt(N)) t |grad_k P_t f|^2";
  if (!ctx.product)
    return skipped("REVERSE_POINCARE", stmt, "kernel checks require a product system");
  CheckResult r = make_result("REVERSE_POINCARE", stmt, 1e-6 * ctx.cfg.tol_scale);
  const double C = ctx.constants.gamma_bound_constant;
  auto rng = check_rng(ctx, r.name);
  const int npts = ctx.rs.dimension == 1 ? 10 : 3;
  for (const ScalarField* f : semigroup_fields(ctx, false)) {
    const ScalarField f2 = squared_field(*f);
    for (double t : {0.1, 0.5}) {
      ScalarField ptf;
      const RootSystem* rsp = &ctx.rs;
      ScalarField base = *f;
      ptf.value = [rsp, base, t](const VectorXd& y) {
        return heat_apply(*rsp, base, t, y, 1e-9);
      };
      ptf.decay = Decay::Gaussian;
      ptf.decay_scale = (base.support_radius > 0 ? base.support_radius : base.decay_scale) +
                        std::sqrt(2.0 * t);
      for (int i = 0; i < npts; ++i) {
        const VectorXd x = sample_point(ctx, rng, 2.0);
        const double var =
            heat_apply(ctx.rs, f2, t, x, 1e-9) - std::pow(ptf.value(x), 2.0);
        const double lhs = (2.0 * C / std::sqrt(double(ctx.rs.dimension))) * t *
                           dunkl_gradient(ctx.rs, ptf, x).squaredNorm();
        const bool pass = lhs <= var + r.tolerance * std::max(var, 1.0) + 1e-9;
        add_row(r, f->name + ":t=" + std::to_string(t), lhs, var, pass);
        track_worst(r, f->name, lhs, var);
        if (!pass) r.status = CheckStatus::Fail;
      }
    }
  }
  return r;
}

CheckResult check_ultracontractive(const Ctx& ctx) {
  const char* stmt = "t^{d/2p} ||P_t f||_inf / ||f||_p bounded; exact contraction at p = inf";
  if (!ctx.rank1_product)
    return skipped("ULTRACONTRACTIVE", stmt,
                   "semigroup norm checks require a rank-1 product system");
  CheckResult r = make_result("ULTRACONTRACTIVE", stmt, 1e-6 * ctx.cfg.tol_scale);
  double worst_ratio = 0.0;
  for (const ScalarField* f : semigroup_fields(ctx, true)) {
    ErrAcc acc;
    const double n1 = lp_with_err(ctx, *f, 1.0, acc, 1e-7);
    const double n2 = lp_with_err(ctx, *f, 2.0, acc, 1e-7);
    const double ninf = sup_norm(ctx.rs, *f, WeightedDomain::full_space());
    for (double t : heat_times(ctx)) {
      const double pt_sup = semigroup_sup_norm(ctx.rs, *f, t, 1e-7);
      for (double p : {1.0, 2.0}) {
        const double denom = (p == 1.0 ? n1 : n2);
        const double ratio = std::pow(t, ctx.d / (2.0 * p)) * pt_sup / denom;
        worst_ratio = std::max(worst_ratio, ratio);
        add_row(r, f->name + ":p=" + std::to_string(int(p)) + ":t=" + std::to_string(t),
                ratio, 0.0, std::isfinite(ratio));
      }
      // p = infinity: exact contraction.
      const bool pass = pt_sup <= ninf * (1.0 + r.tolerance);
      add_row(r, f->name + ":p=inf:t=" + std::to_string(t), pt_sup, ninf, pass);
      if (!pass) r.status = CheckStatus::Fail;
      track_worst(r, f->name, pt_sup, ninf);
    }
  }
  if (!(std::isfinite(worst_ratio) && worst_ratio < 1e6)) r.status = CheckStatus::Fail;
  r.note = "max scaled ratio " + std::to_string(worst_ratio) + " (constant not asserted)";
  return r;
}

CheckResult check_weak_besov(const Ctx& ctx) {
  CheckResult r = make_result("WEAK_BESOV", "weak L^q norm dominated by the strong L^q norm",
                              1e-8 * ctx.cfg.tol_scale);
  std::vector<double> qs = {2.0};
  if (ctx.d > 2.0) qs.push_back(2.0 * ctx.d / (ctx.d - 2.0));
  for (double q : qs) {
    for (const ScalarField* f : integrable_fields(ctx, q)) {
      ErrAcc acc;
      const double strong = lp_with_err(ctx, *f, q, acc, 1e-7);
      const double m = sup_norm(ctx.rs, *f, WeightedDomain::full_space());
      const std::vector<double> levels =
          log_grid(1e-3 * m, m * 0.999,
                   std::max(5, ctx.cfg.level_points * ctx.cfg.refine_factor));
      const double weak =
          weak_lq_norm(ctx.rs, *f, q, levels, WeightedDomain::full_space());
      const bool pass = weak <= strong * (1.0 + r.tolerance) + 2.0 * acc.sum;
      add_row(r, f->name + ":q=" + std::to_string(q), weak, strong, pass);
      track_worst(r, f->name, weak, strong);
      if (!pass) r.status = CheckStatus::Fail;
    }
  }
  return r;
}

CheckResult check_besov_embed(const Ctx& ctx) {
  const char* stmt =
      "||f||_q bounded by ||grad_k f||_p^{p/q} ||f||_{B}^{1-p/q} (bounded ratio)";
  if (!ctx.rank1_product)
    return skipped("BESOV_EMBED", stmt,
                   "semigroup norm checks require a rank-1 product system");
  CheckResult r = make_result("BESOV_EMBED", stmt, 1e-6 * ctx.cfg.tol_scale);
  std::vector<std::pair<double, double>> pairs = {{1.0, 2.0}};
  if (ctx.d > 2.0) pairs.push_back({2.0, 2.0 * ctx.d / (ctx.d - 2.0)});
  const std::vector<double> t_grid =
      log_grid(1e-3, 1e3, std::max(9, 13 * ctx.cfg.refine_factor));
  double worst = 0.0;
  for (auto [p, q] : pairs) {
    const double s = p / (p - q);
    for (const ScalarField* f : semigroup_fields(ctx, p <= 1.0)) {
      if (!lp_integrable(*f, p, ctx.d) || !lp_integrable(*f, q, ctx.d)) continue;
      ErrAcc acc;
      const double nq = lp_with_err(ctx, *f, q, acc, 1e-7);
      const double gp = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), p, acc, 1e-7);
      const double bn = besov_norm(ctx.rs, *f, s, t_grid);
      const double denom = std::pow(gp, p / q) * std::pow(bn, 1.0 - p / q);
      const double ratio = nq / denom;
      worst = std::max(worst, ratio);
      add_row(r, f->name + ":p=" + std::to_string(p) + ":q=" + std::to_string(q), nq, denom,
              std::isfinite(ratio));
      track_worst(r, f->name, nq, denom);
    }
  }
  r.status = std::isfinite(worst) && worst < 1e6 ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = "max ratio " + std::to_string(worst) + " (constant not asserted)";
  return r;
}

CheckResult check_sobolev_general_p(const Ctx& ctx) {
  const char* stmt = "||f||_q bounded by ||grad_k f||_p for p in {1, 2} (bounded ratio)";
  if (!ctx.rank1_product)
    return skipped("SOBOLEV_GENERAL_P", stmt,
                   "semigroup norm checks require a rank-1 product system");
  CheckResult r = make_result("SOBOLEV_GENERAL_P", stmt, 1e-6 * ctx.cfg.tol_scale);
  double worst = 0.0;
  std::string informational;
  for (double p : {1.0, 2.0, 2.5}) {
    if (p >= ctx.d) continue;
    const double q = p * ctx.d / (ctx.d - p);
    for (const ScalarField* f : semigroup_fields(ctx, p <= 1.0)) {
      if (!lp_integrable(*f, q, ctx.d)) continue;
      ErrAcc acc;
      const double nq = lp_with_err(ctx, *f, q, acc, 1e-7);
      const double gp = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), p, acc, 1e-7);
      const double ratio = nq / gp;
      if (p > 2.0) {
        // The exponent range beyond 2 rests on an open question; recorded only.
        informational += f->name + ":p=2.5 ratio " + std::to_string(ratio) + "; ";
        continue;
      }
      worst = std::max(worst, ratio);
      add_row(r, f->name + ":p=" + std::to_string(p), nq, gp, std::isfinite(ratio));
      track_worst(r, f->name, nq, gp);
    }
  }
  r.status = std::isfinite(worst) && worst < 1e6 ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = "max ratio " + std::to_string(worst) +
           (informational.empty() ? "" : "; informational: " + informational);
  return r;
}

CheckResult check_gagliardo_nirenberg(const Ctx& ctx) {
  const char* stmt =
      "||f||_q bounded by ||grad_k f||_p^{p/q} ||f||_r^{1-p/q} (bounded ratio)";
  if (!ctx.rank1_product)
    return skipped("GAGLIARDO_NIRENBERG", stmt,
                   "semigroup norm checks require a rank-1 product system");
  CheckResult r = make_result("GAGLIARDO_NIRENBERG", stmt, 1e-6 * ctx.cfg.tol_scale);
  double worst = 0.0;
  for (auto [p, q] : std::vector<std::pair<double, double>>{{1.0, 2.0}, {2.0, 4.0}}) {
    const double rr = q * ctx.d * (1.0 / p - 1.0 / q);
    for (const ScalarField* f : semigroup_fields(ctx, p <= 1.0)) {
      if (!lp_integrable(*f, rr, ctx.d) || !lp_integrable(*f, q, ctx.d)) continue;
      ErrAcc acc;
      const double nq = lp_with_err(ctx, *f, q, acc, 1e-7);
      const double gp = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), p, acc, 1e-7);
      const double nr = lp_with_err(ctx, *f, rr, acc, 1e-7);
      const double denom = std::pow(gp, p / q) * std::pow(nr, 1.0 - p / q);
      const double ratio = nq / denom;
      worst = std::max(worst, ratio);
      add_row(r, f->name + ":p=" + std::to_string(p) + ":q=" + std::to_string(q), nq, denom,
              std::isfinite(ratio));
      track_worst(r, f->name, nq, denom);
    }
  }
  r.status = std::isfinite(worst) && worst < 1e6 ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = "max ratio " + std::to_string(worst) + " (constant not asserted)";
  return r;
}

CheckResult check_isoperimetric(const Ctx& ctx) {
  const char* stmt = "mu(Omega)^{1-1/d} <= C p(Omega) for seeded boxes in each chamber";
  if (ctx.rs.dimension > 2)
    return skipped("ISOPERIMETRIC", stmt, "perimeters are computed in dimensions 1 and 2");
  CheckResult r = make_result("ISOPERIMETRIC", stmt, 1e-8 * ctx.cfg.tol_scale);
  const double pe = ctx.constants.sphere_constant / group_order_for_constants(ctx.rs);
  const double mue = pe / ctx.d;  // chamber ball measure by homogeneity
  const double C = std::pow(mue, 1.0 - 1.0 / ctx.d) / pe;
  auto rng = check_rng(ctx, r.name);
  std::uniform_real_distribution<double> uu(0.0, 1.0);
  for (const Chamber& ch : ctx.chambers) {
    // Chamber ball: equality case.
    {
      ErrAcc acc;
      const WeightedDomain ball = WeightedDomain::chamber_ball(ch.sign, 1.0);
      const double mu = acc.add(integrate_weighted(
          ctx.rs, [](const VectorXd&) { return 1.0; }, ball, 1e-9));
      const double per = perimeter(ctx.rs, ball, 1e-9);
      const double lhs = std::pow(mu, 1.0 - 1.0 / ctx.d);
      const double rhs = C * per;
      const bool pass = std::abs(lhs - rhs) <= 1e-6 * rhs + 2.0 * acc.sum;
      add_row(r, "chamber_ball", lhs, rhs, pass);
      track_worst(r, "chamber_ball", lhs, rhs);
      if (!pass) r.status = CheckStatus::Fail;
    }
    for (int b = 0; b < 20; ++b) {
      VectorXd lo(ctx.rs.dimension), hi(ctx.rs.dimension);
      bool inside = false;
      for (int tries = 0; tries < 400 && !inside; ++tries) {
        const VectorXd center = ch.representative.normalized() * (0.4 + 1.6 * uu(rng));
        inside = true;
        for (int i = 0; i < ctx.rs.dimension; ++i) {
          const double h = 0.05 + 0.5 * uu(rng);
          lo[i] = center[i] - h;
          hi[i] = center[i] + h;
        }
        // All corners must stay inside the (closed) chamber.
        for (int corner = 0; corner < (1 << ctx.rs.dimension) && inside; ++corner) {
          VectorXd x(ctx.rs.dimension);
          for (int i = 0; i < ctx.rs.dimension; ++i)
            x[i] = (corner & (1 << i)) ? hi[i] : lo[i];
          for (int j = 0; j < ctx.rs.positive_roots.cols() && inside; ++j)
            if (ctx.rs.positive_roots.col(j).dot(x) * ch.sign.signs[j] < 0.0) inside = false;
        }
      }
      if (!inside) continue;
      ErrAcc acc;
      const WeightedDomain box = WeightedDomain::box(lo, hi);
      const double mu = acc.add(integrate_weighted(
          ctx.rs, [](const VectorXd&) { return 1.0; }, box, 1e-9));
      const double per = perimeter(ctx.rs, box, 1e-9);
      const double lhs = std::pow(mu, 1.0 - 1.0 / ctx.d);
      const double rhs = C * per;
      const bool pass = lhs <= rhs * (1.0 + r.tolerance) + 2.0 * acc.sum;
      add_row(r, "box" + std::to_string(b), lhs, rhs, pass);
      track_worst(r, "box" + std::to_string(b), lhs, rhs);
      if (!pass) r.status = CheckStatus::Fail;
    }
  }
  return r;
}

CheckResult check_iso_ratio(const Ctx& ctx) {
  const char* stmt = "perimeter/measure ratio of the unit chamber ball equals N + 2*gamma";
  if (ctx.rs.dimension > 2)
    return skipped("ISO_RATIO", stmt, "perimeters are computed in dimensions 1 and 2");
  CheckResult r = make_result("ISO_RATIO", stmt, 1e-6 * ctx.cfg.tol_scale);
  for (std::size_t c = 0; c < ctx.chambers.size(); ++c) {
    const WeightedDomain ball = WeightedDomain::chamber_ball(ctx.chambers[c].sign, 1.0);
    const double mu =
        integrate_weighted(ctx.rs, [](const VectorXd&) { return 1.0; }, ball, 1e-10).value;
    const double ratio = perimeter(ctx.rs, ball, 1e-10) / mu;
    const bool pass = std::abs(ratio - ctx.d) <= r.tolerance * ctx.d;
    add_row(r, "chamber" + std::to_string(c), ratio, ctx.d, pass);
    track_worst(r, "chamber" + std::to_string(c), ratio, ctx.d);
    if (!pass) r.status = CheckStatus::Fail;
  }
  return r;
}

CheckResult check_polya_szego(const Ctx& ctx) {
  const char* stmt = "rearrangement does not increase classical gradient L^p norms";
  if (ctx.rs.dimension > 2)
    return skipped("POLYA_SZEGO", stmt, "level-set masses are computed in dimensions 1 and 2");
  CheckResult r = make_result("POLYA_SZEGO", stmt, 1e-6 * ctx.cfg.tol_scale);
  const Chamber& ch = ctx.chambers.front();
  const auto fields = chamber_test_family(ctx.rs, ch, ctx.cfg.seed, 3);
  for (const ScalarField& f : fields) {
    const auto grid = default_level_grid(ctx.rs, f, 200 * ctx.cfg.refine_factor);
    const RadialProfile prof = decreasing_rearrangement(ctx.rs, f, ch.sign, grid);
    const double rend = profile_support_radius(prof, 2.0);
    for (double p : {1.5, 2.0, 3.0}) {
      ErrAcc acc;
      const double orig = chamber_lp_with_err(ctx, classical_gradient_field(f), p, ch.sign, acc);
      const double rear = profile_gradient_lp_norm(ctx.rs, prof, p, rend * 1.2);
      const bool pass = rear <= orig * (1.0 + r.tolerance) + 2.0 * acc.sum;
      add_row(r, f.name + ":p=" + std::to_string(p), rear, orig, pass);
      track_worst(r, f.name, rear, orig);
      if (!pass) r.status = CheckStatus::Fail;
    }
  }
  return r;
}

CheckResult check_chamber_sobolev(const Ctx& ctx) {
  const char* stmt = "sharp chamber Sobolev inequality with the classical gradient at p = 2";
  if (!(ctx.d > 2.0))
    return skipped("CHAMBER_SOBOLEV", stmt, "requires effective dimension > 2");
  CheckResult r = make_result("CHAMBER_SOBOLEV", stmt, 1e-6 * ctx.cfg.tol_scale);
  const double q = 2.0 * ctx.d / (ctx.d - 2.0);
  const double CW = weyl_constant(ctx.rs, 2.0);
  const Chamber& ch = ctx.chambers.front();
  const auto fields = chamber_test_family(ctx.rs, ch, ctx.cfg.seed, 3);
  for (const ScalarField& f : fields) {
    ErrAcc acc;
    const double nq = chamber_lp_with_err(ctx, f, q, ch.sign, acc);
    const double g2 = chamber_lp_with_err(ctx, classical_gradient_field(f), 2.0, ch.sign, acc);
    const double rhs = CW * g2;
    const bool pass = nq <= rhs * (1.0 + r.tolerance) + 2.0 * acc.sum;
    add_row(r, f.name, nq, rhs, pass);
    track_worst(r, f.name, nq, rhs);
    r.error_margin = std::max(r.error_margin, acc.sum);
    if (!pass) r.status = CheckStatus::Fail;
  }
  r.note = "C_W = " + std::to_string(CW);
  return r;
}

CheckResult check_sharpness_radial(const Ctx& ctx) {
  const char* stmt = "radial extremal attains the lower Sobolev bound; no radial field beats it";
  if (!(ctx.d > 2.0))
    return skipped("SHARPNESS_RADIAL", stmt, "requires effective dimension > 2");
  CheckResult r = make_result("SHARPNESS_RADIAL", stmt, 1e-4 * ctx.cfg.tol_scale);
  const double q = 2.0 * ctx.d / (ctx.d - 2.0);
  const double lower = ctx.constants.dunkl_lower;
  const ScalarField extremal = make_talenti_field(ctx.rs.dimension, 1.0, 1.0, 2.0, ctx.d);
  ErrAcc acc;
  const double nq = lp_with_err(ctx, extremal, q, acc, 1e-9);
  const double g2 = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, extremal), 2.0, acc, 1e-9);
  const double quotient = nq / g2;
  r.lhs = quotient;
  r.rhs = lower;
  r.ratio = quotient / lower;
  r.error_margin = acc.sum;
  r.witness = extremal.name;
  const bool attained = std::abs(quotient - lower) <= r.tolerance * lower + 2.0 * acc.sum;
  add_row(r, extremal.name, quotient, lower, attained);
  bool all_pass = attained;
  // Radial members of the family must stay below the radial supremum.
  for (const ScalarField& f : ctx.family) {
    if (f.name != "gaussian") continue;
    ErrAcc a2;
    const double fq = lp_with_err(ctx, f, q, a2, 1e-8);
    const double fg = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, f), 2.0, a2, 1e-8);
    const double qt = fq / fg;
    const bool pass = qt <= lower * (1.0 + r.tolerance) + 2.0 * a2.sum;
    add_row(r, f.name, qt, lower, pass);
    all_pass = all_pass && pass;
  }
  r.status = all_pass ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult check_constant_upper(const Ctx& ctx) {
  const char* stmt = "both Dunkl and classical gradient Sobolev quotients stay below C_CS";
  if (!(ctx.d > 2.0))
    return skipped("CONSTANT_UPPER", stmt, "requires effective dimension > 2");
  CheckResult r = make_result("CONSTANT_UPPER", stmt, 1e-6 * ctx.cfg.tol_scale);
  const double q = 2.0 * ctx.d / (ctx.d - 2.0);
  const double C = ctx.constants.classical_constant;
  std::string open_q;
  for (const ScalarField* f : integrable_fields(ctx, q)) {
    ErrAcc acc;
    const double nq = lp_with_err(ctx, *f, q, acc);
    const double gk = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), 2.0, acc);
    const double gc = lp_with_err(ctx, classical_gradient_field(*f), 2.0, acc);
    for (auto [label, g] : {std::pair<const char*, double>{"dunkl", gk}, {"classical", gc}}) {
      const double rhs = C * g;
      const bool pass = nq <= rhs * (1.0 + r.tolerance) + 2.0 * acc.sum;
      add_row(r, f->name + std::string(":") + label, nq, rhs, pass);
      track_worst(r, f->name + std::string(":") + label, nq, rhs);
      if (!pass) r.status = CheckStatus::Fail;
    }
    // Open question: classical vs Dunkl gradient norms for p != 2 (recorded;
    // fast-decay fields only — slow polynomial tails need enormous balls).
    if (f->decay == Decay::Polynomial) continue;
    ErrAcc a3;
    for (double p : {1.5, 3.0}) {
      if (!lp_integrable(dunkl_gradient_field(ctx.rs, *f), p, ctx.d)) continue;
      const double cg = lp_with_err(ctx, classical_gradient_field(*f), p, a3);
      const double dg = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, *f), p, a3);
      open_q += f->name + ":p=" + std::to_string(p) + " ratio " +
                std::to_string(cg / dg) + "; ";
    }
  }
  r.note = "C_CS = " + std::to_string(C) + "; gradient-comparison ratios (recorded): " + open_q;
  return r;
}

CheckResult check_conjecture_probe(const Ctx& ctx) {
  const char* stmt = "no seeded non-radial field exceeds the classical-constant ceiling";
  if (!(ctx.d > 2.0))
    return skipped("CONJECTURE_PROBE", stmt, "requires effective dimension > 2");
  CheckResult r = make_result("CONJECTURE_PROBE", stmt, 1e-6 * ctx.cfg.tol_scale);
  const double q = 2.0 * ctx.d / (ctx.d - 2.0);
  const double C = ctx.constants.classical_constant;
  double best = 0.0;
  std::string best_name;
  double best_err = 0.0;
  for (int i = 0; i < ctx.cfg.probe_fields; ++i) {
    const ScalarField f =
        make_gaussian_mixture(ctx.rs.dimension, ctx.cfg.seed * 1000003ull + i, 3);
    ErrAcc acc;
    const double nq = lp_with_err(ctx, f, q, acc, 1e-6);
    const double gk = lp_with_err(ctx, dunkl_gradient_field(ctx.rs, f), 2.0, acc, 1e-6);
    const double quotient = nq / gk;
    if (quotient > best) {
      best = quotient;
      best_name = f.name;
      best_err = acc.sum;
    }
  }
  r.lhs = best;
  r.rhs = C;
  r.ratio = best / C;
  r.witness = best_name;
  r.error_margin = best_err;
  r.status = best <= C * (1.0 + r.tolerance) + 2.0 * best_err ? CheckStatus::Pass
                                                              : CheckStatus::Fail;
  r.note = "max quotient over " + std::to_string(ctx.cfg.probe_fields) +
           " non-radial fields (radial-supremum conjecture not asserted)";
  add_row(r, best_name, best, C, r.status == CheckStatus::Pass);
  return r;
}

using CheckFn = CheckResult (*)(const Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"CDC_IDENTITY", check_cdc_identity},
      {"DIRICHLET_EQ", check_dirichlet_eq},
      {"GRAD_DOMINATION", check_grad_domination},
      {"MOD_INEQ", check_mod_ineq},
      {"GAMMA_LOWER", check_gamma_lower},
      {"NASH", check_nash},
      {"SOBOLEV_P2", check_sobolev_p2},
      {"PSEUDO_POINCARE", check_pseudo_poincare},
      {"GRAD_SEMIGROUP", check_grad_semigroup},
      {"REVERSE_POINCARE", check_reverse_poincare},
      {"ULTRACONTRACTIVE", check_ultracontractive},
      {"WEAK_BESOV", check_weak_besov},
      {"BESOV_EMBED", check_besov_embed},
      {"SOBOLEV_GENERAL_P", check_sobolev_general_p},
      {"GAGLIARDO_NIRENBERG", check_gagliardo_nirenberg},
      {"ISOPERIMETRIC", check_isoperimetric},
      {"ISO_RATIO", check_iso_ratio},
      {"POLYA_SZEGO", check_polya_szego},
      {"CHAMBER_SOBOLEV", check_chamber_sobolev},
      {"SHARPNESS_RADIAL", check_sharpness_radial},
      {"CONSTANT_UPPER", check_constant_upper},
      {"CONJECTURE_PROBE", check_conjecture_probe},
  };
  return reg;
}

Ctx make_ctx(const RootSystem& rs, const SuiteConfig& cfg) {
  Ctx ctx{rs, cfg, default_test_family(rs, cfg.seed, cfg.mixture_fields),
          enumerate_chambers(rs),
          constants_report(rs), rs.effective_dimension(), rs.is_product(), false};
  ctx.rank1_product = ctx.product && rs.dimension == 1;
  if (ctx.family.empty()) throw Error(ErrorCode::Validation, "empty test-field family");
  return ctx;
}

}  // namespace

bool Report::all_passed() const {
  for (const CheckResult& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

std::vector<std::string> check_registry() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

CheckResult run_check(const std::string& check_name, const RootSystem& rs,
                      const SuiteConfig& config) {
  for (const auto& [name, fn] : registry()) {
    if (name == check_name) {
      const Ctx ctx = make_ctx(rs, config);
      try {
        return fn(ctx);
      } catch (const Error& e) {
        CheckResult r = make_result(name, "", 0.0);
        r.status = CheckStatus::Fail;
        r.note = std::string("error: ") + e.what();
        return r;
      }
    }
  }
  throw Error(ErrorCode::UnknownCheck, "no such check: " + check_name);
}

Report run_suite(const RootSystem& rs, const SuiteConfig& config,
                 const std::vector<std::string>& names) {
  const auto start = std::chrono::steady_clock::now();
  const Ctx ctx = make_ctx(rs, config);
  std::vector<std::pair<std::string, CheckFn>> todo;
  if (names.empty()) {
    todo = registry();
  } else {
    for (const std::string& n : names) {
      bool found = false;
      for (const auto& entry : registry())
        if (entry.first == n) {
          todo.push_back(entry);
          found = true;
        }
      if (!found) throw Error(ErrorCode::UnknownCheck, "no such check: " + n);
    }
  }
  Report report;
  report.root_system = root_system_to_json(rs);
  report.constants = ctx.constants;
  report.seed = config.seed;
  report.include_timing = config.include_timing;
  report.results.resize(todo.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      try {
        report.results[i] = todo[i].second(ctx);
      } catch (const Error& e) {
        CheckResult r = make_result(todo[i].first, "", 0.0);
        r.status = CheckStatus::Fail;
        r.note = std::string("error: ") + e.what();
        report.results[i] = r;
      }
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::SkippedUnsupported:
      return "SKIPPED_UNSUPPORTED";
  }
  return "UNKNOWN";
}

nlohmann::json constants_to_json(const ConstantsReport& c) {
  return nlohmann::json{{"gamma", c.gamma},
                        {"effective_dimension", c.effective_dimension},
                        {"macdonald_mehta", c.macdonald_mehta},
                        {"sphere_constant", c.sphere_constant},
                        {"nash_constant", c.nash_constant},
                        {"sobolev_from_nash", c.sobolev_from_nash},
                        {"talenti_bound", c.talenti_bound},
                        {"weyl_constant", c.weyl_constant},
                        {"classical_constant", c.classical_constant},
                        {"dunkl_lower", c.dunkl_lower},
                        {"dunkl_upper", c.dunkl_upper},
                        {"gamma_bound_constant", c.gamma_bound_constant}};
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : report.results) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckRow& row : r.rows)
      rows.push_back({{"field", row.field},
                      {"lhs", row.lhs},
                      {"rhs", row.rhs},
                      {"ratio", row.ratio},
                      {"status", row.pass ? "PASS" : "FAIL"}});
    checks.push_back({{"name", r.name},
                      {"statement", r.statement},
                      {"status", check_status_name(r.status)},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"ratio", r.ratio},
                      {"tolerance", r.tolerance},
                      {"error_margin", r.error_margin},
                      {"witness", r.witness},
                      {"note", r.note},
                      {"rows", rows}});
  }
  nlohmann::json out{{"root_system", nlohmann::json::parse(report.root_system)},
                     {"constants", constants_to_json(report.constants)},
                     {"seed", report.seed},
                     {"checks", checks}};
  if (report.include_timing) out["wall_time_seconds"] = report.wall_time_seconds;
  return out;
}

std::string check_result_csv(const CheckResult& result) {
  std::string out = "field,lhs,rhs,ratio,status\n";
  char buf[256];
  for (const CheckRow& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g,%s\n", row.field.c_str(), row.lhs,
                  row.rhs, row.ratio, row.pass ? "PASS" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace dunkl
