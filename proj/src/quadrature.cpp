#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

using Eigen::VectorXd;

struct GLRule {
  const double* nodes;
  const double* weights;
  int n;
};

// Gauss-Legendre nodes/weights on [-1, 1].
const double kNodes20[] = {
    -0.99312859918509492, -0.96397192727791379, -0.91223442825132591,
    -0.83911697182221882, -0.74633190646015079, -0.63605368072651503,
    -0.51086700195082710, -0.37370608871541956, -0.22778585114164508,
    -0.07652652113349733,  0.07652652113349733,  0.22778585114164508,
     0.37370608871541956,  0.51086700195082710,  0.63605368072651503,
     0.74633190646015079,  0.83911697182221882,  0.91223442825132591,
     0.96397192727791379,  0.99312859918509492};
const double kWeights20[] = {
    0.017614007139152118, 0.040601429800386941, 0.062672048334109064,
    0.083276741576704749, 0.101930119817240440, 0.118194531961518420,
    0.131688638449176630, 0.142096109318382050, 0.149172986472603750,
    0.152753387130725850, 0.152753387130725850, 0.149172986472603750,
    0.142096109318382050, 0.131688638449176630, 0.118194531961518420,
    0.101930119817240440, 0.083276741576704749, 0.062672048334109064,
    0.040601429800386941, 0.017614007139152118};

const double kNodes14[] = {
    -0.98628380869681234, -0.92843488366357352, -0.82720131506976499,
    -0.68729290481168547, -0.51524863635815409, -0.31911236892788976,
    -0.10805494870734366,  0.10805494870734366,  0.31911236892788976,
     0.51524863635815409,  0.68729290481168547,  0.82720131506976499,
     0.92843488366357352,  0.98628380869681234};
const double kWeights14[] = {
    0.035119460331751863, 0.080158087159760210, 0.121518570687903180,
    0.157203167158193530, 0.185538397477937810, 0.205198463721295600,
    0.215263853463157790, 0.215263853463157790, 0.205198463721295600,
    0.185538397477937810, 0.157203167158193530, 0.121518570687903180,
    0.080158087159760210, 0.035119460331751863};

const double kNodes8[] = {
    -0.96028985649753623, -0.79666647741362674, -0.52553240991632899,
    -0.18343464249564980,  0.18343464249564980,  0.52553240991632899,
     0.79666647741362674,  0.96028985649753623};
const double kWeights8[] = {
    0.10122853629037626, 0.22238103445337447, 0.31370664587788729,
    0.36268378337836198, 0.36268378337836198, 0.31370664587788729,
    0.22238103445337447, 0.10122853629037626};

const GLRule kRule20{kNodes20, kWeights20, 20};
const GLRule kRule14{kNodes14, kWeights14, 14};
const GLRule kRule8{kNodes8, kWeights8, 8};

constexpr long kEvalBudget = 40 * 1000 * 1000;
constexpr int kMaxDepth1d = 48;
constexpr int kMaxDepth2d = 24;

struct Budget {
  long remaining = kEvalBudget;
  void charge(long n) {
    remaining -= n;
    if (remaining < 0)
      throw Error(ErrorCode::NoConvergence,
                  "quadrature evaluation budget exhausted before reaching tolerance");
  }
};

double gl_interval(const std::function<double(double)>& g, double a, double b,
                   const GLRule& rule) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double s = 0.0;
  for (int i = 0; i < rule.n; ++i) s += rule.weights[i] * g(mid + half * rule.nodes[i]);
  return s * half;
}

double adapt_1d(const std::function<double(double)>& g, double a, double b, double whole,
                double tol, int depth, Budget& budget, double& err, long& cells,
                std::vector<CellRecord>* records) {
  budget.charge(40);
  const double mid = 0.5 * (a + b);
  const double left = gl_interval(g, a, mid, kRule20);
  const double right = gl_interval(g, mid, b, kRule20);
  const double diff = left + right - whole;
  if (std::abs(diff) <= tol || depth >= kMaxDepth1d) {
    err += std::abs(diff);
    ++cells;
    if (records) {
      CellRecord rec;
      rec.lo = VectorXd::Constant(1, a);
      rec.hi = VectorXd::Constant(1, b);
      rec.contribution = left + right;
      records->push_back(rec);
    }
    return left + right;
  }
  return adapt_1d(g, a, mid, left, 0.5 * tol, depth + 1, budget, err, cells, records) +
         adapt_1d(g, mid, b, right, 0.5 * tol, depth + 1, budget, err, cells, records);
}

// --- 2-D adaptive tensor rule on a rectangle ------------------------------

using Fn2 = std::function<double(double, double)>;

double gl_rect(const Fn2& g, double ax, double bx, double ay, double by, const GLRule& rule) {
  const double hx = 0.5 * (bx - ax), mx = 0.5 * (ax + bx);
  const double hy = 0.5 * (by - ay), my = 0.5 * (ay + by);
  double s = 0.0;
  for (int i = 0; i < rule.n; ++i) {
    const double x = mx + hx * rule.nodes[i];
    double row = 0.0;
    for (int j = 0; j < rule.n; ++j)
      row += rule.weights[j] * g(x, my + hy * rule.nodes[j]);
    s += rule.weights[i] * row;
  }
  return s * hx * hy;
}

double adapt_2d(const Fn2& g, double ax, double bx, double ay, double by, double whole,
                double tol, int depth, Budget& budget, double& err, long& cells,
                std::vector<CellRecord>* records) {
  budget.charge(4 * 14 * 14);
  const double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
  double child[4];
  child[0] = gl_rect(g, ax, mx, ay, my, kRule14);
  child[1] = gl_rect(g, mx, bx, ay, my, kRule14);
  child[2] = gl_rect(g, ax, mx, my, by, kRule14);
  child[3] = gl_rect(g, mx, bx, my, by, kRule14);
  const double sum = child[0] + child[1] + child[2] + child[3];
  const double diff = sum - whole;
  if (std::abs(diff) <= tol || depth >= kMaxDepth2d) {
    err += std::abs(diff);
    ++cells;
    if (records) {
      CellRecord rec;
      rec.lo = VectorXd::Constant(2, 0.0);
      rec.hi = VectorXd::Constant(2, 0.0);
      rec.lo << ax, ay;
      rec.hi << bx, by;
      rec.contribution = sum;
      records->push_back(rec);
    }
    return sum;
  }
  double out = 0.0;
  const double ct = 0.25 * tol;
  out += adapt_2d(g, ax, mx, ay, my, child[0], ct, depth + 1, budget, err, cells, records);
  out += adapt_2d(g, mx, bx, ay, my, child[1], ct, depth + 1, budget, err, cells, records);
  out += adapt_2d(g, ax, mx, my, by, child[2], ct, depth + 1, budget, err, cells, records);
  out += adapt_2d(g, mx, bx, my, by, child[3], ct, depth + 1, budget, err, cells, records);
  return out;
}

// --- N-D adaptive tensor rule on a box (N >= 3) ---------------------------

struct BoxCell {
  VectorXd lo, hi;
};

double gl_box(const PointFunction& g, const BoxCell& cell, const GLRule& rule) {
  const int n = static_cast<int>(cell.lo.size());
  const VectorXd half = 0.5 * (cell.hi - cell.lo);
  const VectorXd mid = 0.5 * (cell.hi + cell.lo);
  std::vector<int> idx(n, 0);
  VectorXd x(n);
  double s = 0.0;
  for (;;) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      x[i] = mid[i] + half[i] * rule.nodes[idx[i]];
      w *= rule.weights[idx[i]];
    }
    s += w * g(x);
    int i = 0;
    while (i < n && ++idx[i] == rule.n) idx[i++] = 0;
    if (i == n) break;
  }
  return s * half.prod();
}

double adapt_box(const PointFunction& g, const BoxCell& cell, double whole, double tol,
                 int depth, Budget& budget, double& err, long& cells,
                 std::vector<CellRecord>* records, const GLRule& rule) {
  const int n = static_cast<int>(cell.lo.size());
  const int nchild = 1 << n;
  budget.charge(static_cast<long>(nchild) * std::lround(std::pow(rule.n, n)));
  const VectorXd mid = 0.5 * (cell.lo + cell.hi);
  std::vector<BoxCell> children(nchild);
  std::vector<double> vals(nchild);
  double sum = 0.0;
  for (int c = 0; c < nchild; ++c) {
    BoxCell& ch = children[c];
    ch.lo = cell.lo;
    ch.hi = cell.hi;
    for (int i = 0; i < n; ++i) {
      if (c & (1 << i))
        ch.lo[i] = mid[i];
      else
        ch.hi[i] = mid[i];
    }
    vals[c] = gl_box(g, ch, rule);
    sum += vals[c];
  }
  const double diff = sum - whole;
  if (std::abs(diff) <= tol || depth >= 14) {
    err += std::abs(diff);
    ++cells;
    if (records) records->push_back({cell.lo, cell.hi, sum});
    return sum;
  }
  double out = 0.0;
  const double ct = tol / nchild;
  for (int c = 0; c < nchild; ++c)
    out += adapt_box(g, children[c], vals[c], ct, depth + 1, budget, err, cells, records, rule);
  return out;
}

// --- geometry helpers ------------------------------------------------------

// Splits an interval at 0 when 0 lies strictly inside (the weight has a kink
// on every wall through the origin).
std::vector<std::pair<double, double>> split_at_zero(double a, double b) {
  if (a < 0.0 && 0.0 < b) return {{a, 0.0}, {0.0, b}};
  return {{a, b}};
}

// Angles in [0, 2*pi) at which a wall of the rank-2 system crosses the unit
// circle, sorted; the circle arcs between consecutive angles are the chambers.
std::vector<double> wall_angles(const RootSystem& rs) {
  const double two_pi = 2.0 * M_PI;
  std::vector<double> angles;
  for (int j = 0; j < rs.positive_roots.cols(); ++j) {
    const double ax = rs.positive_roots(0, j), ay = rs.positive_roots(1, j);
    // <alpha, (cos p, sin p)> = 0  =>  p = atan2(ax, -ay) (mod pi)
    double p = std::atan2(ax, -ay);
    p = std::fmod(p, M_PI);
    if (p < 0.0) p += M_PI;
    angles.push_back(p);
    angles.push_back(p + M_PI);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               angles.end());
  if (!angles.empty() && angles.front() < 1e-12 && two_pi - angles.back() < 1e-12)
    angles.pop_back();
  if (angles.empty()) angles = {0.0};
  return angles;
}

std::vector<std::pair<double, double>> circle_arcs(const RootSystem& rs) {
  const std::vector<double> angles = wall_angles(rs);
  std::vector<std::pair<double, double>> arcs;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double a = angles[i];
    const double b = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2.0 * M_PI;
    arcs.push_back({a, b});
  }
  return arcs;
}

bool arc_in_chamber(const RootSystem& rs, double phi_mid, const ChamberSign& sign) {
  VectorXd x(2);
  x << std::cos(phi_mid), std::sin(phi_mid);
  const ChamberSign s = chamber_sign(rs, x);
  return s.signs == sign.signs;
}

std::vector<std::pair<double, double>> select_arcs(const RootSystem& rs,
                                                   const WeightedDomain& domain) {
  std::vector<std::pair<double, double>> arcs = circle_arcs(rs);
  if (domain.kind == DomainKind::ChamberBall || domain.kind == DomainKind::Chamber) {
    std::vector<std::pair<double, double>> keep;
    for (const auto& arc : arcs)
      if (arc_in_chamber(rs, 0.5 * (arc.first + arc.second), domain.chamber)) keep.push_back(arc);
    if (keep.empty())
      throw Error(ErrorCode::Validation, "chamber sign pattern matches no chamber");
    return keep;
  }
  return arcs;
}

// 1-D section of a 1-D domain: list of (a, b) intervals, already split at 0.
std::vector<std::pair<double, double>> intervals_1d(const WeightedDomain& domain) {
  switch (domain.kind) {
    case DomainKind::Ball:
      return split_at_zero(-domain.radius, domain.radius);
    case DomainKind::Box:
      return split_at_zero(domain.lo[0], domain.hi[0]);
    case DomainKind::ChamberBall: {
      if (domain.chamber.signs.size() < 1)
        throw Error(ErrorCode::Validation, "chamber ball without a sign pattern");
      if (domain.chamber.signs[0] > 0) return {{0.0, domain.radius}};
      return {{-domain.radius, 0.0}};
    }
    default:
      throw Error(ErrorCode::UnboundedDomain,
                  "direct integration requires a bounded domain; use the field-aware wrapper");
  }
}

struct Part1d {
  double a, b;
  std::function<double(double)> g;
};

// Long intervals go through the substitution x = +-(e^u - 1) so that slowly
// decaying tails need only logarithmically many subdivisions.  The zero-split
// guarantees each part lies on one side of the origin.
std::vector<Part1d> prepare_parts(const std::vector<std::pair<double, double>>& intervals,
                                  const std::function<double(double)>& integrand) {
  std::vector<Part1d> parts;
  for (const auto& [a, b] : intervals) {
    if (b - a <= 64.0) {
      parts.push_back({a, b, integrand});
    } else if (a >= 0.0) {
      parts.push_back({std::log1p(a), std::log1p(b), [integrand](double u) {
                         const double eu = std::exp(u);
                         return integrand(eu - 1.0) * eu;
                       }});
    } else {
      parts.push_back({std::log1p(-b), std::log1p(-a), [integrand](double u) {
                         const double eu = std::exp(u);
                         return integrand(1.0 - eu) * eu;
                       }});
    }
  }
  return parts;
}

IntegralResult integrate_1d_domain(const RootSystem& rs, const PointFunction& g,
                                   const WeightedDomain& domain, double tolerance,
                                   std::vector<CellRecord>* cells) {
  auto integrand = [&](double x) {
    VectorXd v(1);
    v << x;
    return g(v) * weight(rs, v);
  };
  const auto parts = prepare_parts(intervals_1d(domain), integrand);
  Budget budget;
  double scale = 0.0;
  for (const auto& p : parts)
    scale += gl_interval([&](double x) { return std::abs(p.g(x)); }, p.a, p.b, kRule20);
  const double tol_abs = tolerance * std::max(scale, 1e-16);
  IntegralResult out;
  for (const auto& p : parts) {
    const double whole = gl_interval(p.g, p.a, p.b, kRule20);
    out.value += adapt_1d(p.g, p.a, p.b, whole, tol_abs / static_cast<double>(parts.size()), 0,
                          budget, out.error_estimate, out.cells_used, cells);
  }
  return out;
}

// Radius beyond which |f| stays below the given level (for level-set and
// supremum truncation; amplitudes are assumed O(1)).
double level_truncation_radius(const ScalarField& field, double level) {
  if (field.support_radius > 0.0) return field.support_radius;
  const double t = std::max(level, 1e-300);
  switch (field.decay) {
    case Decay::Gaussian: {
      const double sigma = field.decay_scale > 0.0 ? field.decay_scale : 1.0;
      return field.decay_shift + sigma * (std::sqrt(2.0 * std::log(4.0 / t)) + 3.0) + 1.0;
    }
    case Decay::Polynomial: {
      const double rate = std::max(field.decay_rate, 1e-12);
      return field.decay_shift + 2.0 * std::pow(4.0 / t, 1.0 / rate) + 1.0;
    }
    case Decay::None:
      throw Error(ErrorCode::UnboundedField,
                  "field has unbounded support and no decay declaration");
  }
  throw Error(ErrorCode::UnboundedField, "unreachable decay state");
}

IntegralResult integrate_polar_2d(const RootSystem& rs, const PointFunction& g,
                                  const WeightedDomain& domain, double tolerance,
                                  std::vector<CellRecord>* cells) {
  const auto arcs = select_arcs(rs, domain);
  const double R = domain.radius;
  auto integrand = [&](double r, double phi) {
    VectorXd x(2);
    x << r * std::cos(phi), r * std::sin(phi);
    return g(x) * weight(rs, x) * r;
  };
  // For large radii, integrate the outer region in u = log r so that slowly
  // decaying (power-law) tails become exponentially small and the adaptive
  // bisection only needs depth proportional to the number of decades.
  const double r_split = (R > 16.0) ? 4.0 : R;
  auto log_integrand = [&](double u, double phi) {
    const double r = std::exp(u);
    return integrand(r, phi) * r;
  };
  Budget budget;
  double scale = 0.0;
  for (const auto& arc : arcs) {
    scale += gl_rect([&](double r, double phi) { return std::abs(integrand(r, phi)); }, 0.0,
                     r_split, arc.first, arc.second, kRule14);
    if (r_split < R)
      scale += gl_rect([&](double u, double phi) { return std::abs(log_integrand(u, phi)); },
                       std::log(r_split), std::log(R), arc.first, arc.second, kRule14);
  }
  const double tol_abs = tolerance * std::max(scale, 1e-16);
  const double piece_tol =
      tol_abs / static_cast<double>(arcs.size() * (r_split < R ? 2 : 1));
  IntegralResult out;
  for (const auto& arc : arcs) {
    const double whole = gl_rect(integrand, 0.0, r_split, arc.first, arc.second, kRule14);
    out.value += adapt_2d(integrand, 0.0, r_split, arc.first, arc.second, whole, piece_tol, 0,
                          budget, out.error_estimate, out.cells_used, cells);
    if (r_split < R) {
      const double ua = std::log(r_split), ub = std::log(R);
      const double tail = gl_rect(log_integrand, ua, ub, arc.first, arc.second, kRule14);
      out.value += adapt_2d(log_integrand, ua, ub, arc.first, arc.second, tail, piece_tol, 0,
                            budget, out.error_estimate, out.cells_used, cells);
    }
  }
  return out;
}

IntegralResult integrate_box(const RootSystem& rs, const PointFunction& g,
                             const WeightedDomain& domain, double tolerance,
                             std::vector<CellRecord>* cells) {
  const int n = static_cast<int>(domain.lo.size());
  if (n != rs.dimension)
    throw Error(ErrorCode::Validation, "box bounds do not match the system dimension");
  auto integrand = [&](const VectorXd& x) { return g(x) * weight(rs, x); };
  // Seed the cell list with the box split along every coordinate hyperplane
  // that passes through it; for product systems those are exactly the walls.
  std::vector<BoxCell> seeds{{domain.lo, domain.hi}};
  for (int i = 0; i < n; ++i) {
    std::vector<BoxCell> next;
    for (const BoxCell& c : seeds) {
      if (c.lo[i] < 0.0 && 0.0 < c.hi[i]) {
        BoxCell a = c, b = c;
        a.hi[i] = 0.0;
        b.lo[i] = 0.0;
        next.push_back(a);
        next.push_back(b);
      } else {
        next.push_back(c);
      }
    }
    seeds = std::move(next);
  }
  const GLRule& rule = (n == 1) ? kRule20 : (n == 2) ? kRule14 : kRule8;
  Budget budget;
  double scale = 0.0;
  for (const BoxCell& c : seeds)
    scale += gl_box([&](const VectorXd& x) { return std::abs(integrand(x)); }, c, rule);
  const double tol_abs = tolerance * std::max(scale, 1e-16);
  IntegralResult out;
  for (const BoxCell& c : seeds) {
    const double whole = gl_box(integrand, c, rule);
    out.value += adapt_box(integrand, c, whole, tol_abs / static_cast<double>(seeds.size()), 0,
                           budget, out.error_estimate, out.cells_used, cells, rule);
  }
  return out;
}

// One-dimensional systems have a single positive root (norm sqrt(2)), so the
// weight has the closed-form antiderivative used by the level-set machinery.
double weight_antiderivative_1d(const RootSystem& rs, double x) {
  if (rs.positive_roots.cols() == 0) return x;
  const double k = rs.multiplicity[0];
  if (k == 0.0) return x;
  // w(x) = |sqrt(2) x|^{2k}
  const double c = std::pow(2.0, k) / (2.0 * k + 1.0);
  return (x >= 0.0 ? 1.0 : -1.0) * c * std::pow(std::abs(x), 2.0 * k + 1.0);
}

double weight_mass_1d(const RootSystem& rs, double a, double b) {
  return weight_antiderivative_1d(rs, b) - weight_antiderivative_1d(rs, a);
}

// Crossing radii of |f| = level along a 1-D section, given presampled values.
// `eval` maps the section parameter to |f|; samples holds eval at uniform
// points including both ends.
std::vector<double> section_crossings(const std::function<double(double)>& eval, double a,
                                      double b, const std::vector<double>& samples,
                                      double level) {
  const int n = static_cast<int>(samples.size()) - 1;
  const double h = (b - a) / n;
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const bool lo_above = samples[i] > level;
    const bool hi_above = samples[i + 1] > level;
    if (lo_above == hi_above) continue;
    double x0 = a + i * h, x1 = x0 + h;
    double f0 = samples[i];
    for (int it = 0; it < 60 && x1 - x0 > 1e-14 * (1.0 + std::abs(x0)); ++it) {
      const double xm = 0.5 * (x0 + x1);
      const double fm = eval(xm);
      if ((f0 > level) == (fm > level)) {
        x0 = xm;
        f0 = fm;
      } else {
        x1 = xm;
      }
    }
    out.push_back(0.5 * (x0 + x1));
  }
  return out;
}

// Sub-segments of [a, b] where samples exceed the level, refined by bisection.
std::vector<std::pair<double, double>> super_level_segments(
    const std::function<double(double)>& eval, double a, double b,
    const std::vector<double>& samples, double level) {
  std::vector<double> cuts = section_crossings(eval, a, b, samples, level);
  cuts.insert(cuts.begin(), a);
  cuts.push_back(b);
  std::vector<std::pair<double, double>> segs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    if (eval(mid) > level) segs.push_back({cuts[i], cuts[i + 1]});
  }
  return segs;
}

WeightedDomain truncated_domain(const RootSystem& rs, const ScalarField& field,
                                const WeightedDomain& domain, double decay_power,
                                double tolerance) {
  if (domain.kind != DomainKind::FullSpace && domain.kind != DomainKind::Chamber) return domain;
  const double R =
      truncation_radius(field, decay_power, tolerance, rs.effective_dimension());
  if (domain.kind == DomainKind::Chamber) return WeightedDomain::chamber_ball(domain.chamber, R);
  if (rs.dimension <= 2) return WeightedDomain::ball(R);
  if (rs.is_product() || rs.trivial_multiplicity())
    return WeightedDomain::box(VectorXd::Constant(rs.dimension, -R),
                               VectorXd::Constant(rs.dimension, R));
  throw Error(ErrorCode::UnsupportedShape,
              "full-space integration is limited to rank <= 2 or product systems");
}

}  // namespace

// --- WeightedDomain constructors -------------------------------------------

WeightedDomain WeightedDomain::full_space() { return WeightedDomain{}; }

WeightedDomain WeightedDomain::ball(double radius) {
  WeightedDomain d;
  d.kind = DomainKind::Ball;
  d.radius = radius;
  return d;
}

WeightedDomain WeightedDomain::box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  if (lo.size() != hi.size() || ((hi - lo).array() <= 0.0).any())
    throw Error(ErrorCode::Validation, "box bounds must satisfy lo < hi componentwise");
  WeightedDomain d;
  d.kind = DomainKind::Box;
  d.lo = lo;
  d.hi = hi;
  return d;
}

WeightedDomain WeightedDomain::chamber_ball(const ChamberSign& sign, double radius) {
  WeightedDomain d;
  d.kind = DomainKind::ChamberBall;
  d.radius = radius;
  d.chamber = sign;
  d.has_chamber = true;
  return d;
}

WeightedDomain WeightedDomain::full_chamber(const ChamberSign& sign) {
  WeightedDomain d;
  d.kind = DomainKind::Chamber;
  d.chamber = sign;
  d.has_chamber = true;
  return d;
}

// --- public API -------------------------------------------------------------

IntegralResult integrate_weighted(const RootSystem& rs, const PointFunction& g,
                                  const WeightedDomain& domain, double tolerance,
                                  std::vector<CellRecord>* cells) {
  if (domain.kind == DomainKind::FullSpace || domain.kind == DomainKind::Chamber)
    throw Error(ErrorCode::UnboundedDomain,
                "unbounded domain: integrate_field supplies a truncation radius");
  if (rs.dimension == 1) return integrate_1d_domain(rs, g, domain, tolerance, cells);
  if (domain.kind == DomainKind::Box) return integrate_box(rs, g, domain, tolerance, cells);
  if (rs.dimension == 2) return integrate_polar_2d(rs, g, domain, tolerance, cells);
  throw Error(ErrorCode::UnsupportedShape,
              "ball domains are supported in dimensions 1 and 2 only; use a box");
}

IntegralResult integrate_field(const RootSystem& rs, const ScalarField& field,
                               const PointFunction& g, const WeightedDomain& domain,
                               double tolerance, double decay_power,
                               std::vector<CellRecord>* cells) {
  const WeightedDomain bounded =
      truncated_domain(rs, field, domain, decay_power, 0.01 * tolerance);
  return integrate_weighted(rs, g, bounded, tolerance, cells);
}

double truncation_radius(const ScalarField& field, double decay_power, double tolerance,
                         double effective_dim) {
  if (field.support_radius > 0.0) return field.support_radius;
  const double p = std::max(decay_power, 1e-12);
  switch (field.decay) {
    case Decay::Gaussian: {
      const double sigma = field.decay_scale > 0.0 ? field.decay_scale : 1.0;
      const double tail = std::sqrt(2.0 * std::log(1.0 / std::max(tolerance, 1e-300)) / p);
      return field.decay_shift + sigma * (tail + 3.0) + 2.0;
    }
    case Decay::Polynomial: {
      const double drop = p * field.decay_rate - effective_dim;
      if (drop <= 0.05)
        throw Error(ErrorCode::DivergentIntegral,
                    "declared polynomial decay is too slow for a convergent integral");
      const double R = std::pow(1.0 / (std::max(tolerance, 1e-300) * drop), 1.0 / drop);
      return std::max(10.0, 2.0 * R) + field.decay_shift;
    }
    case Decay::None:
      throw Error(ErrorCode::UnboundedField,
                  "field has unbounded support and no decay declaration");
  }
  throw Error(ErrorCode::UnboundedField, "unreachable decay state");
}

double lp_norm(const RootSystem& rs, const ScalarField& field, double p,
               const WeightedDomain& domain, double tolerance) {
  if (std::isinf(p)) return sup_norm(rs, field, domain);
  if (p <= 0.0) throw Error(ErrorCode::ParameterRange, "Lp norm requires p > 0");
  auto g = [&](const VectorXd& x) { return std::pow(std::abs(field.value(x)), p); };
  const IntegralResult r = integrate_field(rs, field, g, domain, tolerance, p);
  return std::pow(std::max(r.value, 0.0), 1.0 / p);
}

double sup_norm(const RootSystem& rs, const ScalarField& field, const WeightedDomain& domain) {
  WeightedDomain bounded = domain;
  if (domain.kind == DomainKind::FullSpace || domain.kind == DomainKind::Chamber) {
    // A decaying field attains its supremum within a few decay lengths.
    double R = field.support_radius;
    if (R <= 0.0) {
      if (field.decay == Decay::None)
        throw Error(ErrorCode::UnboundedField,
                    "field has unbounded support and no decay declaration");
      R = field.decay_shift + 6.0 * std::max(field.decay_scale, 1.0) + 6.0;
    }
    bounded = (domain.kind == DomainKind::Chamber)
                  ? WeightedDomain::chamber_ball(domain.chamber, R)
                  : WeightedDomain::ball(R);
  }
  auto in_domain = [&](const VectorXd& x) -> bool {
    switch (bounded.kind) {
      case DomainKind::Ball:
        return x.norm() <= bounded.radius;
      case DomainKind::Box:
        return (x.array() >= bounded.lo.array()).all() && (x.array() <= bounded.hi.array()).all();
      case DomainKind::ChamberBall: {
        if (x.norm() > bounded.radius) return false;
        for (int j = 0; j < rs.positive_roots.cols(); ++j) {
          const double ip = rs.positive_roots.col(j).dot(x);
          if (ip * bounded.chamber.signs[j] < 0.0) return false;
        }
        return true;
      }
      default:
        return false;
    }
  };
  double lo = -1.0, hi = 1.0;
  if (bounded.kind == DomainKind::Box) {
    lo = bounded.lo.minCoeff();
    hi = bounded.hi.maxCoeff();
  } else {
    lo = -bounded.radius;
    hi = bounded.radius;
  }
  const int n = rs.dimension;
  double best = 0.0;
  VectorXd best_x = VectorXd::Zero(n);
  const int grid = (n == 1) ? 4097 : (n == 2) ? 257 : 33;
  std::vector<int> idx(n, 0);
  VectorXd x(n);
  for (;;) {
    for (int i = 0; i < n; ++i) x[i] = lo + (hi - lo) * idx[i] / double(grid - 1);
    if (in_domain(x)) {
      const double v = std::abs(field.value(x));
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    int i = 0;
    while (i < n && ++idx[i] == grid) idx[i++] = 0;
    if (i == n) break;
  }
  // Local pattern search around the best grid point.
  double step = (hi - lo) / (grid - 1);
  for (int round = 0; round < 60; ++round) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      for (double s : {-step, step}) {
        VectorXd y = best_x;
        y[i] += s;
        if (!in_domain(y)) continue;
        const double v = std::abs(field.value(y));
        if (v > best) {
          best = v;
          best_x = y;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
    if (step < 1e-12 * (1.0 + best_x.norm())) break;
  }
  return best;
}

std::vector<double> distribution_masses(const RootSystem& rs, const ScalarField& field,
                                        const std::vector<double>& levels,
                                        const WeightedDomain& domain) {
  double min_level = std::numeric_limits<double>::infinity();
  for (double t : levels) {
    if (t <= 0.0) throw Error(ErrorCode::ParameterRange, "level-set levels must be positive");
    min_level = std::min(min_level, t);
  }
  WeightedDomain bounded = domain;
  if (domain.kind == DomainKind::FullSpace || domain.kind == DomainKind::Chamber) {
    const double R = level_truncation_radius(field, min_level);
    bounded = (domain.kind == DomainKind::Chamber)
                  ? WeightedDomain::chamber_ball(domain.chamber, R)
                  : WeightedDomain::ball(R);
  }
  std::vector<double> masses(levels.size(), 0.0);

  if (rs.dimension == 1) {
    const auto parts = intervals_1d(bounded);
    for (const auto& part : parts) {
      auto eval = [&](double x) {
        VectorXd v(1);
        v << x;
        return std::abs(field.value(v));
      };
      const int n = 4096;
      std::vector<double> samples(n + 1);
      for (int i = 0; i <= n; ++i)
        samples[i] = eval(part.first + (part.second - part.first) * i / n);
      for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto segs =
            super_level_segments(eval, part.first, part.second, samples, levels[li]);
        for (const auto& s : segs) masses[li] += weight_mass_1d(rs, s.first, s.second);
      }
    }
    return masses;
  }

  if (rs.dimension != 2)
    throw Error(ErrorCode::UnsupportedShape,
                "level-set masses are supported in dimensions 1 and 2 only");
  if (bounded.kind == DomainKind::Box)
    throw Error(ErrorCode::UnsupportedShape, "level-set masses on boxes are not supported");

  // Polar reduction: for each angular node, the radial superlevel segments are
  // found by scanning + bisection, and the radial weight integral is exact by
  // homogeneity: int w(r theta) r dr = w(theta) r^d / d.
  const auto arcs = select_arcs(rs, bounded);
  const double R = bounded.radius;
  const double d = rs.effective_dimension();
  const int phi_cells = 48;
  const int rad_samples = 512;
  for (const auto& arc : arcs) {
    const double h = (arc.second - arc.first) / phi_cells;
    for (int c = 0; c < phi_cells; ++c) {
      const double pa = arc.first + c * h;
      for (int q = 0; q < kRule8.n; ++q) {
        const double phi = pa + 0.5 * h * (1.0 + kNodes8[q]);
        const double wq = 0.5 * h * kWeights8[q];
        VectorXd theta(2);
        theta << std::cos(phi), std::sin(phi);
        const double wtheta = weight(rs, theta);
        auto eval = [&](double r) { return std::abs(field.value(r * theta)); };
        std::vector<double> samples(rad_samples + 1);
        for (int i = 0; i <= rad_samples; ++i) samples[i] = eval(R * i / rad_samples);
        for (std::size_t li = 0; li < levels.size(); ++li) {
          const auto segs = super_level_segments(eval, 0.0, R, samples, levels[li]);
          double radial = 0.0;
          for (const auto& s : segs)
            radial += (std::pow(s.second, d) - std::pow(s.first, d)) / d;
          masses[li] += wq * wtheta * radial;
        }
      }
    }
  }
  return masses;
}

double level_set_mass(const RootSystem& rs, const ScalarField& field, double level,
                      const WeightedDomain& domain) {
  return distribution_masses(rs, field, {level}, domain).front();
}

double weak_lq_norm(const RootSystem& rs, const ScalarField& field, double q,
                    const std::vector<double>& level_grid, const WeightedDomain& domain) {
  if (q <= 0.0) throw Error(ErrorCode::ParameterRange, "weak norm requires q > 0");
  const std::vector<double> masses = distribution_masses(rs, field, level_grid, domain);
  double best = 0.0;
  for (std::size_t i = 0; i < level_grid.size(); ++i)
    best = std::max(best, level_grid[i] * std::pow(masses[i], 1.0 / q));
  return best;
}

double sphere_weight_integral(const RootSystem& rs, double tolerance) {
  if (rs.dimension == 1) {
    VectorXd e(1);
    e << 1.0;
    return weight(rs, e) + weight(rs, -e);
  }
  if (rs.dimension != 2)
    throw Error(ErrorCode::UnsupportedShape,
                "sphere weight integrals are supported in dimensions 1 and 2 only");
  Budget budget;
  auto g = [&](double phi) {
    VectorXd x(2);
    x << std::cos(phi), std::sin(phi);
    return weight(rs, x);
  };
  double total = 0.0, err = 0.0;
  long cells = 0;
  const auto arcs = circle_arcs(rs);
  double scale = 0.0;
  for (const auto& arc : arcs) scale += gl_interval(g, arc.first, arc.second, kRule20);
  const double tol_abs = tolerance * std::max(std::abs(scale), 1e-16);
  for (const auto& arc : arcs) {
    const double whole = gl_interval(g, arc.first, arc.second, kRule20);
    total += adapt_1d(g, arc.first, arc.second, whole, tol_abs / arcs.size(), 0, budget, err,
                      cells, nullptr);
  }
  return total;
}

double perimeter(const RootSystem& rs, const WeightedDomain& domain, double tolerance) {
  const double d = rs.effective_dimension();
  switch (domain.kind) {
    case DomainKind::Ball:
      // w is homogeneous of degree d - N, and the sphere element scales as
      // R^{N-1}, so p(B_R) = p(B_1) R^{d-1}.
      return sphere_weight_integral(rs, tolerance) * std::pow(domain.radius, d - 1.0);
    case DomainKind::ChamberBall: {
      // Walls carry zero weight; only the spherical cap contributes.
      if (rs.dimension == 1) {
        VectorXd e(1);
        e << (domain.chamber.signs.size() > 0 && domain.chamber.signs[0] < 0 ? -1.0 : 1.0);
        return weight(rs, e) * std::pow(domain.radius, d - 1.0);
      }
      if (rs.dimension != 2)
        throw Error(ErrorCode::UnsupportedShape,
                    "chamber perimeters are supported in dimensions 1 and 2 only");
      const auto arcs = select_arcs(rs, domain);
      Budget budget;
      auto g = [&](double phi) {
        VectorXd x(2);
        x << std::cos(phi), std::sin(phi);
        return weight(rs, x);
      };
      double total = 0.0, err = 0.0;
      long cells = 0;
      for (const auto& arc : arcs) {
        const double whole = gl_interval(g, arc.first, arc.second, kRule20);
        const double tol_abs = tolerance * std::max(std::abs(whole), 1e-300);
        total += adapt_1d(g, arc.first, arc.second, whole, tol_abs, 0, budget, err, cells,
                          nullptr);
      }
      return total * std::pow(domain.radius, d - 1.0);
    }
    case DomainKind::Box: {
      if (rs.dimension == 1) {
        VectorXd a(1), b(1);
        a << domain.lo[0];
        b << domain.hi[0];
        return weight(rs, a) + weight(rs, b);
      }
      if (rs.dimension != 2)
        throw Error(ErrorCode::UnsupportedShape,
                    "box perimeters are supported in dimensions 1 and 2 only");
      Budget budget;
      double total = 0.0, err = 0.0;
      long cells = 0;
      // Four edges, parameterised by arc length; each edge is split where a
      // wall crosses it so the adaptive rule sees one-sided kinks only.
      struct Edge {
        VectorXd p0, p1;
      };
      VectorXd c00(2), c10(2), c01(2), c11(2);
      c00 << domain.lo[0], domain.lo[1];
      c10 << domain.hi[0], domain.lo[1];
      c01 << domain.lo[0], domain.hi[1];
      c11 << domain.hi[0], domain.hi[1];
      const Edge edges[4] = {{c00, c10}, {c10, c11}, {c11, c01}, {c01, c00}};
      for (const Edge& e : edges) {
        const double len = (e.p1 - e.p0).norm();
        std::vector<double> cuts = {0.0, 1.0};
        for (int j = 0; j < rs.positive_roots.cols(); ++j) {
          const double a = rs.positive_roots.col(j).dot(e.p0);
          const double b = rs.positive_roots.col(j).dot(e.p1);
          if ((a < 0.0) != (b < 0.0)) {
            const double t = a / (a - b);
            if (t > 1e-12 && t < 1.0 - 1e-12) cuts.push_back(t);
          }
        }
        std::sort(cuts.begin(), cuts.end());
        auto g = [&](double t) { return weight(rs, (e.p0 + t * (e.p1 - e.p0)).eval()); };
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
          const double whole = gl_interval(g, cuts[i], cuts[i + 1], kRule20);
          const double tol_abs = tolerance * std::max(std::abs(whole), 1e-300);
          total += len * adapt_1d(g, cuts[i], cuts[i + 1], whole, tol_abs, 0, budget, err,
                                  cells, nullptr);
        }
      }
      return total;
    }
    default:
      throw Error(ErrorCode::UnboundedDomain, "perimeter requires a bounded domain");
  }
}

double radial_integral(double effective_dim, const std::function<double(double)>& g,
                       double r_max, double tolerance) {
  // Substituting r = e^u - 1 compresses slowly decaying tails (a 1/r^2 tail
  // becomes exponentially small in u), keeping the adaptive rule cheap even
  // for very large cutoff radii.
  auto integrand = [&](double u) {
    const double eu = std::exp(u);
    const double r = eu - 1.0;
    return g(r) * std::pow(r, effective_dim - 1.0) * eu;
  };
  const double u_max = std::log1p(r_max);
  Budget budget;
  double err = 0.0;
  long cells = 0;
  const double scale =
      gl_interval([&](double u) { return std::abs(integrand(u)); }, 0.0, u_max, kRule20);
  const double whole = gl_interval(integrand, 0.0, u_max, kRule20);
  return adapt_1d(integrand, 0.0, u_max, whole, tolerance * std::max(scale, 1e-16), 0, budget,
                  err, cells, nullptr);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (lo <= 0.0 || hi <= lo || points < 2)
    throw Error(ErrorCode::ParameterRange, "log grid requires 0 < lo < hi and >= 2 points");
  std::vector<double> out(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = lo * std::exp(step * i);
  out.back() = hi;
  return out;
}

namespace quad_detail {

double integrate_1d(const std::function<double(double)>& g, double a, double b, double tol_abs,
                    double* err_out, long* cells_out) {
  Budget budget;
  double err = 0.0;
  long cells = 0;
  const double whole = gl_interval(g, a, b, kRule20);
  const double out = adapt_1d(g, a, b, whole, tol_abs, 0, budget, err, cells, nullptr);
  if (err_out) *err_out = err;
  if (cells_out) *cells_out = cells;
  return out;
}

}  // namespace quad_detail

}  // namespace dunkl
