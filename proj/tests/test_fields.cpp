#include <doctest.h>

#include <cmath>
#include <random>

#include <dunkl/field_catalog.hpp>
#include <dunkl/fields.hpp>
#include <dunkl/root_system.hpp>

using namespace dunkl;
using Eigen::VectorXd;

namespace {

VectorXd random_point(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> nd;
  VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x[i] = nd(rng);
  if (x.norm() < 0.2) x.array() += 0.5;
  return x;
}

}  // namespace

TEST_CASE("analytic gradients match central differences") {
  const RootSystem rs = parse_root_system_spec("a2:k=1");
  std::mt19937_64 rng(3);
  for (const ScalarField& f : default_test_family(rs, 42)) {
    if (!f.has_gradient()) continue;
    for (int trial = 0; trial < 25; ++trial) {
      const VectorXd x = random_point(rng, rs.dimension);
      const VectorXd g = f.gradient(x);
      for (int i = 0; i < rs.dimension; ++i) {
        const double h = 1e-5 * (1.0 + x.cwiseAbs().maxCoeff());
        VectorXd xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fd = (f.value(xp) - f.value(xm)) / (2.0 * h);
        CHECK(g[i] == doctest::Approx(fd).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("rank-1 Dunkl gradient of an even field is the plain derivative") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  const ScalarField f = make_gaussian(1);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.3, 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    VectorXd x(1);
    x << u(rng);
    // f even: the difference part vanishes, T f = f'.
    const double expected = -x[0] * std::exp(-0.5 * x[0] * x[0]);
    CHECK(dunkl_gradient(rs, f, x)[0] == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("rank-1 Dunkl gradient of an odd field picks up the difference term") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  ScalarField f;
  f.value = [](const VectorXd& x) { return x[0]; };
  f.gradient = [](const VectorXd& x) { return VectorXd::Ones(1); };
  f.decay = Decay::Gaussian;
  f.name = "linear";
  VectorXd x(1);
  x << 0.7;
  // T(x) = 1 + k * (x - (-x)) / x = 1 + 2k = 3 for k = 1.
  CHECK(dunkl_gradient(rs, f, x)[0] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("carre-du-champ agrees with its definition") {
  for (const char* spec : {"a1:k=1", "a1x2:k=1,0.5", "a2:k=1", "b2:k=1,0.5"}) {
    const RootSystem rs = parse_root_system_spec(spec);
    std::mt19937_64 rng(13);
    for (const ScalarField& f : default_test_family(rs, 42)) {
      for (int trial = 0; trial < 10; ++trial) {
        const VectorXd x = random_point(rng, rs.dimension);
        const double direct = carre_du_champ(rs, f, x);
        const double via_def = carre_du_champ_via_definition(rs, f, x);
        CHECK(direct == doctest::Approx(via_def).epsilon(5e-6));
      }
    }
  }
}

TEST_CASE("carre-du-champ is nonnegative and exceeds the plain gradient term") {
  const RootSystem rs = parse_root_system_spec("b2:k=1,0.5");
  std::mt19937_64 rng(17);
  for (const ScalarField& f : default_test_family(rs, 42)) {
    for (int trial = 0; trial < 20; ++trial) {
      const VectorXd x = random_point(rng, rs.dimension);
      const double g = carre_du_champ(rs, f, x);
      CHECK(g >= 0.0);
      CHECK(g >= eval_gradient(f, x).squaredNorm() - 1e-12);
    }
  }
}

TEST_CASE("difference quotients stay finite at reflection walls") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  const ScalarField f = make_odd_gaussian(1);
  VectorXd x(1);
  x << 0.0;
  // (f(x) - f(-x))/(sqrt(2) x) -> sqrt(2) f'(0) at the wall.
  const VectorXd parts = difference_parts(rs, f, x);
  CHECK(std::isfinite(parts[0]));
  CHECK(parts[0] == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("field combinators propagate values") {
  const ScalarField f = make_odd_gaussian(1);
  VectorXd x(1);
  x << -0.8;
  const double v = f.value(x);
  CHECK(squared_field(f).value(x) == doctest::Approx(v * v));
  CHECK(abs_field(f).value(x) == doctest::Approx(std::abs(v)));
  CHECK(scaled_field(f, 2.5).value(x) == doctest::Approx(2.5 * v));
}

TEST_CASE("field specs parse") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  CHECK(parse_field_spec("gaussian", rs).value(VectorXd::Zero(1)) == doctest::Approx(1.0));
  const ScalarField ind = parse_field_spec("indicator:1,2,0.05", rs);
  VectorXd mid(1);
  mid << 1.5;
  CHECK(ind.value(mid) == doctest::Approx(1.0).epsilon(1e-6));
  VectorXd out(1);
  out << 3.0;
  CHECK(ind.value(out) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("integrability screen follows the decay declaration") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");  // d = 3
  const auto fam = default_test_family(rs, 42);
  const ScalarField* tal = nullptr;
  for (const auto& f : fam)
    if (f.name == "talenti") tal = &f;
  REQUIRE(tal != nullptr);
  CHECK(lp_integrable(*tal, 4.0, 3.0));   // 4 * rate(1) > 3
  CHECK(!lp_integrable(*tal, 2.0, 3.0));  // 2 * rate(1) < 3
}
