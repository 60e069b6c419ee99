#include <doctest.h>

#include <cmath>
#include <random>

#include <dunkl/errors.hpp>
#include <dunkl/root_system.hpp>

using namespace dunkl;
using Eigen::VectorXd;

TEST_CASE("shorthand specs parse to the expected systems") {
  const RootSystem a1 = parse_root_system_spec("a1:k=1");
  CHECK(a1.dimension == 1);
  CHECK(a1.num_positive_roots() == 1);
  CHECK(a1.gamma() == doctest::Approx(1.0));
  CHECK(a1.effective_dimension() == doctest::Approx(3.0));
  CHECK(a1.is_product());

  const RootSystem a1x3 = parse_root_system_spec("a1x3:k=1,0.5,2");
  CHECK(a1x3.dimension == 3);
  CHECK(a1x3.num_positive_roots() == 3);
  CHECK(a1x3.gamma() == doctest::Approx(3.5));

  const RootSystem a2 = parse_root_system_spec("a2:k=1");
  CHECK(a2.dimension == 2);
  CHECK(a2.num_positive_roots() == 3);
  CHECK(a2.gamma() == doctest::Approx(3.0));
  CHECK(!a2.is_product());

  const RootSystem b2 = parse_root_system_spec("b2:k=1,0.5");
  CHECK(b2.dimension == 2);
  CHECK(b2.num_positive_roots() == 4);
  CHECK(b2.num_orbits() == 2);
  CHECK(b2.gamma() == doctest::Approx(3.0));

  const RootSystem i2 = parse_root_system_spec("i2m:m=5,k=1");
  CHECK(i2.dimension == 2);
  CHECK(i2.num_positive_roots() == 5);
  CHECK(i2.dihedral_order == 5);
}

TEST_CASE("bad specs are rejected") {
  CHECK_THROWS_AS(parse_root_system_spec("z9:k=1"), Error);
  CHECK_THROWS_AS(parse_root_system_spec("a1:k=-1"), Error);
  CHECK_THROWS_AS(parse_root_system_spec("b2:k=1,1,1"), Error);
  // A single value broadcasts across all orbits instead of failing.
  const RootSystem b2 = parse_root_system_spec("b2:k=1");
  CHECK(b2.gamma() == doctest::Approx(4.0));
}

TEST_CASE("positive roots are normalized to squared length two") {
  for (const char* spec : {"a1:k=1", "a2:k=1", "b2:k=1,0.5", "i2m:m=7,k=0.5"}) {
    const RootSystem rs = parse_root_system_spec(spec);
    for (int j = 0; j < rs.num_positive_roots(); ++j)
      CHECK(rs.positive_roots.col(j).squaredNorm() == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("reflection group orders and chamber counts") {
  struct Case {
    const char* spec;
    int order;
  };
  for (const Case& c : {Case{"a1:k=1", 2}, Case{"a1x2:k=1,1", 4}, Case{"a2:k=1", 6},
                        Case{"b2:k=1,0.5", 8}, Case{"i2m:m=5,k=1", 10}}) {
    const RootSystem rs = parse_root_system_spec(c.spec);
    CHECK(generate_group(rs).order() == c.order);
    CHECK(static_cast<int>(enumerate_chambers(rs).size()) == c.order);
  }
}

TEST_CASE("reflections are involutive isometries") {
  const RootSystem rs = parse_root_system_spec("b2:k=1,0.5");
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    VectorXd x(2);
    x << nd(rng), nd(rng);
    for (int j = 0; j < rs.num_positive_roots(); ++j) {
      const VectorXd a = rs.positive_roots.col(j);
      const VectorXd y = reflect(a, x);
      CHECK(y.norm() == doctest::Approx(x.norm()).epsilon(1e-12));
      CHECK((reflect(a, y) - x).norm() < 1e-12);
      CHECK(a.dot(y) == doctest::Approx(-a.dot(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("weight is homogeneous of degree two gamma and group invariant") {
  const RootSystem rs = parse_root_system_spec("i2m:m=5,k=1");
  const ReflectionGroup g = generate_group(rs);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    VectorXd x(2);
    x << nd(rng), nd(rng);
    const double w = weight(rs, x);
    CHECK(weight(rs, 2.0 * x) ==
          doctest::Approx(std::pow(2.0, 2.0 * rs.gamma()) * w).epsilon(1e-10));
    for (const auto& m : g.elements)
      CHECK(weight(rs, m * x) == doctest::Approx(w).epsilon(1e-10));
  }
}

TEST_CASE("chamber signs label points consistently") {
  const RootSystem rs = parse_root_system_spec("a2:k=1");
  const auto chambers = enumerate_chambers(rs);
  for (const Chamber& ch : chambers) {
    const ChamberSign s = chamber_sign(rs, ch.representative);
    CHECK(s == ch.sign);
  }
}

TEST_CASE("JSON serialization round-trips") {
  const RootSystem rs = parse_root_system_spec("b2:k=1,0.5");
  const RootSystem back = load_root_system_json(root_system_to_json(rs));
  CHECK(back.dimension == rs.dimension);
  CHECK(back.num_positive_roots() == rs.num_positive_roots());
  CHECK((back.multiplicity - rs.multiplicity).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((back.positive_roots - rs.positive_roots).cwiseAbs().maxCoeff() < 1e-14);
}
