#include <doctest.h>

#include <cmath>

#include <dunkl/constants.hpp>
#include <dunkl/root_system.hpp>

using namespace dunkl;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("log beta agrees with the gamma function") {
  CHECK(log_beta(1.0, 1.0) == doctest::Approx(0.0));
  CHECK(log_beta(2.0, 3.0) == doctest::Approx(std::log(1.0 / 12.0)).epsilon(1e-12));
  CHECK(log_beta(0.5, 0.5) == doctest::Approx(std::log(kPi)).epsilon(1e-12));
}

TEST_CASE("Gaussian normalization closed forms") {
  CHECK(macdonald_mehta(parse_root_system_spec("a1:k=0")) ==
        doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-12));
  CHECK(macdonald_mehta(parse_root_system_spec("a1:k=1")) ==
        doctest::Approx(2.0 * std::sqrt(2.0 * kPi)).epsilon(1e-12));
  CHECK(macdonald_mehta(parse_root_system_spec("a1x2:k=1,1")) ==
        doctest::Approx(8.0 * kPi).epsilon(1e-12));
  CHECK(macdonald_mehta(parse_root_system_spec("a2:k=1")) ==
        doctest::Approx(24.0 * kPi).epsilon(1e-10));
  CHECK(macdonald_mehta(parse_root_system_spec("b2:k=1,0.5")) ==
        doctest::Approx(64.0).epsilon(1e-10));
}

TEST_CASE("sphere constant consistency") {
  for (const char* spec : {"a1:k=1", "a2:k=1", "b2:k=1,0.5", "i2m:m=5,k=1"}) {
    const RootSystem rs = parse_root_system_spec(spec);
    const double d = rs.effective_dimension();
    // p(B_1) = M_k / (2^{d/2-1} Gamma(d/2))
    const double expected =
        macdonald_mehta(rs) / (std::pow(2.0, 0.5 * d - 1.0) * std::tgamma(0.5 * d));
    CHECK(sphere_constant(rs) == doctest::Approx(expected).epsilon(1e-10));
  }
  CHECK(sphere_constant(parse_root_system_spec("a1:k=1")) == doctest::Approx(4.0));
}

TEST_CASE("gamma bound constant") {
  CHECK(gamma_bound_constant(parse_root_system_spec("a1:k=1")) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(gamma_bound_constant(parse_root_system_spec("a2:k=1")) ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-14));
  CHECK(gamma_bound_constant(parse_root_system_spec("i2m:m=5,k=1")) ==
        doctest::Approx(1.0 / 11.0).epsilon(1e-14));
  // Multiplicity zero on one orbit: only active roots count.
  CHECK(gamma_bound_constant(parse_root_system_spec("b2:k=1,0")) ==
        doctest::Approx((0.25)/(1.25)).epsilon(1e-12));
}

TEST_CASE("Nash constant closed form vs numeric minimization") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  const double c = nash_constant(rs);
  CHECK(c == doctest::Approx(0.658370965486).epsilon(1e-9));
}

TEST_CASE("talenti bound and functional") {
  CHECK(talenti_bound(3.0, 2.0) == doctest::Approx(0.99333577291).epsilon(1e-9));
  // The extremal profile attains the bound.
  const RadialProfile prof = extremal_profile(3.0, 2.0, 1.0, 1.0);
  CHECK(talenti_functional(prof, 3.0, 2.0) ==
        doctest::Approx(talenti_bound(3.0, 2.0)).epsilon(1e-5));
  // The whole two-parameter family attains the bound, not just a = b = 1.
  const RadialProfile other = extremal_profile(3.0, 2.0, 1.0, 4.0);
  CHECK(talenti_functional(other, 3.0, 2.0) ==
        doctest::Approx(talenti_bound(3.0, 2.0)).epsilon(1e-5));
}

TEST_CASE("constant bracket ordering") {
  // a1:k=0.5 sits at the borderline homogeneous dimension 2, where the
  // bracket is undefined, so it is excluded here.
  for (const char* spec : {"a1:k=1", "a2:k=1", "b2:k=1,0.5"}) {
    const RootSystem rs = parse_root_system_spec(spec);
    const auto [lo, hi] = dunkl_constant_bounds(rs);
    CHECK(lo > 0.0);
    CHECK(lo <= hi * (1.0 + 1e-12));
    CHECK(weyl_constant(rs, 2.0) == doctest::Approx(hi).epsilon(1e-12));
  }
}

TEST_CASE("frozen rank-1 sharp constants") {
  const auto rep = constants_report(parse_root_system_spec("a1:k=1"), 2.0);
  CHECK(rep.dunkl_lower == doctest::Approx(0.625762324952).epsilon(1e-9));
  CHECK(rep.dunkl_upper == doctest::Approx(0.788411125438).epsilon(1e-9));
  CHECK(rep.sobolev_from_nash == doctest::Approx(42.0252920209).epsilon(1e-8));
}
