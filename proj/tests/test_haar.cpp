#include <doctest.h>

#include <cmath>
#include <vector>

#include "su11/decompositions.hpp"
#include "su11/errors.hpp"
#include "su11/haar.hpp"
#include "su11/quadrature.hpp"
#include "support.hpp"

using namespace su11;
using su11::testing::for_all;
using su11::testing::Gen;

namespace {

double bump(double tau, double support) {
  const double x = tau / support;
  return x < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0;
}

// 2π ∫₀^T F(τ) sinh τ dτ by composite Simpson; the Haar integral of a
// function depending on the Cartan radius only.
double radial_oracle(double support) {
  const int n = 20000;
  const double h = support / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double t = i * h;
    acc += w * bump(t, support) * std::sinh(t);
  }
  return kTwoPi * acc * h / 3.0;
}

haar::GroupFunction radial_bump(double support) {
  return {[support](const GroupElement& g) { return Complex(bump(2 * std::asinh(std::abs(g.beta())), support)); },
          support};
}

}  // namespace

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const quad::Rule1D r = quad::gauss_legendre(6, -1.0, 1.0);
  double x10 = 0.0, x11 = 0.0, w = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    x10 += r.weights[i] * std::pow(r.nodes[i], 10);
    x11 += r.weights[i] * std::pow(r.nodes[i], 11);
    w += r.weights[i];
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x10 == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
  CHECK(std::abs(x11) < 1e-15);

  const quad::Rule1D s = quad::gauss_legendre(4, 0.0, 3.0);
  double cube = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) cube += s.weights[i] * s.nodes[i] * s.nodes[i] * s.nodes[i];
  CHECK(cube == doctest::Approx(81.0 / 4.0));
}

TEST_CASE("periodic rule integrates trigonometric polynomials") {
  const quad::Rule1D r = quad::periodic(16, kFourPi);
  Complex acc = 0.0, zero = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    acc += r.weights[i] * std::norm(std::polar(1.0, 0.5 * r.nodes[i]) + 2.0);
    zero += r.weights[i] * std::polar(1.0, 3.5 * r.nodes[i]);
  }
  CHECK(acc.real() == doctest::Approx(5.0 * kFourPi));
  CHECK(std::abs(zero) < 1e-14);
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000, 0.1);
  CHECK(quad::pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(quad::pairwise_sum(std::span<const double>()) == 0.0);
}

TEST_CASE("quadrature spec validation") {
  haar::QuadratureSpec q;
  CHECK_NOTHROW(q.validate());
  q.order_t = 1;
  CHECK_THROWS_AS(q.validate(), ConfigError);
  q = {};
  q.xi_max = 0.0;
  CHECK_THROWS_AS(q.validate(), ConfigError);
  CHECK(haar::rule_from_string("trapezoid") == haar::Rule::trapezoid);
  CHECK_THROWS_AS(haar::rule_from_string("simpson"), ConfigError);
}

TEST_CASE("both Haar forms match the radial oracle") {
  const double oracle = radial_oracle(2.0);
  const haar::GroupFunction f = radial_bump(2.0);
  const haar::QuadratureSpec q;
  const auto iw = haar::integrate_iwasawa(f, q);
  const auto ca = haar::integrate_cartan(f, q);
  CHECK(iw.warnings.empty());
  CHECK(ca.warnings.empty());
  CHECK(std::abs(iw.value - oracle) / oracle < 1e-4);
  CHECK(std::abs(ca.value - oracle) / oracle < 1e-6);
}

TEST_CASE("hbar enters linearly and exactly") {
  const haar::GroupFunction f = haar::bump_test_function(2.0);
  const haar::QuadratureSpec q;
  const Complex base = haar::integrate_iwasawa(f, q).value;
  for (double hb : {0.5, 3.0, 1.0 / 137.0}) {
    CHECK(haar::integrate_iwasawa(f, q, hb).value == hb * base);
  }
}

TEST_CASE("audit against rotations is exact up to rounding") {
  const auto a = haar::audit_left_invariance(haar::bump_test_function(2.0), k_theta(1.0), haar::QuadratureSpec{});
  CHECK(a.relative_error < 1e-12);
}

TEST_CASE("too small a box is reported") {
  haar::QuadratureSpec q;
  q.t_max = 1.0;
  const auto r = haar::integrate_iwasawa(haar::bump_test_function(2.0), q);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings.front().kind == Warning::Kind::truncation);
}

TEST_CASE("audit of a vanishing integral") {
  const haar::GroupFunction zero{[](const GroupElement&) { return Complex(0.0); }, 1.0};
  CHECK_THROWS_AS(haar::audit_left_invariance(zero, d_t(0.2), haar::QuadratureSpec{}), DivisionByZeroError);
}

TEST_CASE("property: left invariance for random translations") {
  const haar::GroupFunction f = haar::bump_test_function(2.0);
  const haar::QuadratureSpec q;
  for_all(4, 31, [&](Gen& gen, int) {
    const auto a = haar::audit_left_invariance(f, gen.element(1.0), q);
    CHECK(a.relative_error < 1e-4);
    CHECK(a.warnings.empty());
  });
}
