#include <doctest.h>

#include <cmath>

#include "su11/errors.hpp"
#include "su11/principal_series.hpp"
#include "support.hpp"

using namespace su11;
using namespace su11::rep;
using su11::testing::close;
using su11::testing::for_all;
using su11::testing::Gen;

TEST_CASE("parameters") {
  CHECK(RepParams(1, {0.5, 2.0}).unitary());
  CHECK_FALSE(RepParams(0, {1.0, 0.0}).unitary());
  CHECK(RepParams(1, 0.5).j() == 0.5);
  CHECK_THROWS(RepParams(2, 0.5));
}

TEST_CASE("basis, evaluation and inner product") {
  const FourierFunction p2 = FourierFunction::basis(2, 3);
  CHECK(close(p2.evaluate(std::polar(1.0, 0.3)), std::polar(1.0, -0.6), 1e-15));
  CHECK(inner_product(p2, p2) == Complex(1.0));
  CHECK(inner_product(p2, FourierFunction::basis(-2, 3)) == Complex(0.0));
  CHECK(p2.coeff(7) == Complex(0.0));
  CHECK_THROWS(FourierFunction(1, {1.0, 2.0}));
}

TEST_CASE("projection of samples recovers coefficients") {
  Gen gen(41);
  const FourierFunction f = gen.fourier(6);
  const Projection p = project_samples([&](Complex z) { return f.evaluate(z); }, 6, 13);
  CHECK(max_abs_diff(p.function, f) < 1e-12);
}

TEST_CASE("D operator") {
  CHECK(apply_D(FourierFunction::basis(0, 2)).norm() == 0.0);
  const FourierFunction d = apply_D(FourierFunction::basis(3, 4));
  CHECK(d.coeff(3) == Complex(0.0, -3.0));
}

TEST_CASE("apply_V by the identity") {
  Gen gen(42);
  const FourierFunction f = gen.fourier(10);
  const ApplyResult r = apply_V(RepParams(1, {0.5, 0.3}), GroupElement(), f, 10);
  CHECK(max_abs_diff(r.function, f) < 1e-12);
  CHECK(r.warnings.empty());
}

TEST_CASE("weight relation on rotations") {
  for (int two_j : {0, 1}) {
    const RepParams params(two_j, {0.8, -0.1});
    for (int p : {-5, 0, 3}) {
      const ApplyResult r = apply_V(params, k_theta(2.1), FourierFunction::basis(p, 6), 6);
      CHECK(max_abs_diff(r.function, std::polar(1.0, (p + params.j()) * 2.1) * FourierFunction::basis(p, 6)) <
            1e-13);
    }
  }
}

TEST_CASE("ladder and recurrence examples") {
  // S₊φ₀ at j = 0, s = ½ is ½φ₁.
  const FourierFunction up = apply_dV(RepParams(0, 0.5), Direction::Splus, FourierFunction::basis(0, 0));
  CHECK(up.order() == 1);
  CHECK(close(up.coeff(1), 0.5, 1e-15));
  CHECK(up.coeff(0) == Complex(0.0));
  CHECK(up.coeff(-1) == Complex(0.0));

  // S₋φ₀ at j = ½, s = ½ vanishes.
  CHECK(apply_dV(RepParams(1, 0.5), Direction::Sminus, FourierFunction::basis(0, 0)).norm() < 1e-15);

  // S_x φ₁ at j = 0, s = 1: 0·φ₀ + 1·φ₂.
  const FourierFunction sx = apply_dV(RepParams(0, 1.0), Direction::Sx, FourierFunction::basis(1, 1));
  CHECK(sx.coeff(0) == Complex(0.0));
  CHECK(sx.coeff(2) == Complex(1.0));
}

TEST_CASE("finite differences of the zero generator vanish") {
  const FourierFunction z = finite_difference_dV(RepParams(0, 0.5), RealMatrix2{0, 0, 0, 0},
                                                 FourierFunction::basis(1, 4), 1e-3);
  CHECK(z.norm() < 1e-14);
  CHECK_THROWS(finite_difference_dV(RepParams(0, 0.5), generator_sx(), FourierFunction::basis(1, 4), 0.1));
}

TEST_CASE("finite-difference bridge") {
  const RepParams params(0, {0.5, 0.3});
  const FourierFunction phi0 = FourierFunction::basis(0, 32);
  CHECK(max_abs_diff(finite_difference_dV(params, generator_sx(), phi0, 1e-4), apply_dV(params, Direction::Sx, phi0)) <
        1e-6);
  CHECK(max_abs_diff(finite_difference_dV(params, generator_sy(), phi0, 1e-4), apply_dV(params, Direction::Sy, phi0)) <
        1e-6);
}

TEST_CASE("boosting a band-limited function far past its order warns") {
  const ApplyResult r = apply_V(RepParams(0, 0.5), d_t(4.0), FourierFunction::basis(0, 0), 4);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings.front().kind == Warning::Kind::truncation);
}

// --- properties ------------------------------------------------------------

TEST_CASE("property: linearity of apply_V") {
  for_all(20, 43, [](Gen& gen, int) {
    const RepParams params(gen.integer(0, 1), gen.complex(1.0));
    const GroupElement g = gen.element(1.0);
    const FourierFunction a = gen.fourier(6);
    const FourierFunction b = gen.fourier(6);
    const Complex c = gen.complex(2.0);
    const FourierFunction lhs = apply_V(params, g, a + c * b, 48).function;
    const FourierFunction rhs = apply_V(params, g, a, 48).function + c * apply_V(params, g, b, 48).function;
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  });
}

TEST_CASE("property: ladder compositions collapse to single terms") {
  for_all(50, 44, [](Gen& gen, int) {
    const RepParams params(gen.integer(0, 1), gen.complex(2.0));
    const FourierFunction f = gen.fourier(gen.integer(0, 20));
    for (Direction d : {Direction::Splus, Direction::Sminus}) {
      CHECK(max_abs_diff(apply_dV(params, d, f), apply_ladder_closed_form(params, d, f)) < 1e-12);
    }
  });
}

TEST_CASE("property: pointwise derived action agrees with the recurrences") {
  for_all(20, 45, [](Gen& gen, int) {
    const RepParams params(gen.integer(0, 1), gen.complex(1.0));
    const FourierFunction f = gen.fourier(5);
    const Complex zeta = std::polar(1.0, gen.real(0.0, kTwoPi));
    for (Direction d : {Direction::Sx, Direction::Sy}) {
      CHECK(close(pointwise_dV(params, d, f, zeta), apply_dV(params, d, f).evaluate(zeta), 1e-12));
    }
  });
}

TEST_CASE("property: unitarity on the critical line") {
  for_all(10, 46, [](Gen& gen, int) {
    const RepParams params(gen.integer(0, 1), {0.5, gen.real(-2.0, 2.0)});
    const GroupElement g = gen.element(1.0);
    const FourierFunction a = gen.fourier(6);
    const FourierFunction b = gen.fourier(6);
    const Complex before = inner_product(a, b);
    const Complex after = inner_product(apply_V(params, g, a, 64).function, apply_V(params, g, b, 64).function);
    CHECK(std::abs(after - before) < 1e-6);
  });
}

TEST_CASE("property: homomorphism") {
  for_all(6, 47, [](Gen& gen, int) {
    const RepParams params(gen.integer(0, 1), gen.complex(1.0));
    const GroupElement g = gen.element(0.5);
    const GroupElement h = gen.element(0.5);
    const FourierFunction f = gen.fourier(6);
    const FourierFunction lhs = apply_V(params, g, apply_V(params, h, f, 64).function, 64).function;
    const FourierFunction rhs = apply_V(params, mul(g, h), f, 64).function;
    CHECK(max_abs_diff(lhs, rhs) < 1e-8);
  });
}

TEST_CASE("property: finite-difference error is second order") {
  for_all(4, 48, [](Gen& gen, int) {
    const RepParams params(gen.integer(0, 1), gen.complex(1.0));
    const FourierFunction f = gen.fourier(8, 3.0);
    const FourierFunction exact = apply_dV(params, Direction::Sy, f);
    const double e1 = max_abs_diff(finite_difference_dV(params, generator_sy(), f, 1e-2), exact);
    const double e2 = max_abs_diff(finite_difference_dV(params, generator_sy(), f, 5e-3), exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
  });
}
