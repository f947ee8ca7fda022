#include <doctest.h>

#include <cmath>

#include "su11/errors.hpp"
#include "su11/group.hpp"
#include "support.hpp"

using namespace su11;
using su11::testing::close;
using su11::testing::for_all;
using su11::testing::Gen;

TEST_CASE("cayley map of a fixed real matrix") {
  const GroupElement g = cayley_to_su11({2.0, 1.0, 1.0, 1.0});
  CHECK(close(g.alpha(), {1.5, 0.0}, 1e-15));
  CHECK(close(g.beta(), {0.5, -1.0}, 1e-15));
  CHECK(std::abs(g.constraint_residual()) < 1e-15);

  const RealMatrix2 back = cayley_to_real(g);
  CHECK(back.a == doctest::Approx(2.0));
  CHECK(back.b == doctest::Approx(1.0));
  CHECK(back.c == doctest::Approx(1.0));
  CHECK(back.d == doctest::Approx(1.0));
}

TEST_CASE("cayley map rejects non-unimodular matrices") {
  CHECK_THROWS_AS(cayley_to_su11({2.0, 0.0, 0.0, 2.0}), DeterminantError);
}

TEST_CASE("construction validates the constraint") {
  CHECK_NOTHROW(GroupElement::make({std::cosh(0.3), 0.0}, {std::sinh(0.3), 0.0}));
  CHECK_THROWS_AS(GroupElement::make({2.0, 0.0}, {0.0, 0.0}), DeterminantError);
  const GroupElement loose = GroupElement::make({1.0 + 1e-6, 0.0}, {0.0, 0.0}, 1e-5);
  CHECK(std::abs(renormalize(loose).constraint_residual()) < 1e-15);
}

TEST_CASE("one-parameter subgroups") {
  // d_1 d_1 = d_2 = (cosh 1, sinh 1).
  const GroupElement d2 = mul(d_t(1.0), d_t(1.0));
  CHECK(close(d2.alpha(), {std::cosh(1.0), 0.0}, 1e-14));
  CHECK(close(d2.beta(), {std::sinh(1.0), 0.0}, 1e-14));

  CHECK(mul(n_xi(0.4), n_xi(-0.4)).distance(GroupElement()) < 1e-15);
  CHECK(mul(k_theta(1.0), k_theta(2.0)).distance(k_theta(3.0)) < 1e-15);
  // k_{2π} = −1 and k_{4π} = 1.
  CHECK(close(k_theta(kTwoPi).alpha(), {-1.0, 0.0}, 1e-15));
  CHECK(k_theta(kFourPi).distance(GroupElement()) < 1e-15);
}

TEST_CASE("inverse of a diagonal unitary") {
  const GroupElement g = GroupElement::make({0.0, 1.0}, {0.0, 0.0});
  CHECK(close(inverse(g).alpha(), {0.0, -1.0}, 0.0));
  CHECK(close(inverse(g).beta(), {0.0, 0.0}, 0.0));
}

TEST_CASE("exp of traceless generators matches the subgroups") {
  const double t = 0.7;
  const GroupElement d = cayley_to_su11(exp_traceless({t / 2, 0.0, 0.0, -t / 2}));
  CHECK(d.distance(d_t(t)) < 1e-15);
  const RealMatrix2 rot = exp_traceless({0.0, t, -t, 0.0});
  CHECK(rot.a == doctest::Approx(std::cos(t)));
  CHECK(rot.b == doctest::Approx(std::sin(t)));
  CHECK(std::abs(rot.det() - 1.0) < 1e-15);
}

TEST_CASE("Mobius action of subgroups") {
  const CirclePoint z(0.4);
  CHECK(mobius(k_theta(1.1), z).theta() == doctest::Approx(1.5));
  CHECK(mobius(GroupElement(), z).theta() == doctest::Approx(0.4));
  // Boosts fix ±1.
  CHECK(mobius(d_t(2.0), CirclePoint(0.0)).theta() == doctest::Approx(0.0));
  CHECK(mobius(d_t(2.0), CirclePoint(kPi)).theta() == doctest::Approx(kPi));
}

TEST_CASE("cocycles at fixed points") {
  // |β̄ + ᾱ|² = e^t for d_t at ζ = 1, e^{−t} at ζ = −1.
  CHECK(cocycle_t(d_t(1.3), CirclePoint(0.0)) == doctest::Approx(1.3));
  CHECK(cocycle_t(d_t(1.3), CirclePoint(kPi)) == doctest::Approx(-1.3));
  CHECK(cocycle_t(k_theta(0.8), CirclePoint(2.0)) == doctest::Approx(0.0).epsilon(1e-15));
  // u(k_θ, ζ) = ᾱ/|α| = e^{−iθ/2}.
  CHECK(close(cocycle_u(k_theta(0.8), CirclePoint(2.0)), std::polar(1.0, -0.4), 1e-15));
  CHECK(action_derivative(GroupElement(), 1.0) == doctest::Approx(1.0));
  CHECK(action_derivative(d_t(1.3), 0.0) == doctest::Approx(std::exp(-1.3)));
}

TEST_CASE("wrap is the single branch policy") {
  CHECK(wrap(-0.5, kTwoPi) == doctest::Approx(kTwoPi - 0.5));
  CHECK(wrap(kFourPi, kFourPi) == 0.0);
  CHECK(wrap(13.0, kFourPi) == doctest::Approx(13.0 - kFourPi));
}

// --- properties ------------------------------------------------------------

TEST_CASE("property: cayley map is a homomorphism") {
  for_all(300, 11, [](Gen& gen, int) {
    const RealMatrix2 a = random_unimodular(gen.rng());
    const RealMatrix2 b = random_unimodular(gen.rng());
    CHECK(cayley_to_su11(a * b).distance(mul(cayley_to_su11(a), cayley_to_su11(b))) < 1e-12);
  });
}

TEST_CASE("property: group axioms") {
  for_all(300, 12, [](Gen& gen, int) {
    const GroupElement g = gen.element(4.0);
    const GroupElement h = gen.element(4.0);
    const GroupElement k = gen.element(4.0);
    CHECK(mul(g, inverse(g)).distance(GroupElement()) < 1e-12);
    CHECK(mul(mul(g, h), k).distance(mul(g, mul(h, k))) < 1e-10);
  });
}

TEST_CASE("property: constraint drift over long product chains") {
  Gen gen(13);
  GroupElement acc;
  for (int i = 0; i < 1000; ++i) acc = mul(acc, gen.element(1.0));
  CHECK(std::abs(acc.constraint_residual()) / std::norm(acc.alpha()) < 1e-9);
}

TEST_CASE("property: Mobius action, cocycle laws and half-angle lift") {
  for_all(300, 14, [](Gen& gen, int) {
    const GroupElement g = gen.element(3.0);
    const GroupElement h = gen.element(3.0);
    const CirclePoint z = gen.circle();
    const CirclePoint hz = mobius(h, z);
    CHECK(std::abs(std::remainder(mobius(mul(g, h), z).theta() - mobius(g, hz).theta(), kTwoPi)) < 1e-12);
    CHECK(close(cocycle_u(mul(g, h), z), cocycle_u(g, hz) * cocycle_u(h, z), 1e-12));
    CHECK(cocycle_t(mul(g, h), z) == doctest::Approx(cocycle_t(g, hz) + cocycle_t(h, z)).epsilon(1e-12));
    // The half-angle action lifts the Mobius action and is itself an action
    // on the 4π circle.
    const double th = gen.real(0.0, kFourPi);
    CHECK(std::abs(std::remainder(half_angle_action(g, th) - mobius(g, CirclePoint(th)).theta(), kTwoPi)) < 1e-11);
    CHECK(std::abs(std::remainder(half_angle_action(mul(g, h), th) - half_angle_action(g, half_angle_action(h, th)),
                                  kFourPi)) < 1e-11);
  });
}

TEST_CASE("property: action derivative against central differences") {
  for_all(100, 15, [](Gen& gen, int) {
    const GroupElement g = gen.element(2.0);
    const double th = gen.real(0.0, kTwoPi);
    const double h = 1e-5;
    const double fd =
        std::remainder(mobius(g, CirclePoint(th + h)).theta() - mobius(g, CirclePoint(th - h)).theta(), kTwoPi) /
        (2 * h);
    CHECK(fd == doctest::Approx(action_derivative(g, th)).epsilon(1e-6));
  });
}
