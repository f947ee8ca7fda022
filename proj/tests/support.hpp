#pragma once

// Hand-rolled generators for the property tests. Each property draws from its
// own seeded stream so a failure reproduces from the printed case index.

#include <doctest.h>

#include <complex>
#include <cstdint>
#include <random>

#include "su11/group.hpp"
#include "su11/laurent.hpp"
#include "su11/principal_series.hpp"

namespace su11::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double real(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Complex complex(double r) {
    const double re = real(-r, r);
    const double im = real(-r, r);
    return {re, im};
  }

  GroupElement element(double t_max) { return random_element(rng_, t_max); }
  CirclePoint circle() { return CirclePoint(real(0.0, kTwoPi)); }

  rep::FourierFunction fourier(int order, double decay = 0.0) {
    rep::FourierFunction f(order);
    for (int p = -order; p <= order; ++p) f.coeff_ref(p) = complex(1.0) / std::pow(1.0 + std::abs(p), decay);
    return f;
  }

  uq::LaurentPoly laurent(int terms = 3) {
    uq::LaurentPoly out;
    for (int i = 0; i < terms; ++i) {
      const int num = integer(-5, 5);
      const int den = integer(1, 4);
      const int e = integer(-3, 3);
      out += uq::LaurentPoly(mpq_class(num, den), e);
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

/// Runs body(gen, case_index) for n cases from one seeded stream.
template <typename Body>
void for_all(int n, std::uint64_t seed, Body body) {
  Gen gen(seed);
  for (int i = 0; i < n; ++i) {
    CAPTURE(i);
    body(gen, i);
  }
}

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace su11::testing
