#include "su11/group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "su11/errors.hpp"

namespace su11 {

namespace {

constexpr double kSingularTol = 1e-14;
const Complex kI{0.0, 1.0};

// β̄ζ+ᾱ, the denominator shared by the action and both cocycles.
Complex action_denominator(const GroupElement& g, Complex zeta) {
  const Complex den = std::conj(g.beta()) * zeta + std::conj(g.alpha());
  if (std::abs(den) < kSingularTol) {
    throw SingularActionError("|conj(beta)*zeta + conj(alpha)| vanished; element is corrupted");
  }
  return den;
}

}  // namespace

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

RealMatrix2 exp_traceless(const RealMatrix2& x) {
  // X² = δ·I with δ = −det X for traceless X.
  const double delta = -x.det();
  double c, s;  // exp X = c·I + s·X
  if (delta > 1e-30) {
    const double r = std::sqrt(delta);
    c = std::cosh(r);
    s = std::sinh(r) / r;
  } else if (delta < -1e-30) {
    const double r = std::sqrt(-delta);
    c = std::cos(r);
    s = std::sin(r) / r;
  } else {
    c = 1.0 + delta / 2.0;
    s = 1.0 + delta / 6.0;
  }
  return {c + s * x.a, s * x.b, s * x.c, c + s * x.d};
}

GroupElement GroupElement::make(Complex alpha, Complex beta, double tol) {
  const double res = std::norm(alpha) - std::norm(beta) - 1.0;
  if (!(std::abs(res) <= tol)) {
    std::ostringstream os;
    os << "|alpha|^2 - |beta|^2 - 1 = " << res << " exceeds tolerance " << tol;
    throw DeterminantError(os.str());
  }
  return unchecked(alpha, beta);
}

double GroupElement::distance(const GroupElement& other) const {
  return std::max(std::abs(alpha_ - other.alpha_), std::abs(beta_ - other.beta_));
}

GroupElement cayley_to_su11(const RealMatrix2& m, double tol) {
  const double res = m.det() - 1.0;
  if (!(std::abs(res) <= tol)) {
    std::ostringstream os;
    os << "ad - bc - 1 = " << res << " exceeds tolerance " << tol;
    throw DeterminantError(os.str());
  }
  const Complex alpha = 0.5 * Complex(m.a + m.d, m.b - m.c);
  const Complex beta = 0.5 * Complex(m.a - m.d, -(m.b + m.c));
  return GroupElement::unchecked(alpha, beta);
}

RealMatrix2 cayley_to_real(const GroupElement& g) {
  const Complex al = g.alpha(), be = g.beta();
  // a+d = 2Re α, b−c = 2Im α, a−d = 2Re β, b+c = −2Im β.
  return {al.real() + be.real(), al.imag() - be.imag(),
          -al.imag() - be.imag(), al.real() - be.real()};
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  const Complex a1 = g.alpha(), b1 = g.beta();
  const Complex a2 = h.alpha(), b2 = h.beta();
  return GroupElement::unchecked(a1 * a2 + b1 * std::conj(b2), a1 * b2 + b1 * std::conj(a2));
}

GroupElement inverse(const GroupElement& g) {
  return GroupElement::unchecked(std::conj(g.alpha()), -g.beta());
}

GroupElement renormalize(const GroupElement& g) {
  const double det = std::norm(g.alpha()) - std::norm(g.beta());
  if (!(det > 0.0)) throw DeterminantError("cannot renormalize: |alpha|^2 - |beta|^2 <= 0");
  const double s = 1.0 / std::sqrt(det);
  return GroupElement::unchecked(s * g.alpha(), s * g.beta());
}

CirclePoint mobius(const GroupElement& g, const CirclePoint& z) {
  const Complex zeta = z.zeta();
  const Complex w = (g.alpha() * zeta + g.beta()) / action_denominator(g, zeta);
  return CirclePoint(std::arg(w));
}

double cocycle_t(const GroupElement& g, const CirclePoint& z) {
  return std::log(std::norm(action_denominator(g, z.zeta())));
}

Complex cocycle_u(const GroupElement& g, const CirclePoint& z) {
  const Complex den = action_denominator(g, z.zeta());
  return den / std::abs(den);
}

double action_derivative(const GroupElement& g, double theta) {
  return 1.0 / std::norm(action_denominator(g, std::polar(1.0, theta)));
}

double half_angle_action(const GroupElement& g, double theta) {
  const Complex v = g.alpha() * std::polar(1.0, theta / 2.0) + g.beta() * std::polar(1.0, -theta / 2.0);
  if (std::abs(v) < kSingularTol) throw SingularActionError("half-angle action vanished");
  return wrap(2.0 * std::arg(v), kFourPi);
}

GroupElement k_theta(double theta) {
  return GroupElement::unchecked(std::polar(1.0, theta / 2.0), 0.0);
}

GroupElement d_t(double t) {
  return GroupElement::unchecked(std::cosh(t / 2.0), std::sinh(t / 2.0));
}

GroupElement n_xi(double xi) {
  return GroupElement::unchecked(Complex(1.0, xi / 2.0), Complex(0.0, -xi / 2.0));
}

GroupElement random_element(std::mt19937_64& rng, double t_max) {
  std::uniform_real_distribution<double> ang(0.0, kFourPi);
  std::uniform_real_distribution<double> rad(0.0, t_max);
  const double phi = ang(rng), psi = ang(rng), t = rad(rng);
  return GroupElement::unchecked(std::polar(std::cosh(t / 2.0), (phi + psi) / 2.0),
                                 std::polar(std::sinh(t / 2.0), (phi - psi) / 2.0));
}

RealMatrix2 random_unimodular(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  // Pick a, b, c with a bounded away from zero, then solve for d.
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (std::abs(a) < 0.25) continue;
    return {a, b, c, (1.0 + b * c) / a};
  }
}

}  // namespace su11
