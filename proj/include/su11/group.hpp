#pragma once

// SU(1,1) group kernel: elements (α, β; β̄, ᾱ) with |α|²−|β|² = 1, the Cayley
// isomorphism from SL(2,R), the boundary Möbius action on the unit circle and
// the cocycles t(g,ζ) and u(g,ζ).

#include <complex>
#include <numbers>
#include <random>

namespace su11 {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Default tolerance on |α|²−|β|²−1 (and ad−bc−1).
inline constexpr double kGroupTol = 1e-12;

/// Reduces x into [0, period). The single branch-cut policy used everywhere.
double wrap(double x, double period);

struct RealMatrix2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  friend RealMatrix2 operator*(const RealMatrix2& x, const RealMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend RealMatrix2 operator*(double s, const RealMatrix2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
};

/// exp of a traceless real 2×2 matrix, using X² = −det(X)·I.
RealMatrix2 exp_traceless(const RealMatrix2& x);

class GroupElement {
 public:
  GroupElement() = default;  // identity

  /// Validated construction; throws DeterminantError off the constraint surface.
  static GroupElement make(Complex alpha, Complex beta, double tol = kGroupTol);

  /// No check. Used for products so that drift is observable, never hidden.
  static GroupElement unchecked(Complex alpha, Complex beta) {
    GroupElement g;
    g.alpha_ = alpha;
    g.beta_ = beta;
    return g;
  }

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

  /// |α|²−|β|²−1.
  double constraint_residual() const { return std::norm(alpha_) - std::norm(beta_) - 1.0; }

  /// Max-entry distance between the embedded 2×2 matrices.
  double distance(const GroupElement& other) const;

 private:
  Complex alpha_{1.0, 0.0};
  Complex beta_{0.0, 0.0};
};

/// Boundary point ζ = e^{iθ}, θ ∈ [0, 2π).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double theta) : theta_(wrap(theta, kTwoPi)) {}

  double theta() const { return theta_; }
  Complex zeta() const { return std::polar(1.0, theta_); }

 private:
  double theta_ = 0.0;
};

GroupElement cayley_to_su11(const RealMatrix2& m, double tol = kGroupTol);
/// Inverse Cayley map back to SL(2,R); exact algebraic inverse of the formulas.
RealMatrix2 cayley_to_real(const GroupElement& g);

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
/// Rescales (α, β) back onto |α|²−|β|² = 1.
GroupElement renormalize(const GroupElement& g);

CirclePoint mobius(const GroupElement& g, const CirclePoint& z);
double cocycle_t(const GroupElement& g, const CirclePoint& z);
Complex cocycle_u(const GroupElement& g, const CirclePoint& z);
/// d(g·θ)/dθ in closed form, |ᾱ+β̄e^{iθ}|^{−2}.
double action_derivative(const GroupElement& g, double theta);

/// Action on the half-angle (4π) circle: e^{i(g·θ)/2} = (αe^{iθ/2}+βe^{−iθ/2})/|…|.
/// Result in [0, 4π). Agrees with mobius modulo 2π.
double half_angle_action(const GroupElement& g, double theta);

// One-parameter subgroups.
GroupElement k_theta(double theta);  // diag(e^{iθ/2}, e^{−iθ/2})
GroupElement d_t(double t);          // (cosh t/2, sinh t/2; sinh t/2, cosh t/2)
GroupElement n_xi(double xi);        // (1+iξ/2, −iξ/2; iξ/2, 1−iξ/2)

/// Random element with Cartan parameter t uniform in [0, t_max] and uniform angles.
GroupElement random_element(std::mt19937_64& rng, double t_max);
/// Random real unimodular matrix with entries of moderate size.
RealMatrix2 random_unimodular(std::mt19937_64& rng, double scale = 2.0);

}  // namespace su11
