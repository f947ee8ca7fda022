#pragma once

// Functions of type χ_n on SU(1,1), left K-projection, the spherical
// function ζ_{n,s}, the Abel transform F_f^{⟨n⟩} and the spherical Fourier
// transform φ_n^μ of type χ_n, with its translation behaviour.

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <functional>
#include <vector>

#include "su11/decompositions.hpp"
#include "su11/errors.hpp"
#include "su11/group.hpp"
#include "su11/haar.hpp"

namespace su11::sph {

/// Profile t ↦ f(d_t) on a uniform grid over [0, T_support], interpolated by a
/// cubic spline with zero end slopes (evenness at 0, compact support at T).
/// Zero for t ≥ T_support; queried at |t|.
class RadialProfile {
 public:
  /// values[i] is the profile at t = i·dt; the last value must vanish.
  /// Throws ConfigError on fewer than 5 samples, dt ≤ 0 or a nonzero last value.
  RadialProfile(double dt, std::vector<Complex> values);

  /// Samples fn at n uniformly spaced points on [0, t_support].
  static RadialProfile sample(const std::function<Complex(double)>& fn, double t_support, int n);

  double t_support() const { return t_support_; }
  double dt() const { return dt_; }
  const std::vector<Complex>& values() const { return values_; }

  Complex operator()(double t) const;

 private:
  double dt_;
  double t_support_;
  std::vector<Complex> values_;
  boost::math::interpolators::cardinal_cubic_b_spline<double> re_;
  boost::math::interpolators::cardinal_cubic_b_spline<double> im_;
};

/// C^∞ bump exp(1 − 1/(1 − (t/T)²)) on [0, T), scaled by `height`.
RadialProfile bump_profile(double t_support, Complex height = 1.0, int samples = 401);

/// f(u_θ d_t u_φ) = e^{in(θ+φ)}·profile(t).
struct TypeChiFunction {
  int n = 0;
  RadialProfile profile;
};

/// Routes through the Cartan decomposition of g.
Complex evaluate(const TypeChiFunction& f, const GroupElement& g);

/// As a generic group function; its support hint is the profile support.
haar::GroupFunction as_group_function(const TypeChiFunction& f);

/// x ↦ (1/4π)∫₀^{4π} e^{−inθ} f(u_θ x) dθ by the periodic trapezoid rule with
/// `order_theta` nodes. A function already of left type χ_n is returned unchanged.
haar::GroupFunction project_left(int n, const haar::GroupFunction& f, int order_theta = 64);

/// ζ_{n,s}(g) = (1/4π)∫₀^{4π} e^{−inθ(k⁻¹gk)} e^{−s t(k⁻¹gk)} dk with (θ, t)
/// the Iwasawa coordinates; averaged over quad.order_theta nodes.
Complex spherical_zeta(int n, Complex s, const GroupElement& g, const haar::QuadratureSpec& quad);

/// (1/4π)∫₀^{4π} ζ_{n,s}(u_θ x u_θ⁻¹ y) dθ − ζ_{n,s}(x)ζ_{n,s}(y).
Complex functional_equation_residual(int n, Complex s, const GroupElement& x, const GroupElement& y,
                                     const haar::QuadratureSpec& quad);

struct TransformParams {
  int n = 0;
  Complex mu = 0.0;   // μ(log d_t) = mu·t
  double rho = 0.5;   // exponent of the e^{ρt} factors
  double hbar = 1.0;
  haar::QuadratureSpec quad;
};

struct TransformResult {
  Complex value;
  Warnings warnings;
};

/// Largest |ξ| at which u_θ d_t n_ξ can have Cartan radius below `support`,
/// from cosh τ = cosh t + (ξ²/2)eᵗ. Zero when |t| ≥ support.
double xi_extent(double t, double support);

/// F(t) = (ħ e^{ρt}/4π)∫₀^{4π}∫ f(u_θ d_t n_ξ) e^{−inθ} dξ dθ. The ξ range is
/// derived from f.support_hint (required).
TransformResult abel_transform(const haar::GroupFunction& f, double t, const TransformParams& params);
TransformResult abel_transform(const TypeChiFunction& f, double t, const TransformParams& params);

/// φ = ∫ F(t) e^{ρt} e^{mu·t} dt over [−W, W] with W = min(support, quad.t_max).
/// Computed at ħ = 1 and scaled by ħ once at the end.
TransformResult kangni_transform(const haar::GroupFunction& f, const TransformParams& params);
TransformResult kangni_transform(const TypeChiFunction& f, const TransformParams& params);

/// The same transform as one integral over the group,
///   ħ ∫_G f(g) (1/4π)∫₀^{4π} u(g, e^{iθ})^{2n} e^{mu·t(g, e^{iθ})} dθ dg,
/// evaluated in Cartan coordinates. Valid for functions of type χ_n.
TransformResult kangni_transform_group_form(const TypeChiFunction& f, const TransformParams& params);

struct TranslationReport {
  Complex base;             // φ(f)
  Complex translated;       // φ(_ωf), _ωf(x) = f(ω⁻¹x)
  Complex predicted_ratio;  // exp(−in(α + d_s·β) − s/2)
  Complex observed_ratio;   // translated / base
  double discrepancy = 0.0; // |translated − base·predicted| / |base·predicted|
  Warnings warnings;
};

/// ω = u_α d_s u_β given in Cartan form (phi = α, t = s, psi = β); d_s·β is
/// the half-angle action of d_s on β.
TranslationReport verify_translation_property(const TypeChiFunction& f, const CartanFactors& omega,
                                              const TransformParams& params);

}  // namespace su11::sph
