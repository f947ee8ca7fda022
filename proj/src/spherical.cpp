#include "su11/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "su11/quadrature.hpp"

namespace su11::sph {

namespace {

constexpr double kBoundaryRatio = 1e-8;
// Spline round-off near the support edge sits far below this.
constexpr double kBoundaryFloor = 1e-14;

std::vector<double> real_parts(const std::vector<Complex>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](Complex c) { return c.real(); });
  return out;
}

std::vector<double> imag_parts(const std::vector<Complex>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](Complex c) { return c.imag(); });
  return out;
}

boost::math::interpolators::cardinal_cubic_b_spline<double> make_spline(const std::vector<double>& y, double dt) {
  return {y.data(), y.size(), 0.0, dt, 0.0, 0.0};
}

double require_support(const haar::GroupFunction& f) {
  if (!f.support_hint) throw ConfigError("transform of a group function requires a support hint");
  return *f.support_hint;
}

void warn(Warnings& out, const std::string& msg) { out.push_back({Warning::Kind::truncation, msg}); }

struct AbelSample {
  Complex value = 0.0;
  double interior = 0.0;  // max |f| over the nodes
  double boundary = 0.0;  // max |f| on the ξ endpoints
  double extent = 0.0;
};

void check_abel_boundary(double boundary, double interior, const std::string& where, Warnings& out) {
  if (boundary > kBoundaryRatio * interior && boundary > kBoundaryFloor) {
    std::ostringstream os;
    os << "Abel integrand on the xi boundary reaches " << boundary << " (interior max " << interior << ")" << where
       << "; support hint too small";
    warn(out, os.str());
  }
}

// F(t) at ħ = 1, with the boundary data needed for the truncation check.
AbelSample abel_unscaled(const haar::GroupFunction& f, double t, const TransformParams& p) {
  AbelSample res;
  const double support = require_support(f);
  const double ext = xi_extent(t, support);
  res.extent = ext;
  if (ext == 0.0) return res;

  const auto th = quad::periodic(p.quad.order_theta, kFourPi);
  const auto xr = quad::gauss_legendre(p.quad.order_xi, -ext, ext);
  const GroupElement a = d_t(t);
  std::vector<GroupElement> an;
  an.reserve(xr.size());
  for (const double xi : xr.nodes) an.push_back(mul(a, n_xi(xi)));

  std::vector<Complex> terms;
  terms.reserve(th.size() * xr.size());
  double interior = 0.0, boundary = 0.0;
  for (std::size_t i = 0; i < th.size(); ++i) {
    const Complex half = std::polar(1.0, th.nodes[i] / 2.0);
    const Complex chi = std::polar(th.weights[i], -p.n * th.nodes[i]);
    for (std::size_t k = 0; k < xr.size(); ++k) {
      const GroupElement g = GroupElement::unchecked(half * an[k].alpha(), half * an[k].beta());
      const Complex v = f(g);
      interior = std::max(interior, std::abs(v));
      terms.push_back(v * chi * xr.weights[k]);
    }
    for (const double xi : {-ext, ext}) {
      const GroupElement e = mul(a, n_xi(xi));
      boundary = std::max(boundary, std::abs(f(GroupElement::unchecked(half * e.alpha(), half * e.beta()))));
    }
  }
  res.interior = interior;
  res.boundary = boundary;
  res.value = quad::pairwise_sum(terms) * (std::exp(p.rho * t) / kFourPi);
  return res;
}

}  // namespace

RadialProfile::RadialProfile(double dt, std::vector<Complex> values) : dt_(dt), values_(std::move(values)) {
  if (!(dt > 0.0)) throw ConfigError("profile spacing dt must be positive");
  if (values_.size() < 5) throw ConfigError("profile needs at least 5 samples");
  double scale = 0.0;
  for (const auto& v : values_) scale = std::max(scale, std::abs(v));
  if (std::abs(values_.back()) > 1e-12 * std::max(scale, 1.0)) {
    throw ConfigError("profile must vanish at its support endpoint");
  }
  values_.back() = 0.0;
  t_support_ = dt * static_cast<double>(values_.size() - 1);
  re_ = make_spline(real_parts(values_), dt_);
  im_ = make_spline(imag_parts(values_), dt_);
}

RadialProfile RadialProfile::sample(const std::function<Complex(double)>& fn, double t_support, int n) {
  if (n < 5) throw ConfigError("profile needs at least 5 samples");
  const double dt = t_support / (n - 1);
  std::vector<Complex> values(n);
  for (int i = 0; i < n; ++i) values[i] = fn(i * dt);
  values.back() = 0.0;
  return RadialProfile(dt, std::move(values));
}

Complex RadialProfile::operator()(double t) const {
  t = std::abs(t);
  if (t >= t_support_) return 0.0;
  return {re_(t), im_(t)};
}

RadialProfile bump_profile(double t_support, Complex height, int samples) {
  return RadialProfile::sample(
      [t_support, height](double t) -> Complex {
        const double u = t / t_support;
        if (u >= 1.0) return 0.0;
        return height * std::exp(1.0 - 1.0 / (1.0 - u * u));
      },
      t_support, samples);
}

Complex evaluate(const TypeChiFunction& f, const GroupElement& g) {
  const CartanFactors c = cartan(g);
  return std::polar(1.0, f.n * (c.phi + c.psi)) * f.profile(c.t);
}

haar::GroupFunction as_group_function(const TypeChiFunction& f) {
  haar::GroupFunction out;
  out.evaluator = [f](const GroupElement& g) { return evaluate(f, g); };
  out.support_hint = f.profile.t_support();
  return out;
}

haar::GroupFunction project_left(int n, const haar::GroupFunction& f, int order_theta) {
  const auto th = quad::periodic(order_theta, kFourPi);
  std::vector<Complex> halves, weights;
  for (std::size_t i = 0; i < th.size(); ++i) {
    halves.push_back(std::polar(1.0, th.nodes[i] / 2.0));
    weights.push_back(std::polar(th.weights[i] / kFourPi, -n * th.nodes[i]));
  }
  haar::GroupFunction out;
  out.support_hint = f.support_hint;
  out.evaluator = [f, halves, weights](const GroupElement& x) {
    std::vector<Complex> terms(halves.size());
    for (std::size_t i = 0; i < halves.size(); ++i) {
      terms[i] = weights[i] * f(GroupElement::unchecked(halves[i] * x.alpha(), halves[i] * x.beta()));
    }
    return quad::pairwise_sum(terms);
  };
  return out;
}

Complex spherical_zeta(int n, Complex s, const GroupElement& g, const haar::QuadratureSpec& quad) {
  const auto th = quad::periodic(quad.order_theta, kFourPi);
  std::vector<Complex> terms(th.size());
  for (std::size_t i = 0; i < th.size(); ++i) {
    // k⁻¹gk with k = u_φ keeps α and rotates β by e^{−iφ}.
    const GroupElement c = GroupElement::unchecked(g.alpha(), g.beta() * std::polar(1.0, -th.nodes[i]));
    const IwasawaFactors w = iwasawa(c);
    terms[i] = std::exp(Complex(0.0, -n * w.theta) - s * w.t) * th.weights[i];
  }
  return quad::pairwise_sum(terms) / kFourPi;
}

Complex functional_equation_residual(int n, Complex s, const GroupElement& x, const GroupElement& y,
                                     const haar::QuadratureSpec& quad) {
  const auto th = quad::periodic(quad.order_theta, kFourPi);
  std::vector<Complex> terms(th.size());
  for (std::size_t i = 0; i < th.size(); ++i) {
    const GroupElement k = k_theta(th.nodes[i]);
    terms[i] = spherical_zeta(n, s, mul(mul(mul(k, x), inverse(k)), y), quad) * th.weights[i];
  }
  const Complex lhs = quad::pairwise_sum(terms) / kFourPi;
  return lhs - spherical_zeta(n, s, x, quad) * spherical_zeta(n, s, y, quad);
}

double xi_extent(double t, double support) {
  const double gap = std::cosh(support) - std::cosh(t);
  if (gap <= 0.0) return 0.0;
  return std::sqrt(2.0 * gap * std::exp(-t));
}

TransformResult abel_transform(const haar::GroupFunction& f, double t, const TransformParams& params) {
  params.quad.validate();
  const AbelSample a = abel_unscaled(f, t, params);
  TransformResult r{a.value * params.hbar, {}};
  std::ostringstream where;
  where << " at t = " << t << ", |xi| = " << a.extent;
  check_abel_boundary(a.boundary, a.interior, where.str(), r.warnings);
  return r;
}

TransformResult abel_transform(const TypeChiFunction& f, double t, const TransformParams& params) {
  return abel_transform(as_group_function(f), t, params);
}

TransformResult kangni_transform(const haar::GroupFunction& f, const TransformParams& params) {
  params.quad.validate();
  TransformResult res{0.0, {}};
  const double support = require_support(f);
  double window = support;
  if (support > params.quad.t_max) {
    std::ostringstream os;
    os << "support " << support << " exceeds t_max " << params.quad.t_max << "; t-window truncated";
    warn(res.warnings, os.str());
    window = params.quad.t_max;
  }
  const auto tr = quad::gauss_legendre(params.quad.order_t, -window, window);
  std::vector<Complex> terms(tr.size());
  double interior = 0.0, boundary = 0.0;
  for (std::size_t j = 0; j < tr.size(); ++j) {
    const double t = tr.nodes[j];
    const AbelSample F = abel_unscaled(f, t, params);
    interior = std::max(interior, F.interior);
    boundary = std::max(boundary, F.boundary);
    terms[j] = F.value * std::exp((params.rho + params.mu) * t) * tr.weights[j];
  }
  check_abel_boundary(boundary, interior, "", res.warnings);
  const Complex base = quad::pairwise_sum(terms);
  res.value = base * params.hbar;
  return res;
}

TransformResult kangni_transform(const TypeChiFunction& f, const TransformParams& params) {
  return kangni_transform(as_group_function(f), params);
}

TransformResult kangni_transform_group_form(const TypeChiFunction& f, const TransformParams& params) {
  params.quad.validate();
  const auto th = quad::periodic(params.quad.order_theta, kFourPi);
  std::vector<Complex> zetas;
  for (const double theta : th.nodes) zetas.push_back(std::polar(1.0, theta));
  const int two_n = 2 * f.n;
  const Complex mu = params.mu;
  const double w = th.weights.front() / kFourPi;

  haar::GroupFunction integrand;
  integrand.evaluator = [&f, zetas, two_n, mu, w](const GroupElement& g) -> Complex {
    const Complex fg = evaluate(f, g);
    if (fg == 0.0) return 0.0;
    std::vector<Complex> terms(zetas.size());
    for (std::size_t i = 0; i < zetas.size(); ++i) {
      const Complex den = std::conj(g.beta()) * zetas[i] + std::conj(g.alpha());
      const double mod2 = std::norm(den);
      const Complex u = den / std::sqrt(mod2);
      terms[i] = std::pow(u, two_n) * std::exp(mu * std::log(mod2));
    }
    return fg * quad::pairwise_sum(terms) * w;
  };
  haar::QuadratureSpec q = params.quad;
  q.t_max = f.profile.t_support();
  haar::IntegrationResult r = haar::integrate_cartan(integrand, q, 1.0);
  return {r.value * params.hbar, std::move(r.warnings)};
}

TranslationReport verify_translation_property(const TypeChiFunction& f, const CartanFactors& omega,
                                              const TransformParams& params) {
  TranslationReport rep;
  const GroupElement w = recompose_cartan(omega);
  const TransformResult base = kangni_transform(f, params);
  const TransformResult moved = kangni_transform(haar::left_translate(as_group_function(f), inverse(w)), params);
  rep.base = base.value;
  rep.translated = moved.value;
  const double rotated = half_angle_action(d_t(omega.t), omega.psi);
  rep.predicted_ratio = std::exp(Complex(-omega.t / 2.0, -f.n * (omega.phi + rotated)));
  rep.observed_ratio = moved.value / base.value;
  const Complex predicted = base.value * rep.predicted_ratio;
  rep.discrepancy = std::abs(moved.value - predicted) / std::abs(predicted);
  rep.warnings = base.warnings;
  rep.warnings.insert(rep.warnings.end(), moved.warnings.begin(), moved.warnings.end());
  return rep;
}

}  // namespace su11::sph
