#include "su11/haar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "su11/quadrature.hpp"

namespace su11::haar {

namespace {

constexpr double kBoundaryRatio = 1e-8;

quad::Rule1D noncompact_rule(Rule r, int n, double lo, double hi) {
  return r == Rule::gauss_legendre ? quad::gauss_legendre(n, lo, hi) : quad::trapezoid(n, lo, hi);
}

void check_boundary(double boundary_max, double interior_max, const char* where, Warnings& out) {
  if (boundary_max > kBoundaryRatio * interior_max) {
    std::ostringstream os;
    os << "integrand at " << where << " boundary reaches " << boundary_max << " (interior max "
       << interior_max << "); truncation box too small";
    out.push_back({Warning::Kind::truncation, os.str()});
  }
}

// e^{iθ/2}·h, i.e. k_θ·h.
GroupElement rotate_left(Complex phase, const GroupElement& h) {
  return GroupElement::unchecked(phase * h.alpha(), phase * h.beta());
}

}  // namespace

const char* to_string(Rule r) { return r == Rule::gauss_legendre ? "gauss_legendre" : "trapezoid"; }

Rule rule_from_string(const std::string& s) {
  if (s == "gauss_legendre") return Rule::gauss_legendre;
  if (s == "trapezoid") return Rule::trapezoid;
  throw ConfigError("unknown quadrature rule '" + s + "'");
}

void QuadratureSpec::validate() const {
  if (order_theta < 2 || order_t < 2 || order_xi < 2) throw ConfigError("quadrature orders must be >= 2");
  if (!(t_max > 0.0) || !(xi_max > 0.0)) throw ConfigError("t_max and xi_max must be positive");
}

GroupFunction left_translate(const GroupFunction& f, const GroupElement& g0) {
  GroupFunction out;
  out.evaluator = [f, g0](const GroupElement& x) { return f(mul(g0, x)); };
  if (f.support_hint) {
    // The Cartan radius grows by at most that of g0 under left translation.
    out.support_hint = *f.support_hint + 2.0 * std::asinh(std::abs(g0.beta()));
  }
  return out;
}

IntegrationResult integrate_iwasawa(const GroupFunction& f, const QuadratureSpec& q, double hbar) {
  q.validate();
  const auto th = quad::periodic(q.order_theta, kFourPi);
  const auto tr = noncompact_rule(q.rule, q.order_t, -q.t_max, q.t_max);
  const auto xr = noncompact_rule(q.rule, q.order_xi, -q.xi_max, q.xi_max);

  std::vector<Complex> phases(th.size());
  for (std::size_t i = 0; i < th.size(); ++i) phases[i] = std::polar(1.0, th.nodes[i] / 2.0);

  std::vector<Complex> terms;
  terms.reserve(th.size() * tr.size() * xr.size());
  double interior_max = 0.0;
  for (std::size_t j = 0; j < tr.size(); ++j) {
    const double t = tr.nodes[j];
    const GroupElement a = d_t(t);
    for (std::size_t k = 0; k < xr.size(); ++k) {
      const GroupElement an = mul(a, n_xi(xr.nodes[k]));
      const double w = tr.weights[j] * xr.weights[k] * std::exp(t);
      for (std::size_t i = 0; i < th.size(); ++i) {
        const Complex v = f(rotate_left(phases[i], an));
        interior_max = std::max(interior_max, std::abs(v));
        terms.push_back(v * (w * th.weights[i]));
      }
    }
  }

  IntegrationResult res;
  // Faces t = ±t_max and ξ = ±xi_max.
  double t_face = 0.0, xi_face = 0.0;
  for (std::size_t i = 0; i < th.size(); ++i) {
    for (const double t : {-q.t_max, q.t_max}) {
      for (const double xi : xr.nodes) {
        t_face = std::max(t_face, std::abs(f(rotate_left(phases[i], mul(d_t(t), n_xi(xi))))));
      }
    }
    for (const double xi : {-q.xi_max, q.xi_max}) {
      for (const double t : tr.nodes) {
        xi_face = std::max(xi_face, std::abs(f(rotate_left(phases[i], mul(d_t(t), n_xi(xi))))));
      }
    }
  }
  check_boundary(t_face, interior_max, "t", res.warnings);
  check_boundary(xi_face, interior_max, "xi", res.warnings);

  const Complex base = quad::pairwise_sum(terms) / kFourPi;
  res.value = base * hbar;
  return res;
}

IntegrationResult integrate_cartan(const GroupFunction& f, const QuadratureSpec& q, double hbar) {
  q.validate();
  const auto th = quad::periodic(q.order_theta, kFourPi);
  const auto tr = noncompact_rule(q.rule, q.order_t, 0.0, q.t_max);

  std::vector<Complex> phases(th.size());
  for (std::size_t i = 0; i < th.size(); ++i) phases[i] = std::polar(1.0, th.nodes[i] / 2.0);

  // k_φ d_t k_ψ = (e^{i(φ+ψ)/2} cosh t/2, e^{i(φ−ψ)/2} sinh t/2).
  std::vector<Complex> terms;
  terms.reserve(th.size() * th.size() * tr.size());
  double interior_max = 0.0;
  for (std::size_t j = 0; j < tr.size(); ++j) {
    const double t = tr.nodes[j];
    const double ch = std::cosh(t / 2.0), sh = std::sinh(t / 2.0);
    const double w = tr.weights[j] * std::sinh(t);
    for (std::size_t a = 0; a < th.size(); ++a) {
      for (std::size_t b = 0; b < th.size(); ++b) {
        const GroupElement g =
            GroupElement::unchecked(ch * phases[a] * phases[b], sh * phases[a] * std::conj(phases[b]));
        const Complex v = f(g);
        interior_max = std::max(interior_max, std::abs(v));
        terms.push_back(v * (w * th.weights[a] * th.weights[b]));
      }
    }
  }

  IntegrationResult res;
  double face = 0.0;
  const double ch = std::cosh(q.t_max / 2.0), sh = std::sinh(q.t_max / 2.0);
  for (std::size_t a = 0; a < th.size(); ++a) {
    for (std::size_t b = 0; b < th.size(); ++b) {
      const GroupElement g =
          GroupElement::unchecked(ch * phases[a] * phases[b], sh * phases[a] * std::conj(phases[b]));
      face = std::max(face, std::abs(f(g)));
    }
  }
  check_boundary(face, interior_max, "t", res.warnings);

  const Complex base = quad::pairwise_sum(terms) * (kTwoPi / (kFourPi * kFourPi));
  res.value = base * hbar;
  return res;
}

AuditResult audit_left_invariance(const GroupFunction& f, const GroupElement& g0, const QuadratureSpec& q) {
  AuditResult out;
  auto base = integrate_iwasawa(f, q);
  if (std::abs(base.value) < 1e-14) throw DivisionByZeroError("integral of f vanished; relative error undefined");
  auto moved = integrate_iwasawa(left_translate(f, g0), q);
  out.base = base.value;
  out.translated = moved.value;
  out.relative_error = std::abs(moved.value - base.value) / std::abs(base.value);
  out.warnings = std::move(base.warnings);
  out.warnings.insert(out.warnings.end(), moved.warnings.begin(), moved.warnings.end());
  return out;
}

GroupFunction bump_test_function(double tau_support) {
  const double x_support = std::cosh(tau_support) - 1.0;
  GroupFunction f;
  f.support_hint = tau_support;
  f.evaluator = [x_support](const GroupElement& g) -> Complex {
    const double u = 2.0 * std::norm(g.beta()) / x_support;  // (cosh τ − 1)/(cosh τ_s − 1)
    if (u >= 1.0) return 0.0;
    const double bump = std::exp(1.0 - 1.0 / (1.0 - u));
    return bump * (1.0 + 0.4 * g.alpha().real() + 0.25 * g.beta().imag());
  };
  return f;
}

}  // namespace su11::haar
