#pragma once

// Left-invariant Haar integration on SU(1,1) by tensor-grid quadrature, in
// Iwasawa coordinates (density e^t) and in Cartan coordinates (density sinh t).

#include <functional>
#include <optional>
#include <string>

#include "su11/errors.hpp"
#include "su11/group.hpp"

namespace su11::haar {

enum class Rule { gauss_legendre, trapezoid };

const char* to_string(Rule r);
Rule rule_from_string(const std::string& s);

/// Tensor grid. The θ axis is always the periodic trapezoid rule; `rule`
/// selects the rule on the noncompact t and ξ axes.
struct QuadratureSpec {
  int order_theta = 64;
  int order_t = 96;
  int order_xi = 96;
  double t_max = 4.0;
  double xi_max = 12.0;
  Rule rule = Rule::gauss_legendre;

  /// Throws ConfigError.
  void validate() const;
};

struct GroupFunction {
  std::function<Complex(const GroupElement&)> evaluator;
  /// Cartan radius beyond which the function is guaranteed to vanish.
  std::optional<double> support_hint;

  Complex operator()(const GroupElement& g) const { return evaluator(g); }
};

/// x ↦ f(g0·x).
GroupFunction left_translate(const GroupFunction& f, const GroupElement& g0);

struct IntegrationResult {
  Complex value;
  Warnings warnings;
};

/// (ħ/4π) ∫₀^{4π}∫∫ f(k_θ d_t n_ξ) e^t dθ dt dξ over the truncated box.
IntegrationResult integrate_iwasawa(const GroupFunction& f, const QuadratureSpec& q, double hbar = 1.0);

/// 2πħ ∫_K ∫₀^{t_max} ∫_K f(k d_t k′) sinh t dk dt dk′ with dk = dθ/4π.
IntegrationResult integrate_cartan(const GroupFunction& f, const QuadratureSpec& q, double hbar = 1.0);

struct AuditResult {
  double relative_error = 0.0;
  Complex base;
  Complex translated;
  Warnings warnings;
};

/// |∫f(g0 g)dg − ∫f(g)dg| / |∫f(g)dg| via integrate_iwasawa.
/// Throws DivisionByZeroError when |∫f| < 1e−14.
AuditResult audit_left_invariance(const GroupFunction& f, const GroupElement& g0, const QuadratureSpec& q);

/// Smooth compactly supported test function used by audits and the CLI:
/// a C^∞ bump in cosh τ (τ = Cartan radius, support τ < tau_support)
/// times 1 + 0.4·Re α + 0.25·Im β, so it is neither K-invariant nor radial.
GroupFunction bump_test_function(double tau_support);

}  // namespace su11::haar
