#include "su11/decompositions.hpp"

#include <cmath>

#include "su11/errors.hpp"

namespace su11 {

IwasawaFactors iwasawa(const GroupElement& g) {
  const Complex sum = g.alpha() + g.beta();
  if (std::abs(sum) < 1e-14) throw DegenerateInputError("|alpha + beta| vanished in Iwasawa decomposition");
  IwasawaFactors f;
  f.theta = wrap(2.0 * std::arg(sum), kFourPi);
  f.t = std::log(std::norm(sum));
  f.xi = ((g.alpha() - g.beta()) / sum).imag();
  return f;
}

GroupElement recompose_iwasawa(const IwasawaFactors& f) {
  return mul(mul(k_theta(f.theta), d_t(f.t)), n_xi(f.xi));
}

CartanFactors cartan(const GroupElement& g) {
  CartanFactors f;
  const double abs_beta = std::abs(g.beta());
  if (abs_beta <= kCartanDegenerateTol) {
    // g ∈ K: only φ+ψ is determined (mod 4π); put it all in φ.
    f.phi = wrap(2.0 * std::arg(g.alpha()), kFourPi);
    return f;
  }
  f.t = 2.0 * std::asinh(abs_beta);
  const double s_plus = std::arg(g.alpha());
  const double s_minus = std::arg(g.beta());
  f.phi = wrap(s_plus + s_minus, kFourPi);
  f.psi = wrap(s_plus - s_minus, kTwoPi);
  // Half-angle ambiguity: e^{i(φ+ψ)/2} may come out as −α/|α|.
  const Complex rebuilt = std::polar(1.0, (f.phi + f.psi) / 2.0);
  if ((rebuilt * std::conj(g.alpha())).real() < 0.0) f.phi = wrap(f.phi + kTwoPi, kFourPi);
  return f;
}

GroupElement recompose_cartan(const CartanFactors& f) {
  if (f.t < 0.0) throw NegativeTError("Cartan t must be nonnegative");
  return GroupElement::unchecked(std::polar(std::cosh(f.t / 2.0), (f.phi + f.psi) / 2.0),
                                 std::polar(std::sinh(f.t / 2.0), (f.phi - f.psi) / 2.0));
}

}  // namespace su11
