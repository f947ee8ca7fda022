#pragma once

#include "su11/group.hpp"

namespace su11 {

/// g = k_θ d_t n_ξ. `scale` is the Ж/ħ prefactor; it is carried as metadata
/// and never multiplied into the matrix (a scalar multiple would leave SU(1,1)).
struct IwasawaFactors {
  double theta = 0.0;  // [0, 4π)
  double t = 0.0;
  double xi = 0.0;
  double scale = 1.0;
};

/// g = k_φ d_t k_ψ with t ≥ 0.
struct CartanFactors {
  double phi = 0.0;  // [0, 4π)
  double t = 0.0;    // ≥ 0
  double psi = 0.0;  // [0, 2π)
  double scale = 1.0;
};

/// Below this |β| the element is treated as lying in K for the Cartan form.
inline constexpr double kCartanDegenerateTol = 1e-12;

IwasawaFactors iwasawa(const GroupElement& g);
GroupElement recompose_iwasawa(const IwasawaFactors& f);

CartanFactors cartan(const GroupElement& g);
GroupElement recompose_cartan(const CartanFactors& f);

}  // namespace su11
