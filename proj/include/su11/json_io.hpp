#pragma once

// JSON forms of the library's value types and the flat run configuration.

#include <json.hpp>

#include <cstdint>
#include <string>

#include "su11/decompositions.hpp"
#include "su11/errors.hpp"
#include "su11/group.hpp"
#include "su11/haar.hpp"
#include "su11/principal_series.hpp"
#include "su11/spherical.hpp"

namespace su11::io {

using Json = nlohmann::json;

/// [re, im]
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"alpha": [re, im], "beta": [re, im]}; from_json validates the constraint.
Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j, double tol = kGroupTol);

/// {"form": "iwasawa", "theta", "t", "xi", "scale"} and
/// {"form": "cartan", "phi", "t", "psi", "scale"}.
Json to_json(const IwasawaFactors& f);
Json to_json(const CartanFactors& f);
IwasawaFactors iwasawa_from_json(const Json& j);
CartanFactors cartan_from_json(const Json& j);

Json to_json(const haar::QuadratureSpec& q);

/// {"order": P, "coeffs": [[re, im], ...]} with coeffs[p + P].
Json to_json(const rep::FourierFunction& f);
rep::FourierFunction fourier_from_json(const Json& j);

/// {"t_support": T, "dt": h, "values": [[re, im], ...]}.
Json to_json(const sph::RadialProfile& p);
sph::RadialProfile profile_from_json(const Json& j);
sph::RadialProfile load_profile(const std::string& path);

Json to_json(const Warnings& w);

/// Flat run configuration. Unknown keys and nonpositive tolerances are
/// rejected with ConfigError.
struct Config {
  haar::QuadratureSpec quad;
  double group_tol = kGroupTol;
  double audit_threshold = 1e-4;
  double agreement_threshold = 1e-4;
  double residual_tol = 1e-10;  // decomposition recomposition residual
  int truncation = 64;
  double hbar = 1.0;
  double zh = 1.0;
  std::uint64_t seed = 42;

  void validate() const;
};

Json to_json(const Config& c);
/// Starts from `base` and overrides the keys present in j.
Config config_from_json(const Json& j, Config base = {});
Config load_config(const std::string& path);

}  // namespace su11::io
