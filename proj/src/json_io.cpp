#include "su11/json_io.hpp"

#include <fstream>
#include <set>

namespace su11::io {

namespace {

double number(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  if (!j.at(key).is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
  return j.at(key).get<double>();
}

double number_or(const Json& j, const char* key, double fallback) { return j.contains(key) ? number(j, key) : fallback; }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const GroupElement& g) { return {{"alpha", complex_to_json(g.alpha())}, {"beta", complex_to_json(g.beta())}}; }

GroupElement group_element_from_json(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta")) {
    throw ConfigError("group element must be {\"alpha\": [re, im], \"beta\": [re, im]}");
  }
  return GroupElement::make(complex_from_json(j.at("alpha")), complex_from_json(j.at("beta")), tol);
}

Json to_json(const IwasawaFactors& f) {
  return {{"form", "iwasawa"}, {"theta", f.theta}, {"t", f.t}, {"xi", f.xi}, {"scale", f.scale}};
}

Json to_json(const CartanFactors& f) {
  return {{"form", "cartan"}, {"phi", f.phi}, {"t", f.t}, {"psi", f.psi}, {"scale", f.scale}};
}

IwasawaFactors iwasawa_from_json(const Json& j) {
  if (j.value("form", "") != "iwasawa") throw ConfigError("expected form \"iwasawa\"");
  IwasawaFactors f;
  f.theta = wrap(number(j, "theta"), kFourPi);
  f.t = number(j, "t");
  f.xi = number(j, "xi");
  f.scale = number_or(j, "scale", 1.0);
  if (!(f.scale > 0.0)) throw ConfigError("scale must be positive");
  return f;
}

CartanFactors cartan_from_json(const Json& j) {
  if (j.value("form", "") != "cartan") throw ConfigError("expected form \"cartan\"");
  CartanFactors f;
  f.phi = wrap(number(j, "phi"), kFourPi);
  f.t = number(j, "t");
  f.psi = wrap(number(j, "psi"), kTwoPi);
  f.scale = number_or(j, "scale", 1.0);
  if (!(f.scale > 0.0)) throw ConfigError("scale must be positive");
  return f;
}

Json to_json(const haar::QuadratureSpec& q) {
  return {{"order_theta", q.order_theta}, {"order_t", q.order_t}, {"order_xi", q.order_xi},
          {"t_max", q.t_max},             {"xi_max", q.xi_max},   {"rule", haar::to_string(q.rule)}};
}

Json to_json(const rep::FourierFunction& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
  return {{"order", f.order()}, {"coeffs", coeffs}};
}

rep::FourierFunction fourier_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw ConfigError("Fourier function must be {\"order\": P, \"coeffs\": [[re, im], ...]}");
  }
  const auto& arr = j.at("coeffs");
  if (arr.size() % 2 != 1) throw ConfigError("coefficient list must have odd length 2P+1");
  const int order = static_cast<int>(arr.size() / 2);
  if (j.contains("order") && j.at("order").get<int>() != order) throw ConfigError("order does not match coeffs");
  std::vector<Complex> c;
  for (const auto& x : arr) c.push_back(complex_from_json(x));
  return rep::FourierFunction(order, std::move(c));
}

Json to_json(const sph::RadialProfile& p) {
  Json values = Json::array();
  for (const auto& v : p.values()) values.push_back(complex_to_json(v));
  return {{"t_support", p.t_support()}, {"dt", p.dt()}, {"values", values}};
}

sph::RadialProfile profile_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j.at("values").is_array()) {
    throw ConfigError("profile must be {\"t_support\": T, \"dt\": h, \"values\": [[re, im], ...]}");
  }
  std::vector<Complex> values;
  for (const auto& v : j.at("values")) values.push_back(complex_from_json(v));
  const double dt = number(j, "dt");
  sph::RadialProfile p(dt, std::move(values));
  if (j.contains("t_support") && std::abs(number(j, "t_support") - p.t_support()) > 1e-9 * p.t_support()) {
    throw ConfigError("t_support disagrees with dt and the number of values");
  }
  return p;
}

sph::RadialProfile load_profile(const std::string& path) { return profile_from_json(read_file(path)); }

Json to_json(const Warnings& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back({{"kind", to_string(x.kind)}, {"message", x.message}});
  return out;
}

void Config::validate() const {
  quad.validate();
  if (!(group_tol > 0.0) || !(audit_threshold > 0.0) || !(agreement_threshold > 0.0) || !(residual_tol > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (truncation < 1) throw ConfigError("truncation must be at least 1");
  if (!(hbar > 0.0) || !(zh > 0.0)) throw ConfigError("hbar and zh must be positive");
}

Json to_json(const Config& c) {
  Json j = to_json(c.quad);
  j["group_tol"] = c.group_tol;
  j["audit_threshold"] = c.audit_threshold;
  j["agreement_threshold"] = c.agreement_threshold;
  j["residual_tol"] = c.residual_tol;
  j["truncation"] = c.truncation;
  j["hbar"] = c.hbar;
  j["zh"] = c.zh;
  j["seed"] = c.seed;
  return j;
}

Config config_from_json(const Json& j, Config base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"order_theta",   "order_t",    "order_xi", "t_max", "xi_max",
                                           "rule",          "group_tol",  "audit_threshold",
                                           "agreement_threshold", "residual_tol", "truncation",
                                           "hbar",          "zh",         "seed"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  auto integer = [&j](const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) throw ConfigError(std::string("key '") + key + "' must be an integer");
    return j.at(key).get<int>();
  };
  Config c = base;
  c.quad.order_theta = integer("order_theta", c.quad.order_theta);
  c.quad.order_t = integer("order_t", c.quad.order_t);
  c.quad.order_xi = integer("order_xi", c.quad.order_xi);
  c.quad.t_max = number_or(j, "t_max", c.quad.t_max);
  c.quad.xi_max = number_or(j, "xi_max", c.quad.xi_max);
  if (j.contains("rule")) {
    if (!j.at("rule").is_string()) throw ConfigError("key 'rule' must be a string");
    c.quad.rule = haar::rule_from_string(j.at("rule").get<std::string>());
  }
  c.group_tol = number_or(j, "group_tol", c.group_tol);
  c.audit_threshold = number_or(j, "audit_threshold", c.audit_threshold);
  c.agreement_threshold = number_or(j, "agreement_threshold", c.agreement_threshold);
  c.residual_tol = number_or(j, "residual_tol", c.residual_tol);
  c.truncation = integer("truncation", c.truncation);
  c.hbar = number_or(j, "hbar", c.hbar);
  c.zh = number_or(j, "zh", c.zh);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("key 'seed' must be a nonnegative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  c.validate();
  return c;
}

Config load_config(const std::string& path) { return config_from_json(read_file(path)); }

}  // namespace su11::io
