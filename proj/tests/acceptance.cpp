// Acceptance gate: one line per criterion. Tolerances and runtime budgets are
// pinned here rather than read from the config, so a config cannot loosen them.
//
//   acceptance [--criterion N] [--verbose]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "su11/json_io.hpp"
#include "su11/suite.hpp"

namespace {

using su11::io::Config;
using su11::suite::Report;

enum class Rel { less, greater, equal, within };

struct Bound {
  std::string check;
  Rel rel;
  double lo;
  double hi = 0.0;
};

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  double budget_seconds;
  std::vector<Bound> bounds;
};

std::vector<Criterion> criteria() {
  return {
      {1, "Cayley homomorphism", "core", 1.0, {{"core.cayley.homomorphism", Rel::less, 1e-12}}},
      {2,
       "decomposition round trips",
       "core",
       1.0,
       {{"core.decomposition.iwasawa_roundtrip", Rel::less, 1e-10},
        {"core.decomposition.cartan_roundtrip", Rel::less, 1e-10},
        {"core.decomposition.half_angle_formula", Rel::less, 1e-12},
        {"core.decomposition.sinh_formula", Rel::less, 1e-12},
        {"core.decomposition.exp_formula", Rel::less, 1e-12}}},
      {3,
       "cocycle identities",
       "core",
       1.0,
       {{"core.cocycle.u_multiplicative", Rel::less, 1e-12},
        {"core.cocycle.t_chain_rule", Rel::less, 1e-12},
        {"core.cocycle.action_derivative_fd", Rel::less, 1e-6}}},
      {4,
       "Haar left-invariance",
       "haar",
       60.0,
       {{"haar.invariance.k(pi/3)", Rel::less, 1e-4},
        {"haar.invariance.d(0.5)", Rel::less, 1e-4},
        {"haar.invariance.n(0.7)", Rel::less, 1e-4},
        {"haar.invariance.random_1", Rel::less, 1e-4},
        {"haar.invariance.random_2", Rel::less, 1e-4},
        {"haar.forms.agreement", Rel::less, 1e-4}}},
      {5,
       "principal series",
       "rep",
       30.0,
       {{"rep.weight_relation", Rel::less, 1e-12},
        {"rep.ladder_closed_form", Rel::less, 1e-12},
        {"rep.fd_bridge.sx_phi0", Rel::less, 1e-6},
        {"rep.fd_bridge.sy_random", Rel::less, 1e-6},
        {"rep.fd_bridge.h2_ratio", Rel::within, 3.2, 4.8},
        {"rep.unitarity.critical_line", Rel::less, 1e-6},
        {"rep.unitarity.off_line_drift", Rel::greater, 1e-3}}},
      {6,
       "Hopf suite (exact)",
       "hopf",
       120.0,
       {{"hopf.relations.defining", Rel::equal, 0},
        {"hopf.relations.normal_form_consistency", Rel::equal, 0},
        {"hopf.axiom.coassociativity", Rel::equal, 0},
        {"hopf.axiom.counit_left", Rel::equal, 0},
        {"hopf.axiom.counit_right", Rel::equal, 0},
        {"hopf.axiom.antipode_left", Rel::equal, 0},
        {"hopf.axiom.antipode_right", Rel::equal, 0},
        {"hopf.axiom.coproduct_multiplicative", Rel::equal, 0},
        {"hopf.axiom.counit_multiplicative", Rel::equal, 0},
        {"hopf.axiom.antipode_antimultiplicative", Rel::equal, 0},
        {"hopf.casimir.central_K", Rel::equal, 0},
        {"hopf.casimir.central_S+", Rel::equal, 0},
        {"hopf.casimir.central_S-", Rel::equal, 0},
        {"hopf.casimir.forms_equal", Rel::equal, 0},
        {"hopf.negative_control.mutated_coproduct", Rel::equal, 1},
        {"hopf.negative_control.linear_casimir", Rel::equal, 1}}},
      {7,
       "spherical transforms",
       "transform",
       120.0,
       {{"transform.type_chi.bi_equivariance", Rel::less, 1e-10},
        {"transform.projection.idempotence", Rel::less, 1e-10},
        {"transform.functional_equation.n0", Rel::less, 1e-4},
        {"transform.double_integral.n0", Rel::less, 1e-4},
        {"transform.double_integral.n1", Rel::less, 1e-4},
        {"transform.double_integral.n-2", Rel::less, 1e-4},
        {"transform.translation.u(pi/3)", Rel::less, 1e-3},
        {"transform.translation.d(0.3)", Rel::less, 1e-3},
        {"transform.translation.u(0.5)d(0.2)u(1.1)", Rel::less, 1e-3},
        {"transform.hbar_homogeneity", Rel::equal, 0}}},
  };
}

bool holds(const Bound& b, double v) {
  switch (b.rel) {
    case Rel::less: return v < b.lo;
    case Rel::greater: return v > b.lo;
    case Rel::equal: return v == b.lo;
    case Rel::within: return v >= b.lo && v <= b.hi;
  }
  return false;
}

std::string describe(const Bound& b) {
  std::ostringstream os;
  os << std::setprecision(3);
  switch (b.rel) {
    case Rel::less: os << "< " << b.lo; break;
    case Rel::greater: os << "> " << b.lo; break;
    case Rel::equal: os << "== " << b.lo; break;
    case Rel::within: os << "in [" << b.lo << ", " << b.hi << "]"; break;
  }
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

struct Timed {
  Report report;
  double seconds;
};

Timed run(const std::string& suite, const Config& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r = su11::suite::run_suite(suite, cfg);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(r), s};
}

bool judge(const Criterion& c, const Timed& t, bool verbose) {
  int ok = 0;
  std::string failing;
  for (const auto& b : c.bounds) {
    const auto* check = t.report.find(b.check);
    const bool pass = check != nullptr && holds(b, check->value);
    ok += pass ? 1 : 0;
    const std::string value = check ? fmt(check->value) : "missing";
    if (!pass) failing += (failing.empty() ? "" : "; ") + b.check + " = " + value + " (" + describe(b) + ")";
    if (verbose) {
      std::cout << "    " << (pass ? "pass " : "FAIL ") << b.check << " = " << value << " (" << describe(b) << ")\n";
    }
  }
  const bool in_budget = t.seconds < c.budget_seconds;
  const bool pass = ok == static_cast<int>(c.bounds.size()) && in_budget;
  std::cout << "criterion " << c.id << " [" << (pass ? "PASS" : "FAIL") << "] " << c.title << ": " << ok << "/"
            << c.bounds.size() << " within tolerance, runtime " << fmt(t.seconds) << " s (budget "
            << fmt(c.budget_seconds) << " s)";
  if (!failing.empty()) std::cout << "; failing: " << failing;
  if (!in_budget) std::cout << "; over runtime budget";
  std::cout << '\n';
  return pass;
}

bool determinism(bool verbose) {
  Config cfg;
  cfg.seed = 42;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string a = su11::suite::to_json(su11::suite::run_suite("all", cfg), cfg).dump(2);
  const std::string b = su11::suite::to_json(su11::suite::run_suite("all", cfg), cfg).dump(2);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = a == b;
  if (verbose) std::cout << "    report size " << a.size() << " bytes\n";
  std::cout << "criterion 8 [" << (pass ? "PASS" : "FAIL") << "] determinism: suite all --seed 42 twice, reports "
            << (pass ? "byte-identical" : "differ") << ", runtime " << fmt(s) << " s\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--verbose") == 0) {
      verbose = true;
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--verbose]\n";
      return 2;
    }
  }

  Config cfg;
  cfg.seed = 42;
  bool all_pass = true;
  std::map<std::string, Timed> cache;
  for (const auto& c : criteria()) {
    if (only && *only != c.id) continue;
    auto it = cache.find(c.suite);
    if (it == cache.end()) it = cache.emplace(c.suite, run(c.suite, cfg)).first;
    all_pass = judge(c, it->second, verbose) && all_pass;
  }
  if (!only || *only == 8) all_pass = determinism(verbose) && all_pass;
  return all_pass ? 0 : 1;
}
