// Command-line front end: decompositions, Haar audits, principal-series
// checks, Hopf verification, spherical transforms and the named suites.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "su11/decompositions.hpp"
#include "su11/errors.hpp"
#include "su11/group.hpp"
#include "su11/haar.hpp"
#include "su11/json_io.hpp"
#include "su11/principal_series.hpp"
#include "su11/spherical.hpp"
#include "su11/suite.hpp"
#include "su11/uq.hpp"

namespace {

using namespace su11;
using io::Json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitResidual = 3;

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success, every check passed\n"
    "  1  a check failed (the report is still printed)\n"
    "  2  input error: unparsable arguments, invalid config or files,\n"
    "     matrices off the group\n"
    "  3  numerical-residual error: recomposition residual above tolerance,\n"
    "     singular actions, poles, vanishing normalizers\n";

class ResidualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool csv = false;
  bool no_timestamp = false;
};

std::vector<double> parse_reals(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("cannot parse ") + what + " '" + text + "'");
    }
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  const auto v = parse_reals(text, "complex number");
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() != 2) throw ConfigError("complex number must be RE or RE,IM");
  return {v[0], v[1]};
}

GroupElement parse_element(const std::string& text, double tol) {
  const auto v = parse_reals(text, "group element");
  if (v.size() != 4) throw ConfigError("group element must be RE(alpha),IM(alpha),RE(beta),IM(beta)");
  return GroupElement::make({v[0], v[1]}, {v[2], v[3]}, tol);
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(Json j, const Globals& g) {
  if (!g.no_timestamp) j["timestamp"] = timestamp();
  std::cout << j.dump(2) << '\n';
}

io::Config load(const Globals& g) {
  io::Config cfg = g.config_path.empty() ? io::Config{} : io::load_config(g.config_path);
  if (g.seed) cfg.seed = *g.seed;
  cfg.validate();
  return cfg;
}

sph::RadialProfile profile_or_bump(const std::string& path) {
  return path.empty() ? sph::bump_profile(2.0) : io::load_profile(path);
}

// ---------------------------------------------------------------------------

struct DecomposeArgs {
  std::string matrix;
  std::string form = "iwasawa";
  bool sl2r = false;
  double input_tol = 1e-3;
};

int cmd_decompose(const DecomposeArgs& a, const Globals& g) {
  const io::Config cfg = load(g);
  const auto v = parse_reals(a.matrix, "matrix");
  GroupElement elem;
  if (a.sl2r) {
    if (v.size() != 4) throw ConfigError("--sl2r expects 4 reals a,b,c,d");
    RealMatrix2 m{v[0], v[1], v[2], v[3]};
    if (std::abs(m.det() - 1.0) > a.input_tol) {
      throw DeterminantError("ad - bc = " + std::to_string(m.det()) + " is not 1");
    }
    const double r = std::sqrt(m.det());
    elem = cayley_to_su11((1.0 / r) * m, 1e-12);
  } else {
    Complex alpha, beta;
    if (v.size() == 4) {
      alpha = {v[0], v[1]};
      beta = {v[2], v[3]};
    } else if (v.size() == 8) {
      // Full matrix (α, β; γ, δ) as re,im pairs; requires γ = β̄ and δ = ᾱ.
      alpha = {v[0], v[1]};
      beta = {v[2], v[3]};
      const Complex gamma{v[4], v[5]}, delta{v[6], v[7]};
      if (std::abs(gamma - std::conj(beta)) > a.input_tol || std::abs(delta - std::conj(alpha)) > a.input_tol) {
        throw DeterminantError("matrix is not of the form (alpha, beta; conj(beta), conj(alpha))");
      }
    } else {
      throw ConfigError("matrix must have 4 or 8 reals");
    }
    elem = renormalize(GroupElement::make(alpha, beta, a.input_tol));
  }

  Json out;
  double residual = 0.0;
  const double scale = cfg.zh / cfg.hbar;
  if (a.form == "iwasawa") {
    IwasawaFactors f = iwasawa(elem);
    f.scale = scale;
    residual = recompose_iwasawa(f).distance(elem);
    out = io::to_json(f);
  } else if (a.form == "cartan") {
    CartanFactors f = cartan(elem);
    f.scale = scale;
    residual = recompose_cartan(f).distance(elem);
    out = io::to_json(f);
  } else {
    throw ConfigError("form must be iwasawa or cartan");
  }
  out["residual"] = residual;
  out["element"] = io::to_json(elem);
  emit(out, g);
  if (residual > cfg.residual_tol) {
    throw ResidualError("recomposition residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct HaarArgs {
  std::string g0 = "0.9689124217106447,0,0.24740395925452294,0";  // d(0.5)
  double support = 2.0;
};

int cmd_haar_check(const HaarArgs& a, const Globals& g) {
  const io::Config cfg = load(g);
  const GroupElement g0 = parse_element(a.g0, cfg.group_tol);
  const haar::AuditResult r = haar::audit_left_invariance(haar::bump_test_function(a.support), g0, cfg.quad);
  const bool passed = r.relative_error < cfg.audit_threshold && r.warnings.empty();
  emit({{"g0", io::to_json(g0)},
        {"relative_error", r.relative_error},
        {"threshold", cfg.audit_threshold},
        {"base", io::complex_to_json(r.base)},
        {"translated", io::complex_to_json(r.translated)},
        {"spec", io::to_json(cfg.quad)},
        {"warnings", io::to_json(r.warnings)},
        {"passed", passed}},
       g);
  return passed ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------

struct RepArgs {
  double j = 0.0;
  std::string s = "0.5,0";
  std::string g = "1,0,0,0";
  std::string input;
  std::optional<int> order;
  std::string direction = "sx";
  double h = 1e-4;
  double threshold = 1e-6;
};

rep::RepParams rep_params(const RepArgs& a) {
  if (a.j != 0.0 && a.j != 0.5) throw ConfigError("j must be 0 or 0.5");
  return rep::RepParams(a.j == 0.5 ? 1 : 0, parse_complex(a.s));
}

rep::FourierFunction read_fourier(const std::string& input) {
  if (input.empty()) throw ConfigError("--input is required");
  // Inline JSON or a file name.
  if (input.front() == '{') {
    try {
      return io::fourier_from_json(Json::parse(input));
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
  }
  std::ifstream in(input);
  if (!in) throw ConfigError("cannot open '" + input + "'");
  try {
    return io::fourier_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

int cmd_rep_apply(const RepArgs& a, const Globals& gl) {
  const io::Config cfg = load(gl);
  const auto params = rep_params(a);
  const GroupElement g = parse_element(a.g, cfg.group_tol);
  const rep::FourierFunction phi = read_fourier(a.input);
  const int out_order = a.order.value_or(std::max(phi.order(), cfg.truncation));
  if (out_order < phi.order()) throw ConfigError("--order must be at least the input order");
  const rep::ApplyResult r = rep::apply_V(params, g, phi, out_order);
  Json out = io::to_json(r.function);
  out["warnings"] = io::to_json(r.warnings);
  emit(out, gl);
  return kExitPass;
}

int cmd_rep_ladder_table(const RepArgs& a, const Globals&) {
  const auto params = rep_params(a);
  const int order = a.order.value_or(8);
  const Complex s = params.s();
  std::cout << "p,splus_re,splus_im,sminus_re,sminus_im\n";
  std::cout << std::setprecision(17);
  for (int p = -order; p <= order; ++p) {
    const Complex up = s + (p + params.j());
    const Complex down = s - (p + params.j());
    std::cout << p << ',' << up.real() << ',' << up.imag() << ',' << down.real() << ',' << down.imag() << '\n';
  }
  return kExitPass;
}

int cmd_rep_fd_check(const RepArgs& a, const Globals& gl) {
  const auto params = rep_params(a);
  const int order = a.order.value_or(16);
  if (a.h < 1e-6 || a.h > 1e-2) throw ConfigError("h must lie in [1e-6, 1e-2]");
  rep::Direction dir;
  RealMatrix2 gen;
  if (a.direction == "sx") {
    dir = rep::Direction::Sx;
    gen = rep::generator_sx();
  } else if (a.direction == "sy") {
    dir = rep::Direction::Sy;
    gen = rep::generator_sy();
  } else {
    throw ConfigError("direction must be sx or sy");
  }
  const rep::FourierFunction phi = a.input.empty() ? rep::FourierFunction::basis(0, order) : read_fourier(a.input);
  const double dev = rep::max_abs_diff(rep::finite_difference_dV(params, gen, phi, a.h), rep::apply_dV(params, dir, phi));
  const bool passed = dev < a.threshold;
  emit({{"direction", a.direction},
        {"h", a.h},
        {"order", phi.order()},
        {"max_deviation", dev},
        {"threshold", a.threshold},
        {"passed", passed}},
       gl);
  return passed ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------

struct HopfArgs {
  int max_degree = 4;
  int trials = 100;
  bool check = false;
};

int cmd_hopf_verify(const HopfArgs& a, const Globals& g) {
  const io::Config cfg = load(g);
  if (a.max_degree < 0 || a.max_degree > 6) throw ConfigError("--max-degree must lie in [0, 6]");
  if (a.trials < 0) throw ConfigError("--trials must be nonnegative");
  const uq::HopfReport r = uq::verify_hopf_axioms(a.max_degree, a.trials, cfg.seed);
  Json axioms = Json::array();
  for (const auto& x : r.axioms) {
    Json j{{"name", x.name}, {"passed", x.passed}, {"cases", x.cases}};
    if (!x.passed) j["counterexample"] = x.counterexample;
    axioms.push_back(j);
  }
  emit({{"max_degree", a.max_degree},
        {"trials", a.trials},
        {"seed", cfg.seed},
        {"axioms", axioms},
        {"passed", r.all_passed()}},
       g);
  return r.all_passed() ? kExitPass : kExitCheckFailure;
}

int cmd_hopf_casimir(const HopfArgs& a, const Globals& g) {
  const uq::PbwElement omega = uq::casimir();
  bool central = true;
  for (const auto& c : uq::casimir_commutators(omega)) central = central && c.is_zero();
  const bool forms = omega == uq::casimir_alternate_form();
  const bool passed = central && forms;
  if (g.json) {
    Json j{{"normal_form", omega.to_string()}};
    if (a.check) {
      j["central"] = central;
      j["forms_equal"] = forms;
      j["passed"] = passed;
    }
    emit(j, g);
  } else {
    std::cout << omega.to_string() << '\n';
    if (a.check) std::cout << (passed ? "PASS" : "FAIL") << " central=" << central << " forms_equal=" << forms << '\n';
  }
  return !a.check || passed ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------

struct TransformArgs {
  int n = 0;
  std::string profile;
  double t = 0.0;
  std::string mu = "0,0";
  std::optional<double> hbar;
  double alpha = 0.0;
  double s = 0.0;
  double beta = 0.0;
  int csv_points = 41;
  double threshold = 1e-3;
};

sph::TransformParams transform_params(const TransformArgs& a, const io::Config& cfg) {
  sph::TransformParams p;
  p.n = a.n;
  p.mu = parse_complex(a.mu);
  p.hbar = a.hbar.value_or(cfg.hbar);
  if (!(p.hbar > 0.0)) throw ConfigError("hbar must be positive");
  p.quad = cfg.quad;
  return p;
}

// t vs F(t) over [−T, T].
void abel_csv(const sph::TypeChiFunction& f, const sph::TransformParams& p, int points) {
  const double T = f.profile.t_support();
  std::cout << "t,re,im\n" << std::setprecision(17);
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : -T + 2 * T * i / (points - 1);
    const Complex v = sph::abel_transform(f, t, p).value;
    std::cout << t << ',' << v.real() << ',' << v.imag() << '\n';
  }
}

int cmd_transform_abel(const TransformArgs& a, const Globals& g) {
  const io::Config cfg = load(g);
  const sph::TypeChiFunction f{a.n, profile_or_bump(a.profile)};
  const auto p = transform_params(a, cfg);
  if (g.csv) {
    abel_csv(f, p, a.csv_points);
    return kExitPass;
  }
  const sph::TransformResult r = sph::abel_transform(f, a.t, p);
  emit({{"n", a.n},
        {"t", a.t},
        {"hbar", p.hbar},
        {"value", io::complex_to_json(r.value)},
        {"warnings", io::to_json(r.warnings)}},
       g);
  return kExitPass;
}

int cmd_transform_kangni(const TransformArgs& a, const Globals& g) {
  const io::Config cfg = load(g);
  const sph::TypeChiFunction f{a.n, profile_or_bump(a.profile)};
  const auto p = transform_params(a, cfg);
  if (g.csv) {
    abel_csv(f, p, a.csv_points);
    return kExitPass;
  }
  const sph::TransformResult r = sph::kangni_transform(f, p);
  emit({{"n", a.n},
        {"mu", io::complex_to_json(p.mu)},
        {"hbar", p.hbar},
        {"value", io::complex_to_json(r.value)},
        {"warnings", io::to_json(r.warnings)}},
       g);
  return kExitPass;
}

int cmd_transform_translate(const TransformArgs& a, const Globals& g) {
  const io::Config cfg = load(g);
  const sph::TypeChiFunction f{a.n, profile_or_bump(a.profile)};
  const auto p = transform_params(a, cfg);
  if (a.s < 0.0) throw NegativeTError("s must be nonnegative");
  const CartanFactors omega{wrap(a.alpha, kFourPi), a.s, wrap(a.beta, kTwoPi), 1.0};
  const sph::TranslationReport r = sph::verify_translation_property(f, omega, p);
  const bool passed = r.discrepancy < a.threshold;
  emit({{"n", a.n},
        {"omega", io::to_json(omega)},
        {"mu", io::complex_to_json(p.mu)},
        {"base", io::complex_to_json(r.base)},
        {"translated", io::complex_to_json(r.translated)},
        {"predicted_ratio", io::complex_to_json(r.predicted_ratio)},
        {"observed_ratio", io::complex_to_json(r.observed_ratio)},
        {"discrepancy", r.discrepancy},
        {"threshold", a.threshold},
        {"warnings", io::to_json(r.warnings)},
        {"passed", passed}},
       g);
  return passed ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------

int cmd_suite(const std::string& name, const Globals& g) {
  const io::Config cfg = load(g);
  const suite::Report r = suite::run_suite(name, cfg);
  emit(suite::to_json(r, cfg), g);
  return r.passed() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis on SU(1,1): decompositions, Haar integration, principal series, "
               "U_q(sl2) Hopf structure and spherical transforms."};
  app.footer(kExitCodeHelp);
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--config", g.config_path, "Flat JSON config file");
  app.add_option("--seed", g.seed, "Seed override");
  app.add_flag("--json", g.json, "Emit JSON where text is the default");
  app.add_flag("--csv", g.csv, "Emit CSV tables where supported");
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp field from JSON output");

  std::function<int()> action;

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Iwasawa or Cartan factors of an element");
  decompose->add_option("matrix", dec.matrix,
                        "4 reals RE(a),IM(a),RE(b),IM(b), or 8 reals for the full complex matrix")
      ->required();
  decompose->add_option("--form", dec.form, "iwasawa or cartan")->capture_default_str();
  decompose->add_flag("--sl2r", dec.sl2r, "Read 4 reals a,b,c,d as a real unimodular matrix");
  decompose->add_option("--input-tol", dec.input_tol, "Tolerance on the group constraint of the input")
      ->capture_default_str();
  decompose->callback([&] { action = [&] { return cmd_decompose(dec, g); }; });

  HaarArgs haar_args;
  auto* haar_check = app.add_subcommand("haar-check", "Left-invariance audit of the Haar quadrature");
  haar_check->add_option("--g0", haar_args.g0, "Translation RE(a),IM(a),RE(b),IM(b); default d(0.5)");
  haar_check->add_option("--support", haar_args.support, "Cartan radius of the test bump")->capture_default_str();
  haar_check->callback([&] { action = [&] { return cmd_haar_check(haar_args, g); }; });

  RepArgs rep_args;
  auto* rep = app.add_subcommand("rep", "Principal-series operators");
  rep->require_subcommand(1);
  auto add_rep_common = [&](CLI::App* c) {
    c->add_option("--j", rep_args.j, "0 or 0.5")->capture_default_str();
    c->add_option("--s", rep_args.s, "RE,IM")->capture_default_str();
    c->add_option("--order", rep_args.order, "Truncation order");
  };
  auto* rep_apply = rep->add_subcommand("apply", "Apply V_g to coefficients");
  add_rep_common(rep_apply);
  rep_apply->add_option("--g", rep_args.g, "RE(a),IM(a),RE(b),IM(b)")->capture_default_str();
  rep_apply->add_option("--input", rep_args.input, "Coefficient JSON (inline or file)")->required();
  rep_apply->callback([&] { action = [&] { return cmd_rep_apply(rep_args, g); }; });
  auto* rep_ladder = rep->add_subcommand("ladder-table", "CSV of the ladder coefficients s+(p+j), s-(p+j)");
  add_rep_common(rep_ladder);
  rep_ladder->callback([&] { action = [&] { return cmd_rep_ladder_table(rep_args, g); }; });
  auto* rep_fd = rep->add_subcommand("fd-check", "Finite-difference bridge against the recurrences");
  add_rep_common(rep_fd);
  rep_fd->add_option("--direction", rep_args.direction, "sx or sy")->capture_default_str();
  rep_fd->add_option("--step", rep_args.h, "Finite-difference step h in [1e-6, 1e-2]")->capture_default_str();
  rep_fd->add_option("--input", rep_args.input, "Coefficient JSON (default phi_0)");
  rep_fd->add_option("--threshold", rep_args.threshold)->capture_default_str();
  rep_fd->callback([&] { action = [&] { return cmd_rep_fd_check(rep_args, g); }; });

  HopfArgs hopf_args;
  auto* hopf = app.add_subcommand("hopf", "Exact Hopf-algebra checks");
  hopf->require_subcommand(1);
  auto* verify = hopf->add_subcommand("verify", "Hopf axioms on generators and random elements");
  verify->add_option("--max-degree", hopf_args.max_degree)->capture_default_str();
  verify->add_option("--trials", hopf_args.trials)->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_hopf_verify(hopf_args, g); }; });
  auto* cas = hopf->add_subcommand("casimir", "Normal form of the Casimir element");
  cas->add_flag("--check", hopf_args.check, "Check centrality and the alternate form");
  cas->callback([&] { action = [&] { return cmd_hopf_casimir(hopf_args, g); }; });

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Abel and spherical transforms of type chi_n");
  transform->require_subcommand(1);
  auto add_tr_common = [&](CLI::App* c) {
    c->add_option("--n", tr.n)->capture_default_str();
    c->add_option("--profile", tr.profile, "Radial profile JSON (default: bump of support 2)");
    c->add_option("--mu", tr.mu, "RE,IM")->capture_default_str();
    c->add_option("--hbar", tr.hbar, "Overrides the config value");
    c->add_option("--points", tr.csv_points, "Rows of the --csv table")->capture_default_str();
  };
  auto* abel = transform->add_subcommand("abel", "F_f(t)");
  add_tr_common(abel);
  abel->add_option("--t", tr.t)->capture_default_str();
  abel->callback([&] { action = [&] { return cmd_transform_abel(tr, g); }; });
  auto* kangni = transform->add_subcommand("kangni", "Spherical transform of type chi_n");
  add_tr_common(kangni);
  kangni->callback([&] { action = [&] { return cmd_transform_kangni(tr, g); }; });
  auto* translate = transform->add_subcommand("translate-check", "Translation behaviour for omega = u_a d_s u_b");
  add_tr_common(translate);
  translate->add_option("--alpha", tr.alpha)->capture_default_str();
  translate->add_option("--s", tr.s)->capture_default_str();
  translate->add_option("--beta", tr.beta)->capture_default_str();
  translate->add_option("--threshold", tr.threshold)->capture_default_str();
  translate->callback([&] { action = [&] { return cmd_transform_translate(tr, g); }; });

  std::string suite_name;
  auto* suite_cmd = app.add_subcommand("suite", "Run a named verification suite");
  std::vector<std::string> choices = suite::suite_names();
  choices.emplace_back("all");
  suite_cmd->add_option("name", suite_name, "core, haar, rep, hopf, transform or all")
      ->required()
      ->check(CLI::IsMember(choices));
  suite_cmd->callback([&] { action = [&] { return cmd_suite(suite_name, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action();
  } catch (const ResidualError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResidual;
  } catch (const DeterminantError& e) {
    std::cerr << "DeterminantError: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConfigError& e) {
    std::cerr << "ConfigError: " << e.what() << '\n';
    return kExitInput;
  } catch (const DegenerateInputError& e) {
    std::cerr << "DegenerateInputError: " << e.what() << '\n';
    return kExitInput;
  } catch (const NegativeTError& e) {
    std::cerr << "NegativeTError: " << e.what() << '\n';
    return kExitInput;
  } catch (const SingularActionError& e) {
    std::cerr << "SingularActionError: " << e.what() << '\n';
    return kExitResidual;
  } catch (const PoleError& e) {
    std::cerr << "PoleError: " << e.what() << '\n';
    return kExitResidual;
  } catch (const DivisionByZeroError& e) {
    std::cerr << "DivisionByZeroError: " << e.what() << '\n';
    return kExitResidual;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
