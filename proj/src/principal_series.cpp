#include "su11/principal_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace su11::rep {

namespace {

constexpr double kTailRatio = 1e-8;
const Complex kI{0.0, 1.0};

// Grid large enough that aliasing from |p| > 3P is the only contamination.
int grid_size(int out_order) { return std::max(4 * out_order + 4, 16); }

}  // namespace

RepParams::RepParams(int two_j, Complex s) : two_j_(two_j), s_(s) {
  if (two_j != 0 && two_j != 1) throw std::invalid_argument("j must be 0 or 1/2");
}

FourierFunction::FourierFunction(int order) : order_(order), coeffs_(2 * order + 1) {
  if (order < 0) throw std::invalid_argument("Fourier truncation order must be nonnegative");
}

FourierFunction::FourierFunction(int order, std::vector<Complex> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(2 * order + 1)) {
    throw std::invalid_argument("Fourier coefficient vector must have 2P+1 entries");
  }
}

FourierFunction FourierFunction::basis(int p, int order) {
  FourierFunction f(std::max(order, std::abs(p)));
  f.coeff_ref(p) = 1.0;
  return f;
}

Complex FourierFunction::coeff(int p) const {
  if (std::abs(p) > order_) return 0.0;
  return coeffs_[p + order_];
}

Complex& FourierFunction::coeff_ref(int p) {
  if (std::abs(p) > order_) throw std::out_of_range("Fourier index outside truncation");
  return coeffs_[p + order_];
}

Complex FourierFunction::evaluate(Complex zeta) const {
  // Horner in ζ⁻¹ over p = P..−P, then rescale by ζ^{P}.
  const Complex inv = 1.0 / zeta;
  Complex acc = 0.0;
  for (int p = order_; p >= -order_; --p) acc = acc * inv + coeffs_[p + order_];
  return acc * std::pow(zeta, order_);
}

FourierFunction FourierFunction::resized(int order) const {
  FourierFunction out(order);
  for (int p = -std::min(order, order_); p <= std::min(order, order_); ++p) out.coeff_ref(p) = coeff(p);
  return out;
}

double FourierFunction::norm() const {
  double acc = 0.0;
  for (const auto& c : coeffs_) acc += std::norm(c);
  return std::sqrt(acc);
}

FourierFunction& FourierFunction::operator+=(const FourierFunction& o) {
  if (o.order_ > order_) *this = resized(o.order_);
  for (int p = -o.order_; p <= o.order_; ++p) coeffs_[p + order_] += o.coeff(p);
  return *this;
}

FourierFunction operator-(const FourierFunction& a, const FourierFunction& b) { return a + Complex(-1.0) * b; }

FourierFunction operator*(Complex s, const FourierFunction& a) {
  FourierFunction out = a;
  for (int p = -a.order(); p <= a.order(); ++p) out.coeff_ref(p) *= s;
  return out;
}

double max_abs_diff(const FourierFunction& a, const FourierFunction& b) {
  const int n = std::max(a.order(), b.order());
  double worst = 0.0;
  for (int p = -n; p <= n; ++p) worst = std::max(worst, std::abs(a.coeff(p) - b.coeff(p)));
  return worst;
}

Complex inner_product(const FourierFunction& phi, const FourierFunction& psi) {
  const int n = std::min(phi.order(), psi.order());
  Complex acc = 0.0;
  for (int p = -n; p <= n; ++p) acc += phi.coeff(p) * std::conj(psi.coeff(p));
  return acc;
}

ApplyResult apply_V(const RepParams& params, const GroupElement& g, const FourierFunction& phi, int out_order) {
  const GroupElement ginv = inverse(g);
  const Complex s = params.s();
  const int two_j = params.two_j();
  auto integrand = [&](Complex zeta) {
    const Complex den = std::conj(ginv.beta()) * zeta + std::conj(ginv.alpha());
    const double abs_den = std::abs(den);
    if (abs_den < 1e-14) throw SingularActionError("singular action in apply_V");
    const double t = 2.0 * std::log(abs_den);
    const Complex w = (ginv.alpha() * zeta + ginv.beta()) / den;
    Complex value = std::exp(-s * t) * phi.evaluate(w / std::abs(w));
    if (two_j == 1) value *= den / abs_den;
    return value;
  };
  Projection proj = project_samples(integrand, out_order, grid_size(out_order));
  ApplyResult out{std::move(proj.function), {}};
  if (proj.tail_norm > kTailRatio * proj.total_norm) {
    std::ostringstream os;
    os << "discarded spectral tail " << proj.tail_norm << " exceeds 1e-8 of norm " << proj.total_norm
       << " at truncation P=" << out_order;
    out.warnings.push_back({Warning::Kind::truncation, os.str()});
  }
  return out;
}

FourierFunction apply_D(const FourierFunction& phi) {
  FourierFunction out(phi.order());
  for (int p = -phi.order(); p <= phi.order(); ++p) out.coeff_ref(p) = Complex(0.0, -p) * phi.coeff(p);
  return out;
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Sx:
      return "Sx";
    case Direction::Sy:
      return "Sy";
    case Direction::Splus:
      return "Splus";
    case Direction::Sminus:
      return "Sminus";
  }
  return "?";
}

FourierFunction apply_dV(const RepParams& params, Direction dir, const FourierFunction& phi) {
  const int n = phi.order();
  const Complex s = params.s();
  const double j = params.j();
  if (dir == Direction::Splus || dir == Direction::Sminus) {
    const Complex sign = dir == Direction::Splus ? kI : -kI;
    return apply_dV(params, Direction::Sx, phi) + sign * apply_dV(params, Direction::Sy, phi);
  }
  FourierFunction out(n + 1);
  for (int p = -n; p <= n; ++p) {
    const Complex c = phi.coeff(p);
    const Complex down = (s - double(p) - j) / 2.0;  // φ_{p−1}
    const Complex up = (s + double(p) + j) / 2.0;    // φ_{p+1}
    if (dir == Direction::Sx) {
      out.coeff_ref(p - 1) += down * c;
      out.coeff_ref(p + 1) += up * c;
    } else {
      out.coeff_ref(p - 1) += kI * down * c;
      out.coeff_ref(p + 1) += -kI * up * c;
    }
  }
  return out;
}

FourierFunction apply_ladder_closed_form(const RepParams& params, Direction dir, const FourierFunction& phi) {
  if (dir != Direction::Splus && dir != Direction::Sminus) {
    throw std::invalid_argument("closed ladder form exists only for Splus and Sminus");
  }
  const int n = phi.order();
  const Complex s = params.s();
  const double j = params.j();
  FourierFunction out(n + 1);
  for (int p = -n; p <= n; ++p) {
    if (dir == Direction::Splus) {
      out.coeff_ref(p + 1) += (s + double(p) + j) * phi.coeff(p);
    } else {
      out.coeff_ref(p - 1) += (s - double(p) - j) * phi.coeff(p);
    }
  }
  return out;
}

RealMatrix2 generator_sx() { return {0.5, 0.0, 0.0, -0.5}; }
RealMatrix2 generator_sy() { return {0.0, 0.5, 0.5, 0.0}; }

FourierFunction finite_difference_dV(const RepParams& params, const RealMatrix2& tangent,
                                     const FourierFunction& phi, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) throw std::invalid_argument("finite-difference step must lie in [1e-6, 1e-2]");
  const GroupElement plus = cayley_to_su11(exp_traceless(h * tangent), 1e-10);
  const GroupElement minus = cayley_to_su11(exp_traceless(-h * tangent), 1e-10);
  // Extra headroom keeps the O(h²) spill into |p| > P+1 out of the tail monitor.
  const int work_order = phi.order() + 8;
  const FourierFunction vp = apply_V(params, plus, phi, work_order).function;
  const FourierFunction vm = apply_V(params, minus, phi, work_order).function;
  return (Complex(1.0 / (2.0 * h)) * (vp - vm)).resized(phi.order() + 1);
}

Complex pointwise_dV(const RepParams& params, Direction dir, const FourierFunction& phi, Complex zeta) {
  const Complex s = params.s();
  const double j = params.j();
  const Complex inv = 1.0 / zeta;
  const Complex f = phi.evaluate(zeta);
  const Complex df = apply_D(phi).evaluate(zeta);
  switch (dir) {
    case Direction::Sx:
      return 0.5 * ((s - j) * zeta + (s + j) * inv) * f - 0.5 * kI * (zeta - inv) * df;
    case Direction::Sy:
      return 0.5 * kI * ((s - j) * zeta - (s + j) * inv) * f + 0.5 * (zeta + inv) * df;
    default:
      throw std::invalid_argument("pointwise form defined for Sx and Sy only");
  }
}

}  // namespace su11::rep
