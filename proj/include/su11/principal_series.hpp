#pragma once

// Principal-series operators V^{j,s} acting on truncated Fourier series over
// the unit circle in the basis φ_p(ζ) = ζ^{−p}, plus the derived action of
// S_x, S_y and the ladder combinations S_± = S_x ± iS_y.

#include <vector>

#include "su11/errors.hpp"
#include "su11/group.hpp"

namespace su11::rep {

/// j ∈ {0, ½} (stored as 2j ∈ {0, 1}) and complex s.
/// Extending j beyond {0, ½} would need a branch policy for u^{2j}.
class RepParams {
 public:
  RepParams(int two_j, Complex s);

  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  Complex s() const { return s_; }
  bool unitary() const { return s_.real() == 0.5; }

 private:
  int two_j_;
  Complex s_;
};

/// Σ_{|p| ≤ P} c_p ζ^{−p}.
class FourierFunction {
 public:
  explicit FourierFunction(int order = 0);
  FourierFunction(int order, std::vector<Complex> coeffs);  // coeffs[p + P]

  static FourierFunction basis(int p, int order);

  int order() const { return order_; }
  Complex coeff(int p) const;  // 0 outside [−P, P]
  Complex& coeff_ref(int p);
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex evaluate(Complex zeta) const;
  /// Truncates or zero-pads to a new order.
  FourierFunction resized(int order) const;
  double norm() const;

  FourierFunction& operator+=(const FourierFunction& o);
  friend FourierFunction operator+(FourierFunction a, const FourierFunction& b) { return a += b; }
  friend FourierFunction operator-(const FourierFunction& a, const FourierFunction& b);
  friend FourierFunction operator*(Complex s, const FourierFunction& a);

 private:
  int order_;
  std::vector<Complex> coeffs_;
};

/// max_p |a_p − b_p| over the union of both ranges.
double max_abs_diff(const FourierFunction& a, const FourierFunction& b);

/// Σ_p c_p d̄_p; equals ∫ φ ψ̄ dζ with dζ = dθ/2π.
Complex inner_product(const FourierFunction& phi, const FourierFunction& psi);

/// Samples f at the M-point uniform grid θ_m = 2πm/M and returns the
/// coefficients for |p| ≤ P (M ≥ 2P+1). Also reports the energy of the
/// coefficients with P < |p| ≤ M/2.
struct Projection {
  FourierFunction function;
  double tail_norm = 0.0;
  double total_norm = 0.0;
};
template <typename F>
Projection project_samples(const F& f, int order, int grid);

struct ApplyResult {
  FourierFunction function;
  Warnings warnings;
};

/// (V_g φ)(ζ) = exp(−s t(g⁻¹,ζ)) u(g⁻¹,ζ)^{2j} φ(g⁻¹·ζ), evaluated pointwise
/// on an oversampled grid and projected onto |p| ≤ out_order.
ApplyResult apply_V(const RepParams& params, const GroupElement& g, const FourierFunction& phi, int out_order);

/// 𝔻: c_p ↦ −ip·c_p.
FourierFunction apply_D(const FourierFunction& phi);

enum class Direction { Sx, Sy, Splus, Sminus };
const char* to_string(Direction d);

/// Coefficient recurrences for dV_{S_x}, dV_{S_y}; S_± by composition
/// dV_{S_x} ± i·dV_{S_y}. Output order is P+1.
FourierFunction apply_dV(const RepParams& params, Direction dir, const FourierFunction& phi);

/// Single-term ladder forms: S_+ φ_p = (s+p+j) φ_{p+1}, S_− φ_p = (s−p−j) φ_{p−1}.
FourierFunction apply_ladder_closed_form(const RepParams& params, Direction dir, const FourierFunction& phi);

/// Real traceless generators whose Cayley images exponentiate to d_t and to
/// g_t = (cosh t/2, −i sinh t/2; i sinh t/2, cosh t/2).
RealMatrix2 generator_sx();
RealMatrix2 generator_sy();

/// Central difference (V_{exp(hS)}φ − V_{exp(−hS)}φ)/(2h), returned at order P+1.
FourierFunction finite_difference_dV(const RepParams& params, const RealMatrix2& tangent,
                                     const FourierFunction& phi, double h);

/// Pointwise forms of dV_{S_x}φ and dV_{S_y}φ at ζ, with (𝔻φ)ζ read as
/// (𝔻φ)(ζ). Used only to cross-check the coefficient recurrences.
Complex pointwise_dV(const RepParams& params, Direction dir, const FourierFunction& phi, Complex zeta);

// ---------------------------------------------------------------------------

template <typename F>
Projection project_samples(const F& f, int order, int grid) {
  const int m_count = grid;
  std::vector<Complex> samples(m_count);
  std::vector<Complex> roots(m_count);
  for (int m = 0; m < m_count; ++m) {
    roots[m] = std::polar(1.0, kTwoPi * m / m_count);
    samples[m] = f(roots[m]);
  }
  // c_p = (1/M) Σ_m F(ζ_m) ζ_m^{p}
  const int half = (m_count - 1) / 2;
  Projection out;
  std::vector<Complex> kept(2 * order + 1);
  double tail = 0.0, total = 0.0;
  for (int p = -half; p <= half; ++p) {
    Complex acc = 0.0;
    for (int m = 0; m < m_count; ++m) {
      const long idx = ((static_cast<long>(p) * m) % m_count + m_count) % m_count;
      acc += samples[m] * roots[idx];
    }
    acc /= static_cast<double>(m_count);
    total += std::norm(acc);
    if (std::abs(p) <= order) {
      kept[p + order] = acc;
    } else {
      tail += std::norm(acc);
    }
  }
  out.function = FourierFunction(order, std::move(kept));
  out.tail_norm = std::sqrt(tail);
  out.total_norm = std::sqrt(total);
  return out;
}

}  // namespace su11::rep
