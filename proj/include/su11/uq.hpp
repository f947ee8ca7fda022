#pragma once

// U_q(sl2) with generators S₊, S₋, K^{±1}:
//   K S₊ K⁻¹ = q² S₊,  K S₋ K⁻¹ = q⁻² S₋,  S₊S₋ − S₋S₊ = (K − K⁻¹)/(q − q⁻¹),
// stored exactly in the PBW basis S₋^r K^l S₊^m, with its Hopf structure.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/laurent.hpp"

namespace su11::uq {

/// S₋^r K^l S₊^m.
struct Monomial {
  int r = 0;
  int l = 0;
  int m = 0;

  int degree() const { return r + (l < 0 ? -l : l) + m; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class PbwElement {
 public:
  using Terms = std::map<Monomial, RatFuncQ>;

  PbwElement() = default;
  PbwElement(RatFuncQ scalar);  // NOLINT(google-explicit-constructor)
  PbwElement(const Monomial& mono, RatFuncQ coeff = RatFuncQ(1));

  static PbwElement one() { return PbwElement(RatFuncQ(1)); }
  static PbwElement splus() { return PbwElement(Monomial{0, 0, 1}); }
  static PbwElement sminus() { return PbwElement(Monomial{1, 0, 0}); }
  static PbwElement k(int power = 1) { return PbwElement(Monomial{0, power, 0}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFuncQ coeff(const Monomial& mono) const;
  void add(const Monomial& mono, const RatFuncQ& c);

  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator*(const RatFuncQ& c, const PbwElement& x);
  friend PbwElement operator*(const PbwElement& x, const PbwElement& y);
  friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PbwElement& a, const PbwElement& b) { return !(a == b); }

  /// One term per line, `coeff * S-^r K^l S+^m`, in ascending (r, l, m).
  std::string to_string() const;

 private:
  Terms terms_;
};

PbwElement pbw_multiply(const PbwElement& x, const PbwElement& y);

/// Normal form of S₊^m S₋^r by exhaustive word rewriting. Memoized.
/// Throws std::runtime_error if rewriting exceeds the iteration cap.
const PbwElement& normal_order_es(int m, int r);

/// Normal form of an arbitrary word of generators, given as letters
/// {'E' = S₊, 'F' = S₋, 'K'} with integer exponents.
struct Letter {
  char gen;
  int exp;
};
PbwElement normal_order_word(const std::vector<Letter>& word);

/// Elements of U^{⊗N} with both tensor legs in PBW normal form.
template <std::size_t N>
class TensorElement {
 public:
  using Key = std::array<Monomial, N>;
  using Terms = std::map<Key, RatFuncQ>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& key, const RatFuncQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, -c);
    return a;
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  /// (a⊗b)(c⊗d) = ac⊗bd.
  friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    TensorElement out;
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        // Expand the componentwise products leg by leg.
        std::vector<std::pair<Key, RatFuncQ>> partial{{Key{}, cx * cy}};
        for (std::size_t leg = 0; leg < N; ++leg) {
          const PbwElement prod = pbw_multiply(PbwElement(kx[leg]), PbwElement(ky[leg]));
          std::vector<std::pair<Key, RatFuncQ>> next;
          for (const auto& [key, c] : partial) {
            for (const auto& [mono, cm] : prod.terms()) {
              Key k2 = key;
              k2[leg] = mono;
              next.emplace_back(k2, c * cm);
            }
          }
          partial = std::move(next);
        }
        for (const auto& [key, c] : partial) out.add(key, c);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

using Tensor2 = TensorElement<2>;
using Tensor3 = TensorElement<3>;

Tensor2 tensor(const PbwElement& a, const PbwElement& b);

/// Generator images defining Δ, ε, 𝕊. The default is the standard structure
/// Δ(S₊)=S₊⊗1+K⊗S₊, Δ(S₋)=S₋⊗K⁻¹+1⊗S₋, Δ(K)=K⊗K, ε(S±)=0, ε(K)=1,
/// 𝕊(S₊)=−K⁻¹S₊, 𝕊(S₋)=−S₋K, 𝕊(K)=K⁻¹. Images may be replaced to inject faults.
struct HopfStructure {
  Tensor2 delta_splus;
  Tensor2 delta_sminus;
  Tensor2 delta_k;
  Tensor2 delta_kinv;
  PbwElement antipode_splus;
  PbwElement antipode_sminus;
  PbwElement antipode_k;
  PbwElement antipode_kinv;

  static HopfStructure standard();
};

Tensor2 coproduct(const PbwElement& x, const HopfStructure& h = HopfStructure::standard());
RatFuncQ counit(const PbwElement& x);
PbwElement antipode(const PbwElement& x, const HopfStructure& h = HopfStructure::standard());

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // input element and offending term, when failed
};

struct HopfReport {
  std::vector<AxiomResult> axioms;
  bool all_passed() const;
};

/// Checks coassociativity, both counit laws, both antipode laws, Δ and ε
/// multiplicativity and 𝕊 anti-multiplicativity on the generators and on
/// `trials` seeded random elements of degree ≤ max_degree (≤ 6).
HopfReport verify_hopf_axioms(int max_degree, int trials, std::uint64_t seed,
                              const HopfStructure& h = HopfStructure::standard());

/// Random element with 1–3 terms, each of degree ≤ max_degree.
template <typename Rng>
PbwElement random_pbw(Rng& rng, int max_degree);

enum class CasimirConvention { squared_denominator, linear_denominator };

/// S₊S₋ + (q⁻¹K + qK⁻¹)/(q − q⁻¹)^e with e = 2 (or 1 for the control).
PbwElement casimir(CasimirConvention c = CasimirConvention::squared_denominator);
/// S₋S₊ + (qK + q⁻¹K⁻¹)/(q − q⁻¹)².
PbwElement casimir_alternate_form();

/// Commutators [ω, X] for X = K, S₊, S₋ in that order.
std::array<PbwElement, 3> casimir_commutators(const PbwElement& omega);

using Matrix2c = std::array<std::complex<double>, 4>;  // row-major

/// K ↦ diag(q, 1/q), S₊ ↦ E₁₂, S₋ ↦ E₂₁. Throws PoleError.
Matrix2c matrix_eval(const PbwElement& x, std::complex<double> q);

// ---------------------------------------------------------------------------

template <typename Rng>
PbwElement random_pbw(Rng& rng, int max_degree) {
  auto uniform = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  PbwElement out;
  const int n_terms = uniform(1, 3);
  for (int i = 0; i < n_terms; ++i) {
    Monomial mono;
    int budget = uniform(0, max_degree);
    mono.r = uniform(0, budget);
    budget -= mono.r;
    mono.m = uniform(0, budget);
    budget -= mono.m;
    mono.l = uniform(-budget, budget);
    // Draws are sequenced explicitly so the stream is compiler-independent.
    const int magnitude = uniform(1, 3);
    const int sign = uniform(0, 1) == 0 ? -1 : 1;
    const int denom = uniform(1, 2);
    const int exponent = uniform(-1, 1);
    const int constant = uniform(0, 1);
    const LaurentPoly poly =
        LaurentPoly(mpq_class(sign * magnitude, denom), exponent) + LaurentPoly(static_cast<long>(constant));
    out.add(mono, RatFuncQ(poly));
  }
  if (out.is_zero()) out = PbwElement::one();
  return out;
}

}  // namespace su11::uq
