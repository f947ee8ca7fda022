#include "su11/uq.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace su11::uq {

namespace {

constexpr long kRewriteCap = 1'000'000;

// 1/(q − q⁻¹) = q/(q² − 1).
const RatFuncQ& inv_q_minus_qinv() {
  static const RatFuncQ c(LaurentPoly::q(1), LaurentPoly::q(2) - LaurentPoly(1));
  return c;
}

using Word = std::vector<std::pair<char, int>>;

int rank(char g) { return g == 'F' ? 0 : (g == 'K' ? 1 : 2); }

Word simplify(const Word& w) {
  Word out;
  for (const auto& [g, e] : w) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == g) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(g, e);
    }
  }
  return out;
}

Monomial monomial_of(const Word& w) {
  Monomial m;
  for (const auto& [g, e] : w) {
    if (g == 'F') m.r = e;
    if (g == 'K') m.l = e;
    if (g == 'E') m.m = e;
  }
  return m;
}

std::string monomial_string(const Monomial& m) {
  std::ostringstream os;
  os << "S-^" << m.r << " K^" << m.l << " S+^" << m.m;
  return os.str();
}

template <std::size_t N>
std::string key_string(const std::array<Monomial, N>& key) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += " (x) ";
    out += monomial_string(key[i]);
  }
  return out;
}

template <std::size_t N>
std::string first_term(const TensorElement<N>& t) {
  if (t.is_zero()) return "0";
  const auto& [k, c] = *t.terms().begin();
  return c.to_string() + " * " + key_string(k);
}

std::string first_term(const PbwElement& x) {
  if (x.is_zero()) return "0";
  const auto& [k, c] = *x.terms().begin();
  return c.to_string() + " * " + monomial_string(k);
}

PbwElement power(const PbwElement& x, int n) {
  PbwElement out = PbwElement::one();
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

Tensor2 power(const Tensor2& x, int n) {
  Tensor2 out = tensor(PbwElement::one(), PbwElement::one());
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

Tensor3 delta_left(const Tensor2& t, const HopfStructure& h) {
  Tensor3 out;
  for (const auto& [key, c] : t.terms()) {
    const Tensor2 d = coproduct(PbwElement(key[0]), h);
    for (const auto& [k2, c2] : d.terms()) out.add({k2[0], k2[1], key[1]}, c * c2);
  }
  return out;
}

Tensor3 delta_right(const Tensor2& t, const HopfStructure& h) {
  Tensor3 out;
  for (const auto& [key, c] : t.terms()) {
    const Tensor2 d = coproduct(PbwElement(key[1]), h);
    for (const auto& [k2, c2] : d.terms()) out.add({key[0], k2[0], k2[1]}, c * c2);
  }
  return out;
}

}  // namespace

PbwElement::PbwElement(RatFuncQ scalar) { add(Monomial{}, scalar); }

PbwElement::PbwElement(const Monomial& mono, RatFuncQ coeff) { add(mono, coeff); }

RatFuncQ PbwElement::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? RatFuncQ(0) : it->second;
}

void PbwElement::add(const Monomial& mono, const RatFuncQ& c) {
  if (mono.r < 0 || mono.m < 0) throw std::invalid_argument("PBW exponents r, m must be nonnegative");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

PbwElement operator*(const RatFuncQ& c, const PbwElement& x) {
  PbwElement out;
  for (const auto& [k, v] : x.terms_) out.add(k, c * v);
  return out;
}

PbwElement operator*(const PbwElement& x, const PbwElement& y) { return pbw_multiply(x, y); }

std::string PbwElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += "\n";
    out += c.to_string() + " * " + monomial_string(k);
  }
  return out;
}

PbwElement normal_order_word(const std::vector<Letter>& word) {
  Word start;
  for (const auto& l : word) {
    if (l.gen != 'E' && l.gen != 'F' && l.gen != 'K') throw std::invalid_argument("unknown generator letter");
    if ((l.gen == 'E' || l.gen == 'F') && l.exp < 0) throw std::invalid_argument("S± exponents must be nonnegative");
    start.emplace_back(l.gen, l.exp);
  }
  std::map<Word, RatFuncQ> pending;
  pending.emplace(simplify(start), RatFuncQ(1));
  PbwElement out;
  long steps = 0;
  auto push = [&pending](const Word& w, const RatFuncQ& c) {
    if (c.is_zero()) return;
    const Word s = simplify(w);
    auto [it, inserted] = pending.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  while (!pending.empty()) {
    if (++steps > kRewriteCap) {
      throw std::runtime_error("PBW rewriting exceeded the iteration cap; " + std::to_string(pending.size()) +
                               " words pending");
    }
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const RatFuncQ& c = node.mapped();
    std::size_t i = 0;
    while (i + 1 < w.size() && rank(w[i].first) < rank(w[i + 1].first)) ++i;
    if (i + 1 >= w.size()) {
      out.add(monomial_of(w), c);
      continue;
    }
    const auto [g1, e1] = w[i];
    const auto [g2, e2] = w[i + 1];
    Word prefix(w.begin(), w.begin() + static_cast<long>(i));
    Word suffix(w.begin() + static_cast<long>(i) + 2, w.end());
    auto splice = [&](std::initializer_list<std::pair<char, int>> mid) {
      Word nw = prefix;
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      return nw;
    };
    if (g1 == 'E' && g2 == 'K') {
      // S₊K → q⁻²KS₊
      push(splice({{'K', e2}, {'E', e1}}), c * RatFuncQ::q(-2 * e1 * e2));
    } else if (g1 == 'K' && g2 == 'F') {
      // KS₋ → q⁻²S₋K
      push(splice({{'F', e2}, {'K', e1}}), c * RatFuncQ::q(-2 * e1 * e2));
    } else {
      // S₊S₋ → S₋S₊ + (K − K⁻¹)/(q − q⁻¹)
      const RatFuncQ kc = c * inv_q_minus_qinv();
      push(splice({{'E', e1 - 1}, {'F', 1}, {'E', 1}, {'F', e2 - 1}}), c);
      push(splice({{'E', e1 - 1}, {'K', 1}, {'F', e2 - 1}}), kc);
      push(splice({{'E', e1 - 1}, {'K', -1}, {'F', e2 - 1}}), -kc);
    }
  }
  return out;
}

const PbwElement& normal_order_es(int m, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PbwElement> memo;
  std::lock_guard lock(mu);
  auto it = memo.find({m, r});
  if (it != memo.end()) return it->second;
  return memo.emplace(std::make_pair(m, r), normal_order_word({{'E', m}, {'F', r}})).first->second;
}

PbwElement pbw_multiply(const PbwElement& x, const PbwElement& y) {
  PbwElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const RatFuncQ c = ca * cb;
      if (a.m == 0 || b.r == 0) {
        // K^{l1} S₋^{r2} = q^{−2 l1 r2} S₋^{r2} K^{l1};  S₊^{m1} K^{l2} = q^{−2 m1 l2} K^{l2} S₊^{m1}.
        out.add({a.r + b.r, a.l + b.l, a.m + b.m}, c * RatFuncQ::q(-2 * (a.l * b.r + a.m * b.l)));
        continue;
      }
      const PbwElement& mid = normal_order_es(a.m, b.r);
      for (const auto& [t, ct] : mid.terms()) {
        const int shift = -2 * (a.l * t.r + t.m * b.l);
        out.add({a.r + t.r, a.l + t.l + b.l, t.m + b.m}, c * ct * RatFuncQ::q(shift));
      }
    }
  }
  return out;
}

Tensor2 tensor(const PbwElement& a, const PbwElement& b) {
  Tensor2 out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) out.add({ka, kb}, ca * cb);
  }
  return out;
}

HopfStructure HopfStructure::standard() {
  using P = PbwElement;
  HopfStructure h;
  h.delta_splus = tensor(P::splus(), P::one());
  h.delta_splus += tensor(P::k(1), P::splus());
  h.delta_sminus = tensor(P::sminus(), P::k(-1));
  h.delta_sminus += tensor(P::one(), P::sminus());
  h.delta_k = tensor(P::k(1), P::k(1));
  h.delta_kinv = tensor(P::k(-1), P::k(-1));
  h.antipode_splus = RatFuncQ(-1) * (P::k(-1) * P::splus());
  h.antipode_sminus = RatFuncQ(-1) * (P::sminus() * P::k(1));
  h.antipode_k = P::k(-1);
  h.antipode_kinv = P::k(1);
  return h;
}

Tensor2 coproduct(const PbwElement& x, const HopfStructure& h) {
  Tensor2 out;
  for (const auto& [mono, c] : x.terms()) {
    Tensor2 t = power(h.delta_sminus, mono.r);
    t = t * power(mono.l >= 0 ? h.delta_k : h.delta_kinv, mono.l >= 0 ? mono.l : -mono.l);
    t = t * power(h.delta_splus, mono.m);
    for (const auto& [k, ck] : t.terms()) out.add(k, c * ck);
  }
  return out;
}

RatFuncQ counit(const PbwElement& x) {
  RatFuncQ out;
  for (const auto& [mono, c] : x.terms()) {
    if (mono.r == 0 && mono.m == 0) out += c;
  }
  return out;
}

PbwElement antipode(const PbwElement& x, const HopfStructure& h) {
  PbwElement out;
  for (const auto& [mono, c] : x.terms()) {
    // 𝕊(S₋^r K^l S₊^m) = 𝕊(S₊)^m 𝕊(K)^l 𝕊(S₋)^r
    PbwElement t = power(h.antipode_splus, mono.m);
    t = t * power(mono.l >= 0 ? h.antipode_k : h.antipode_kinv, mono.l >= 0 ? mono.l : -mono.l);
    t = t * power(h.antipode_sminus, mono.r);
    out += c * t;
  }
  return out;
}

bool HopfReport::all_passed() const {
  for (const auto& a : axioms) {
    if (!a.passed) return false;
  }
  return true;
}

HopfReport verify_hopf_axioms(int max_degree, int trials, std::uint64_t seed, const HopfStructure& h) {
  if (max_degree < 0 || max_degree > 6) throw std::invalid_argument("max_degree must lie in [0, 6]");
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");

  std::vector<PbwElement> elements{PbwElement::splus(), PbwElement::sminus(), PbwElement::k(1), PbwElement::k(-1)};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) elements.push_back(random_pbw(rng, max_degree));

  HopfReport report;
  auto axiom = [](const char* name) {
    AxiomResult a;
    a.name = name;
    return a;
  };
  AxiomResult coassoc = axiom("coassociativity"), counit_left = axiom("counit_left"),
              counit_right = axiom("counit_right"), antipode_left = axiom("antipode_left"),
              antipode_right = axiom("antipode_right"), delta_hom = axiom("coproduct_multiplicative"),
              counit_hom = axiom("counit_multiplicative"), antipode_anti = axiom("antipode_antimultiplicative");

  auto fail = [](AxiomResult& a, const PbwElement& x, const std::string& term) {
    if (!a.passed) return;
    a.passed = false;
    a.counterexample = "x = " + first_term(x) + (x.terms().size() > 1 ? " + ..." : "") + "; residual term " + term;
  };

  for (const auto& x : elements) {
    const Tensor2 dx = coproduct(x, h);

    ++coassoc.cases;
    const Tensor3 diff = delta_left(dx, h) - delta_right(dx, h);
    if (!diff.is_zero()) fail(coassoc, x, first_term(diff));

    PbwElement left, right, sl, sr;
    for (const auto& [key, c] : dx.terms()) {
      left += (c * counit(PbwElement(key[0]))) * PbwElement(key[1]);
      right += (c * counit(PbwElement(key[1]))) * PbwElement(key[0]);
      sl += c * (antipode(PbwElement(key[0]), h) * PbwElement(key[1]));
      sr += c * (PbwElement(key[0]) * antipode(PbwElement(key[1]), h));
    }
    const PbwElement eps = PbwElement(counit(x));
    ++counit_left.cases;
    if (left != x) fail(counit_left, x, first_term(left - x));
    ++counit_right.cases;
    if (right != x) fail(counit_right, x, first_term(right - x));
    ++antipode_left.cases;
    if (sl != eps) fail(antipode_left, x, first_term(sl - eps));
    ++antipode_right.cases;
    if (sr != eps) fail(antipode_right, x, first_term(sr - eps));
  }

  // Multiplicativity on consecutive pairs, including generator pairs.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j : {i, (i + 1) % elements.size()}) {
      const PbwElement& x = elements[i];
      const PbwElement& y = elements[j];
      const PbwElement xy = x * y;
      ++delta_hom.cases;
      const Tensor2 d = coproduct(xy, h) - coproduct(x, h) * coproduct(y, h);
      if (!d.is_zero()) fail(delta_hom, xy, first_term(d));
      ++counit_hom.cases;
      const RatFuncQ e = counit(xy) - counit(x) * counit(y);
      if (!e.is_zero()) fail(counit_hom, xy, e.to_string());
      ++antipode_anti.cases;
      const PbwElement s = antipode(xy, h) - antipode(y, h) * antipode(x, h);
      if (!s.is_zero()) fail(antipode_anti, xy, first_term(s));
    }
  }

  report.axioms = {coassoc,        counit_left, counit_right,  antipode_left,
                   antipode_right, delta_hom,   counit_hom,    antipode_anti};
  return report;
}

PbwElement casimir(CasimirConvention c) {
  const LaurentPoly d = LaurentPoly::q(1) - LaurentPoly::q(-1);
  const LaurentPoly den = c == CasimirConvention::squared_denominator ? d * d : d;
  PbwElement omega = PbwElement::splus() * PbwElement::sminus();
  omega += RatFuncQ(LaurentPoly::q(-1), den) * PbwElement::k(1);
  omega += RatFuncQ(LaurentPoly::q(1), den) * PbwElement::k(-1);
  return omega;
}

PbwElement casimir_alternate_form() {
  const LaurentPoly d = LaurentPoly::q(1) - LaurentPoly::q(-1);
  PbwElement omega = PbwElement::sminus() * PbwElement::splus();
  omega += RatFuncQ(LaurentPoly::q(1), d * d) * PbwElement::k(1);
  omega += RatFuncQ(LaurentPoly::q(-1), d * d) * PbwElement::k(-1);
  return omega;
}

std::array<PbwElement, 3> casimir_commutators(const PbwElement& omega) {
  std::array<PbwElement, 3> out;
  const std::array<PbwElement, 3> gens{PbwElement::k(1), PbwElement::splus(), PbwElement::sminus()};
  for (std::size_t i = 0; i < 3; ++i) out[i] = omega * gens[i] - gens[i] * omega;
  return out;
}

Matrix2c matrix_eval(const PbwElement& x, std::complex<double> q) {
  if (q == 0.0) throw PoleError("q = 0 is not admissible");
  using C = std::complex<double>;
  auto mul = [](const Matrix2c& a, const Matrix2c& b) {
    return Matrix2c{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                    a[2] * b[1] + a[3] * b[3]};
  };
  auto mpow = [&mul](const Matrix2c& a, int n) {
    Matrix2c out{1.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < n; ++i) out = mul(out, a);
    return out;
  };
  const Matrix2c e{0.0, 1.0, 0.0, 0.0};
  const Matrix2c f{0.0, 0.0, 1.0, 0.0};
  Matrix2c out{0.0, 0.0, 0.0, 0.0};
  for (const auto& [mono, c] : x.terms()) {
    const C cv = c.evaluate(q);
    const Matrix2c kl{std::pow(q, mono.l), 0.0, 0.0, std::pow(q, -mono.l)};
    const Matrix2c m = mul(mul(mpow(f, mono.r), kl), mpow(e, mono.m));
    for (int i = 0; i < 4; ++i) out[i] += cv * m[i];
  }
  return out;
}

}  // namespace su11::uq
