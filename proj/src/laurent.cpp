#include "su11/laurent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "su11/errors.hpp"

namespace su11::uq {

namespace {

using Dense = std::vector<mpq_class>;  // ascending powers, no trailing zeros

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Dense polynomial of q^{−min}·x.
Dense to_dense(const LaurentPoly& x, int min) {
  Dense d(x.max_exponent() - min + 1);
  for (const auto& [k, c] : x.terms()) d[k - min] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) out += LaurentPoly(d[i], static_cast<int>(i) + shift);
  }
  return out;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  Dense quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const mpq_class& lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class f = a.back() / lead;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {quot, a};
}

Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const mpq_class lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, mpq_class(c));
}

LaurentPoly::LaurentPoly(const mpq_class& c, int exponent) {
  mpq_class v = c;
  v.canonicalize();
  if (v != 0) terms_.emplace(exponent, v);
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

mpq_class LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(int k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> q) const {
  std::complex<double> acc = 0.0;
  for (const auto& [k, c] : terms_) acc += c.get_d() * std::pow(q, k);
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

RatFuncQ::RatFuncQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  canonicalize();
}

void RatFuncQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int a = num_.min_exponent();
  const int b = den_.min_exponent();
  Dense pn = to_dense(num_, a);
  Dense pd = to_dense(den_, b);
  if (pd.size() > 1) {
    const Dense g = gcd(pn, pd);
    if (g.size() > 1) {
      pn = divmod(pn, g).first;
      pd = divmod(pd, g).first;
    }
  }
  const mpq_class c0 = pd.front();
  for (auto& c : pn) c /= c0;
  for (auto& c : pd) c /= c0;
  num_ = from_dense(pn, a - b);
  den_ = from_dense(pd, 0);
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& o) { return *this += -o; }

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  // Laurent-polynomial operands need no reduction.
  if (den_.terms().size() > 1 || num_.is_zero()) canonicalize();
  return *this;
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  if (b.is_zero()) throw DivisionByZeroError("division by the zero rational function");
  return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
}

std::complex<double> RatFuncQ::evaluate(std::complex<double> q) const {
  const auto d = den_.evaluate(q);
  double scale = 0.0;
  for (const auto& [k, c] : den_.terms()) scale += std::abs(c.get_d()) * std::pow(std::abs(q), k);
  if (std::abs(d) <= 1e-12 * scale) throw PoleError("coefficient denominator " + den_.to_string() + " vanishes at q");
  return num_.evaluate(q) / d;
}

std::string RatFuncQ::to_string() const {
  if (den_ == LaurentPoly(1)) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace su11::uq
