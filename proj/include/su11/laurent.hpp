#pragma once

// Exact coefficient arithmetic over ℚ(q): Laurent polynomials with rational
// coefficients and reduced fractions of them.

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>

namespace su11::uq {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& c, int exponent = 0);

  /// q^k.
  static LaurentPoly q(int k = 1) { return LaurentPoly(mpq_class(1), k); }

  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;
  mpq_class coeff(int k) const;
  const std::map<int, mpq_class>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  std::complex<double> evaluate(std::complex<double> q) const;
  /// Ascending powers, e.g. "-1/2*q^-1 + 3 + q^2".
  std::string to_string() const;

 private:
  void add_term(int k, const mpq_class& c);
  std::map<int, mpq_class> terms_;
};

/// num/den in canonical form: den has lowest exponent 0 with coefficient 1,
/// and gcd(num, den) = 1 as polynomials.
class RatFuncQ {
 public:
  RatFuncQ() : den_(1) {}
  RatFuncQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFuncQ(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZeroError when den is zero.
  RatFuncQ(LaurentPoly num, LaurentPoly den);

  static RatFuncQ q(int k = 1) { return RatFuncQ(LaurentPoly::q(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFuncQ& operator+=(const RatFuncQ& o);
  RatFuncQ& operator-=(const RatFuncQ& o);
  RatFuncQ& operator*=(const RatFuncQ& o);
  RatFuncQ operator-() const;
  friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
  friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
  friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

  /// Throws PoleError when the denominator vanishes at q.
  std::complex<double> evaluate(std::complex<double> q) const;
  /// "(num)" or "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace su11::uq
