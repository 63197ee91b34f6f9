#pragma once

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace dissecta {

using Rational = mpq_class;

/// Renders p/q, or just p when the denominator is 1.
std::string to_string(const Rational& r);

/// Polynomial in one variable with exact rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial monomial(Rational coeff, unsigned exponent);

  /// Nonzero terms, exponent -> coefficient.
  const std::map<unsigned, Rational>& terms() const noexcept { return terms_; }

  Rational coefficient(unsigned exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool has_integer_coefficients() const;

  Rational evaluate(const Rational& x) const;
  /// p(-x).
  Polynomial negate_variable() const;

  void add_term(const Rational& coeff, unsigned exponent);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Descending degree, e.g. "4*x^2 + 4*x + 1"; "0" when empty.
  std::string to_string(const std::string& var = "x") const;

 private:
  std::map<unsigned, Rational> terms_;
};

/// Polynomial in x and y with exact rational coefficients.
class Polynomial2 {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  ///< (deg x, deg y)

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(unsigned ex, unsigned ey) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Rational& coeff, unsigned ex, unsigned ey);

  Rational evaluate(const Rational& x, const Rational& y) const;
  /// p(sign * x, y0) as a polynomial in x; sign is +1 or -1.
  Polynomial specialize(int sign, const Rational& y0) const;

  friend bool operator==(const Polynomial2& a, const Polynomial2& b) {
    return a.terms_ == b.terms_;
  }

  /// Descending total degree, then descending power of x:
  /// "x^2*y^2 - 2*x^2*y - 2*x*y^2 + x^2 + 2*x*y + y^2".
  std::string to_string() const;

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace dissecta
