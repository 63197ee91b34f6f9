#include "dissecta/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace dissecta {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

namespace {

Rational power(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

// Appends "coeff*monomial" with a sign separator; monomial may be empty.
void append_term(std::string& out, const Rational& coeff, const std::string& monomial) {
  const bool negative = coeff < 0;
  const Rational mag = abs(coeff);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += to_string(mag) + "*" + monomial;
  }
}

std::string power_string(const std::string& var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

Polynomial Polynomial::monomial(Rational coeff, unsigned exponent) {
  Polynomial p;
  p.add_term(coeff, exponent);
  return p;
}

Rational Polynomial::coefficient(unsigned exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(x, e);
  return sum;
}

Polynomial Polynomial::negate_variable() const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e % 2 ? Rational(-c) : c, e);
  return out;
}

void Polynomial::add_term(const Rational& coeff, unsigned exponent) {
  if (coeff == 0) return;
  Rational& slot = terms_[exponent];
  slot += coeff;
  slot.canonicalize();
  if (slot == 0) terms_.erase(exponent);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    c *= s;
    c.canonicalize();
  }
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, it->second, power_string(var, it->first));
  }
  return out;
}

Rational Polynomial2::coefficient(unsigned ex, unsigned ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial2::add_term(const Rational& coeff, unsigned ex, unsigned ey) {
  if (coeff == 0) return;
  Rational& slot = terms_[{ex, ey}];
  slot += coeff;
  slot.canonicalize();
  if (slot == 0) terms_.erase({ex, ey});
}

Rational Polynomial2::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(x, e.first) * power(y, e.second);
  return sum;
}

Polynomial Polynomial2::specialize(int sign, const Rational& y0) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Rational k = c * power(y0, e.second);
    if (sign < 0 && e.first % 2 == 1) k = -k;
    out.add_term(k, e.first);
  }
  return out;
}

std::string Polynomial2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first.first + a.first.second;
    const unsigned db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono = power_string("x", e.first);
    const std::string ypart = power_string("y", e.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    append_term(out, c, mono);
  }
  return out;
}

}  // namespace dissecta
