#pragma once

// Exact Laurent polynomials in one variable t with big-integer coefficients,
// and the exact rationals used for finite-type invariant values.

#include <aip/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace aip {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("exponent overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw InternalError("exponent overflow");
  return -a;
}

class LaurentPolynomial {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPolynomial() = default;

  /// Sum of coeff * t^exponent; repeated exponents accumulate.
  LaurentPolynomial(std::initializer_list<std::pair<std::int64_t, BigInt>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPolynomial constant(const BigInt& c) { return monomial(0, c); }
  static LaurentPolynomial monomial(std::int64_t exponent, const BigInt& coeff = 1) {
    LaurentPolynomial p;
    p.add_term(exponent, coeff);
    return p;
  }

  void add_term(std::int64_t exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Coefficient of t^exponent (zero when absent).
  BigInt coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::int64_t min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  std::int64_t max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// p(t^-1)
  LaurentPolynomial inverted() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(checked_neg(e), c);
    return out;
  }

  /// Value at t = 1.
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const BigInt& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) { return a *= BigInt(-1); }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& k) { return a *= k; }
  friend LaurentPolynomial operator*(const BigInt& k, LaurentPolynomial a) { return a *= k; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(checked_add(ea, eb), ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Ascending exponents, " + " / " - " separators, "t" for t^1, bare
  /// constants for t^0, unit coefficients omitted, "0" for zero.
  /// Example: "t^-1 - 2 + t", "-3*t^-2 + t^4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

/// Coefficient of x^n in p(e^x): (1/n!) * sum_i a_i * e_i^n.
inline Rational exponential_coefficient(const LaurentPolynomial& p, unsigned n) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * boost::multiprecision::pow(BigInt(e), n);
  BigInt fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  return Rational(sum, fact);
}

}  // namespace aip
