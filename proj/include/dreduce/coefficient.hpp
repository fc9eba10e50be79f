#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace dreduce {

/// Exact element of Q(nu): a reduced quotient of two univariate polynomials in
/// the single transcendental parameter nu.
///
/// Canonical form: gcd(numerator, denominator) = 1 and the denominator is
/// monic. Zero is stored as numerator {} over denominator {1}, so equality of
/// values is equality of representations.
class Coefficient {
 public:
  /// Dense polynomial in nu, lowest power first, no trailing zeros.
  using Poly = std::vector<mpq_class>;

  Coefficient();
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const mpq_class& value);
  Coefficient(Poly numerator, Poly denominator);

  /// c * nu^k for any integer k.
  static Coefficient parameter_power(int k, const mpq_class& c = 1);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True when no nu occurs (a plain rational number).
  bool is_rational() const { return den_.size() == 1 && num_.size() <= 1; }
  /// True for c * nu^k, c != 0.
  bool is_parameter_monomial() const;

  /// Requires is_rational().
  mpq_class rational_value() const;
  /// Sign of the leading numerator coefficient (-1, 0, 1).
  int leading_sign() const;

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  Coefficient& operator/=(const Coefficient& rhs);
  Coefficient inverse() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);
  /// Arbitrary but fixed total order, used only for deterministic tie-breaks.
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b);

  double evaluate(double nu) const;

  /// Expression text that parses back to the same value, e.g. "3", "-1/2",
  /// "nu", "1/nu", "(nu + 1)/(2*nu^2)".
  std::string to_string(const std::string& parameter_name) const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace dreduce
