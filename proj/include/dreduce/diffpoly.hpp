#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dreduce/coefficient.hpp"

namespace dreduce {

/// The four commuting derivations. The numeric value is the slot in a
/// MultiIndex.
enum class Derivation : std::uint8_t { t = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<Derivation, 4> kAllDerivations = {Derivation::t, Derivation::x,
                                                              Derivation::y, Derivation::z};

char to_char(Derivation d);
std::optional<Derivation> derivation_from_char(char c);

/// Orders of differentiation in (t, x, y, z).
using MultiIndex = std::array<std::uint8_t, 4>;

int total_order(const MultiIndex& alpha);
/// Componentwise maximum.
MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
/// Componentwise a <= b.
bool divides(const MultiIndex& a, const MultiIndex& b);
/// b - a; requires divides(a, b).
MultiIndex quotient(const MultiIndex& b, const MultiIndex& a);

using IndeterminateId = std::uint16_t;

/// theta(base): a dependent indeterminate differentiated by the multi-index.
struct DerivativeKey {
  IndeterminateId base = 0;
  MultiIndex alpha{};

  int order() const { return total_order(alpha); }
  DerivativeKey derive(Derivation d, int times = 1) const;
  DerivativeKey derive(const MultiIndex& theta) const;
  /// Same base and this->alpha <= other.alpha componentwise.
  bool divides(const DerivativeKey& other) const {
    return base == other.base && dreduce::divides(alpha, other.alpha);
  }
  bool proper_divisor_of(const DerivativeKey& other) const { return divides(other) && alpha != other.alpha; }

  /// Storage order only; see Ranking for the mathematical order.
  std::uint64_t packed() const {
    return (std::uint64_t{base} << 32) | (std::uint64_t{alpha[0]} << 24) |
           (std::uint64_t{alpha[1]} << 16) | (std::uint64_t{alpha[2]} << 8) | alpha[3];
  }
  friend bool operator==(const DerivativeKey& a, const DerivativeKey& b) { return a.packed() == b.packed(); }
  friend auto operator<=>(const DerivativeKey& a, const DerivativeKey& b) { return a.packed() <=> b.packed(); }
};

/// Names of the dependent indeterminates and of the (optional, single)
/// parameter occurring in coefficients.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(const std::vector<std::string>& dependents, std::string parameter = "nu");

  /// Returns the id of an existing dependent name or registers a new one.
  IndeterminateId declare(const std::string& name);
  std::optional<IndeterminateId> find(const std::string& name) const;
  /// Throws UnknownIndeterminate.
  IndeterminateId id(const std::string& name) const;
  const std::string& name(IndeterminateId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

  const std::string& parameter() const { return parameter_; }
  void set_parameter(std::string name) { parameter_ = std::move(name); }

  /// "u'_xyt"-style text with derivation letters in the given precedence order.
  std::string key_name(const DerivativeKey& key,
                       const std::array<Derivation, 4>& precedence = {Derivation::x, Derivation::y,
                                                                      Derivation::z, Derivation::t}) const;

 private:
  std::vector<std::string> names_;
  std::string parameter_ = "nu";
};

struct Factor {
  DerivativeKey key;
  std::uint32_t exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Power product of derivative keys; factors sorted by key storage order,
/// exponents positive. The empty product is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const DerivativeKey& key, std::uint32_t exponent = 1);
  /// Accepts unsorted input with repeats; merges and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::uint32_t degree_in(const DerivativeKey& key) const;
  std::uint32_t total_degree() const;

  /// Removes `power` copies of key; requires degree_in(key) >= power.
  Monomial without(const DerivativeKey& key, std::uint32_t power = 1) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial monomial;
  Coefficient coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Differential polynomial with coefficients in Q(nu). Terms are kept sorted
/// by monomial with no zero coefficients, so the representation is canonical.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(const Coefficient& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(long c) : DiffPoly(Coefficient(c)) {}  // NOLINT(google-explicit-constructor)
  explicit DiffPoly(const DerivativeKey& key);
  DiffPoly(const Monomial& m, const Coefficient& c);
  /// Accepts any term order and repeated monomials.
  static DiffPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// No derivative keys at all (zero included).
  bool is_parameter_only() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit()); }
  /// Requires is_parameter_only().
  Coefficient constant_value() const;

  std::set<DerivativeKey> keys() const;
  std::uint32_t degree_in(const DerivativeKey& key) const;
  std::uint32_t total_degree() const;
  bool contains(const DerivativeKey& key) const { return degree_in(key) > 0; }

  /// Coefficient of key^power, viewed as a polynomial in key.
  DiffPoly coefficient_of(const DerivativeKey& key, std::uint32_t power) const;
  /// Formal partial derivative with respect to one key.
  DiffPoly partial(const DerivativeKey& key) const;
  /// Formal total derivative; Leibniz rule, parameters are constants.
  DiffPoly differentiate(Derivation d) const;
  DiffPoly differentiate(const MultiIndex& theta) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& rhs);
  DiffPoly& operator-=(const DiffPoly& rhs);
  DiffPoly& operator*=(const DiffPoly& rhs);
  DiffPoly& operator*=(const Coefficient& c);

  /// this += c * m * p, the inner step of every reduction.
  DiffPoly& add_scaled(const Coefficient& c, const Monomial& m, const DiffPoly& p);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Coefficient& c) { return a *= c; }
  friend DiffPoly operator*(const Coefficient& c, DiffPoly a) { return a *= c; }

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;
  /// Storage-order comparison for deterministic containers.
  friend std::strong_ordering operator<=>(const DiffPoly& a, const DiffPoly& b);

  /// Drops every term for which pred(term) is true.
  template <typename Pred>
  DiffPoly filtered(Pred&& pred) const {
    DiffPoly r;
    for (const auto& t : terms_)
      if (!pred(t)) r.terms_.push_back(t);
    return r;
  }

 private:
  void canonicalize();

  std::vector<Term> terms_;
};

DiffPoly pow(const DiffPoly& p, unsigned n);

/// Highest total derivative order occurring, and the set of keys occurring.
struct Measure {
  int max_order = 0;
  std::set<DerivativeKey> keys;
};
/// Throws ZeroPolynomial for p = 0.
Measure measure(const DiffPoly& p);

}  // namespace dreduce
