#pragma once

#include <random>

#include "dreduce/diffpoly.hpp"
#include "dreduce/ranking.hpp"

namespace dreduce::testing {

/// Seeded source of small random differential polynomials over u, v, u', p.
class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed), symbols_({"u", "v", "u'", "p"}) {}

  const SymbolTable& symbols() const { return symbols_; }
  std::mt19937& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  MultiIndex index(int max_order) {
    MultiIndex a{};
    const int order = uniform(0, max_order);
    for (int i = 0; i < order; ++i) ++a[uniform(0, 3)];
    return a;
  }

  DerivativeKey key(int max_order = 2) {
    return {static_cast<IndeterminateId>(uniform(0, static_cast<int>(symbols_.size()) - 1)), index(max_order)};
  }

  /// Mostly small rationals, sometimes a rational function of nu.
  Coefficient coefficient() {
    const int kind = uniform(0, 9);
    auto nz = [&] {
      int v = 0;
      while (v == 0) v = uniform(-5, 5);
      return v;
    };
    if (kind < 6) return Coefficient(mpq_class(nz(), uniform(1, 4)));
    if (kind < 8) return Coefficient::parameter_power(uniform(-2, 2), mpq_class(nz(), uniform(1, 3)));
    Coefficient::Poly num{mpq_class(uniform(-3, 3)), mpq_class(nz())};
    Coefficient::Poly den{mpq_class(nz()), mpq_class(uniform(0, 2))};
    return Coefficient(num, den);
  }

  Monomial monomial(int max_factors = 2, int max_order = 2) {
    std::vector<Factor> f;
    const int n = uniform(0, max_factors);
    for (int i = 0; i < n; ++i) f.push_back({key(max_order), static_cast<std::uint32_t>(uniform(1, 2))});
    return Monomial(std::move(f));
  }

  DiffPoly poly(int max_terms = 4, int max_factors = 2, int max_order = 2) {
    DiffPoly p;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) p += DiffPoly(monomial(max_factors, max_order), coefficient());
    return p;
  }

  /// Degree-one polynomial with at least one key.
  DiffPoly linear(int max_terms = 4, int max_order = 2) {
    DiffPoly p;
    while (p.is_parameter_only()) {
      p = DiffPoly();
      const int n = uniform(1, max_terms);
      for (int i = 0; i < n; ++i) p += DiffPoly(Monomial(key(max_order)), coefficient());
    }
    return p;
  }

  /// A polynomial that has a leader.
  DiffPoly nonconstant(int max_terms = 4, int max_factors = 2, int max_order = 2) {
    DiffPoly p;
    while (p.is_parameter_only()) p = poly(max_terms, max_factors, max_order);
    return p;
  }

  /// c * theta(leader(q)) + q: nonlinear below a leader that occurs linearly
  /// with a constant coefficient.
  DiffPoly quasi_linear(const Ranking& r) {
    const DiffPoly q = nonconstant(2, 2, 1);
    const DerivativeKey top = leader(q, r).derive(derivation());
    return DiffPoly(Monomial(top), coefficient()) + q;
  }

  Derivation derivation() { return kAllDerivations[uniform(0, 3)]; }

  /// Random block order and derivation precedence.
  Ranking ranking() {
    std::vector<IndeterminateId> blocks;
    for (std::size_t i = 0; i < symbols_.size(); ++i) blocks.push_back(static_cast<IndeterminateId>(i));
    std::shuffle(blocks.begin(), blocks.end(), rng_);
    auto prec = Ranking::kDefaultPrecedence;
    std::shuffle(prec.begin(), prec.end(), rng_);
    return Ranking(blocks, prec);
  }

 private:
  std::mt19937 rng_;
  SymbolTable symbols_;
};

}  // namespace dreduce::testing
