#include "dreduce/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dreduce/errors.hpp"

namespace dreduce {

char to_char(Derivation d) {
  static constexpr char letters[] = {'t', 'x', 'y', 'z'};
  return letters[static_cast<int>(d)];
}

std::optional<Derivation> derivation_from_char(char c) {
  switch (c) {
    case 't': return Derivation::t;
    case 'x': return Derivation::x;
    case 'y': return Derivation::y;
    case 'z': return Derivation::z;
    default: return std::nullopt;
  }
}

int total_order(const MultiIndex& alpha) { return alpha[0] + alpha[1] + alpha[2] + alpha[3]; }

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r{};
  for (int i = 0; i < 4; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool divides(const MultiIndex& a, const MultiIndex& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiIndex quotient(const MultiIndex& b, const MultiIndex& a) {
  MultiIndex r{};
  for (int i = 0; i < 4; ++i) r[i] = static_cast<std::uint8_t>(b[i] - a[i]);
  return r;
}

DerivativeKey DerivativeKey::derive(Derivation d, int times) const {
  DerivativeKey k = *this;
  const int slot = static_cast<int>(d);
  const int next = k.alpha[slot] + times;
  if (next > 255) throw std::overflow_error("DerivativeKey: derivative order exceeds 255");
  k.alpha[slot] = static_cast<std::uint8_t>(next);
  return k;
}

DerivativeKey DerivativeKey::derive(const MultiIndex& theta) const {
  DerivativeKey k = *this;
  for (Derivation d : kAllDerivations) k = k.derive(d, theta[static_cast<int>(d)]);
  return k;
}

// ---------------------------------------------------------------------------

SymbolTable::SymbolTable(const std::vector<std::string>& dependents, std::string parameter)
    : parameter_(std::move(parameter)) {
  for (const auto& n : dependents) declare(n);
}

IndeterminateId SymbolTable::declare(const std::string& name) {
  if (auto found = find(name)) return *found;
  if (name == parameter_) throw Error(ErrorKind::DuplicateEntry, "'" + name + "' is already the parameter");
  names_.push_back(name);
  return static_cast<IndeterminateId>(names_.size() - 1);
}

std::optional<IndeterminateId> SymbolTable::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<IndeterminateId>(it - names_.begin());
}

IndeterminateId SymbolTable::id(const std::string& name) const {
  if (auto found = find(name)) return *found;
  throw Error(ErrorKind::UnknownIndeterminate, "'" + name + "'");
}

std::string SymbolTable::key_name(const DerivativeKey& key, const std::array<Derivation, 4>& precedence) const {
  std::string out = name(key.base);
  if (key.order() == 0) return out;
  out += '_';
  for (Derivation d : precedence) out.append(key.alpha[static_cast<int>(d)], to_char(d));
  return out;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(const DerivativeKey& key, std::uint32_t exponent) {
  if (exponent > 0) factors_.push_back({key, exponent});
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.key < b.key; });
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().key == f.key) factors_.back().exponent += f.exponent;
    else factors_.push_back(f);
  }
}

std::uint32_t Monomial::degree_in(const DerivativeKey& key) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                             [](const Factor& f, const DerivativeKey& k) { return f.key < k; });
  return (it != factors_.end() && it->key == key) ? it->exponent : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

Monomial Monomial::without(const DerivativeKey& key, std::uint32_t power) const {
  Monomial r;
  r.factors_.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.key == key) {
      if (f.exponent < power) throw std::logic_error("Monomial::without: exponent underflow");
      if (f.exponent > power) r.factors_.push_back({f.key, f.exponent - power});
    } else {
      r.factors_.push_back(f);
    }
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->key < j->key) r.factors_.push_back(*i++);
    else if (j->key < i->key) r.factors_.push_back(*j++);
    else r.factors_.push_back({i->key, (i++)->exponent + (j++)->exponent});
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.factors_[i].key <=> b.factors_[i].key; c != 0) return c;
    if (auto c = a.factors_[i].exponent <=> b.factors_[i].exponent; c != 0) return c;
  }
  return a.factors_.size() <=> b.factors_.size();
}

// ---------------------------------------------------------------------------

DiffPoly::DiffPoly(const Coefficient& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

DiffPoly::DiffPoly(const DerivativeKey& key) { terms_.push_back({Monomial(key), Coefficient(1)}); }

DiffPoly::DiffPoly(const Monomial& m, const Coefficient& c) {
  if (!c.is_zero()) terms_.push_back({m, c});
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
  DiffPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void DiffPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) merged.back().coefficient += t.coefficient;
    else merged.push_back(std::move(t));
    if (merged.back().coefficient.is_zero()) merged.pop_back();
  }
  terms_ = std::move(merged);
}

Coefficient DiffPoly::constant_value() const {
  if (!is_parameter_only()) throw std::logic_error("DiffPoly::constant_value on a non-constant polynomial");
  return terms_.empty() ? Coefficient() : terms_[0].coefficient;
}

std::set<DerivativeKey> DiffPoly::keys() const {
  std::set<DerivativeKey> out;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) out.insert(f.key);
  return out;
}

std::uint32_t DiffPoly::degree_in(const DerivativeKey& key) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(key));
  return d;
}

std::uint32_t DiffPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

DiffPoly DiffPoly::coefficient_of(const DerivativeKey& key, std::uint32_t power) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.monomial.degree_in(key) == power) out.push_back({t.monomial.without(key, power), t.coefficient});
  return from_terms(std::move(out));
}

DiffPoly DiffPoly::partial(const DerivativeKey& key) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial.degree_in(key);
    if (e == 0) continue;
    out.push_back({t.monomial.without(key, 1), t.coefficient * Coefficient(static_cast<long>(e))});
  }
  return from_terms(std::move(out));
}

DiffPoly DiffPoly::differentiate(Derivation d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) {
      Monomial rest = t.monomial.without(f.key, 1);
      Monomial m = rest * Monomial(f.key.derive(d));
      out.push_back({std::move(m), t.coefficient * Coefficient(static_cast<long>(f.exponent))});
    }
  }
  return from_terms(std::move(out));
}

DiffPoly DiffPoly::differentiate(const MultiIndex& theta) const {
  DiffPoly r = *this;
  for (Derivation d : kAllDerivations)
    for (int k = 0; k < theta[static_cast<int>(d)]; ++k) r = r.differentiate(d);
  return r;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& rhs) { return add_scaled(Coefficient(1), Monomial(), rhs); }

DiffPoly& DiffPoly::operator-=(const DiffPoly& rhs) { return add_scaled(Coefficient(-1), Monomial(), rhs); }

DiffPoly& DiffPoly::add_scaled(const Coefficient& c, const Monomial& m, const DiffPoly& p) {
  if (c.is_zero() || p.is_zero()) return *this;
  std::vector<Term> scaled;
  scaled.reserve(p.terms_.size());
  const bool unit_c = c.is_one();
  for (const auto& t : p.terms_)
    scaled.push_back({m.is_unit() ? t.monomial : t.monomial * m, unit_c ? t.coefficient : t.coefficient * c});
  // Multiplying by a monomial preserves the storage order only in special
  // cases, so sort before merging.
  if (!m.is_unit())
    std::sort(scaled.begin(), scaled.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });

  std::vector<Term> merged;
  merged.reserve(terms_.size() + scaled.size());
  auto i = terms_.begin();
  auto j = scaled.begin();
  while (i != terms_.end() && j != scaled.end()) {
    if (i->monomial < j->monomial) {
      merged.push_back(std::move(*i++));
    } else if (j->monomial < i->monomial) {
      merged.push_back(std::move(*j++));
    } else {
      Coefficient sum = i->coefficient + j->coefficient;
      if (!sum.is_zero()) merged.push_back({std::move(i->monomial), std::move(sum)});
      ++i;
      ++j;
    }
  }
  std::move(i, terms_.end(), std::back_inserter(merged));
  std::move(j, scaled.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return DiffPoly();
  const DiffPoly& small = a.size() <= b.size() ? a : b;
  const DiffPoly& large = a.size() <= b.size() ? b : a;
  std::vector<Term> out;
  out.reserve(small.size() * large.size());
  for (const auto& s : small.terms_)
    for (const auto& l : large.terms_) out.push_back({s.monomial * l.monomial, s.coefficient * l.coefficient});
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& rhs) { return *this = *this * rhs; }

DiffPoly& DiffPoly::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

std::strong_ordering operator<=>(const DiffPoly& a, const DiffPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].monomial <=> b.terms_[i].monomial; c != 0) return c;
    if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

DiffPoly pow(const DiffPoly& p, unsigned n) {
  DiffPoly r(1L);
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

Measure measure(const DiffPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "measure of the zero polynomial");
  Measure m;
  m.keys = p.keys();
  for (const auto& k : m.keys) m.max_order = std::max(m.max_order, k.order());
  return m;
}

}  // namespace dreduce
