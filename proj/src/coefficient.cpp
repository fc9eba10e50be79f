#include "dreduce/coefficient.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dreduce {

namespace {

using Poly = Coefficient::Poly;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Lowest power with a nonzero coefficient; p must be nonzero.
std::size_t valuation(const Poly& p) {
  std::size_t i = 0;
  while (sgn(p[i]) == 0) ++i;
  return i;
}

bool is_monomial(const Poly& p) { return !p.empty() && valuation(p) + 1 == p.size(); }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(Poly p, const mpq_class& c) {
  for (auto& x : p) x *= c;
  trim(p);
  return p;
}

Poly shift_down(const Poly& p, std::size_t k) { return Poly(p.begin() + static_cast<long>(k), p.end()); }

// Remainder of a by b over Q (b nonzero); quotient discarded unless requested.
Poly divide(Poly a, const Poly& b, Poly* quotient) {
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / b.back();
    if (quotient) (*quotient)[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  if (quotient) trim(*quotient);
  return a;
}

Poly make_monic(Poly p) {
  if (p.empty()) return p;
  const mpq_class lc = p.back();
  return scale(std::move(p), 1 / lc);
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.empty()) return make_monic(b);
  if (b.empty()) return make_monic(a);
  if (is_monomial(a) || is_monomial(b)) {
    Poly r(std::min(valuation(a), valuation(b)) + 1);
    r.back() = 1;
    return r;
  }
  Poly x = a;
  Poly y = b;
  while (!y.empty()) {
    Poly r = divide(x, y, nullptr);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

int compare(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

// Splits p into (content, primitive integer polynomial with positive leading
// coefficient) such that p = content * primitive.
std::pair<mpq_class, std::vector<mpz_class>> primitive_part(const Poly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p) {
    if (sgn(c) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> ints(p.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ints[i] = p[i].get_num() * (lcm_den / p[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (sgn(ints.back()) < 0) g = -g;
  for (auto& c : ints) c /= g;
  mpq_class content(g, lcm_den);
  content.canonicalize();
  return {content, ints};
}

std::string integer_poly_text(const std::vector<mpz_class>& p, const std::string& name) {
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (sgn(p[k]) == 0) continue;
    mpz_class mag = abs(p[k]);
    if (!first) out += sgn(p[k]) < 0 ? " - " : " + ";
    else if (sgn(p[k]) < 0) out += "-";
    first = false;
    std::string power = k == 0 ? "" : (k == 1 ? name : name + "^" + std::to_string(k));
    if (k == 0) out += mag.get_str();
    else if (mag == 1) out += power;
    else out += mag.get_str() + "*" + power;
  }
  return out;
}

std::size_t nonzero_count(const std::vector<mpz_class>& p) {
  std::size_t n = 0;
  for (const auto& c : p) n += sgn(c) != 0;
  return n;
}

}  // namespace

Coefficient::Coefficient() : den_{mpq_class(1)} {}

Coefficient::Coefficient(long value) : Coefficient(mpq_class(value)) {}

Coefficient::Coefficient(const mpq_class& value) : den_{mpq_class(1)} {
  if (sgn(value) != 0) {
    num_.push_back(value);
    num_.back().canonicalize();
  }
}

Coefficient::Coefficient(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (auto& c : num_) c.canonicalize();
  for (auto& c : den_) c.canonicalize();
  trim(num_);
  trim(den_);
  if (den_.empty()) throw std::domain_error("Coefficient: zero denominator");
  normalize();
}

Coefficient Coefficient::parameter_power(int k, const mpq_class& c) {
  Coefficient r;
  if (sgn(c) == 0) return r;
  const std::size_t n = static_cast<std::size_t>(std::abs(k));
  Poly mono(n + 1);
  mono.back() = 1;
  if (k >= 0) {
    mono.back() = c;
    r.num_ = std::move(mono);
  } else {
    r.num_ = {c};
    r.den_ = std::move(mono);
  }
  return r;
}

bool Coefficient::is_one() const { return is_rational() && num_.size() == 1 && num_[0] == 1; }

bool Coefficient::is_parameter_monomial() const { return is_monomial(num_) && is_monomial(den_); }

mpq_class Coefficient::rational_value() const {
  if (!is_rational()) throw std::logic_error("Coefficient: value depends on the parameter");
  return num_.empty() ? mpq_class(0) : num_[0];
}

int Coefficient::leading_sign() const { return num_.empty() ? 0 : sgn(num_.back()); }

void Coefficient::normalize() {
  if (num_.empty()) {
    den_ = {mpq_class(1)};
    return;
  }
  if (den_.size() == 1) {
    if (den_[0] != 1) {
      num_ = scale(std::move(num_), 1 / den_[0]);
      den_[0] = 1;
    }
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.size() > 1) {
    if (is_monomial(g)) {
      const std::size_t k = g.size() - 1;
      num_ = shift_down(num_, k);
      den_ = shift_down(den_, k);
    } else {
      Poly q;
      divide(num_, g, &q);
      num_ = std::move(q);
      divide(den_, g, &q);
      den_ = std::move(q);
    }
  }
  const mpq_class lc = den_.back();
  if (lc != 1) {
    num_ = scale(std::move(num_), 1 / lc);
    den_ = scale(std::move(den_), 1 / lc);
  }
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_.size() == 1 && rhs.den_.size() == 1) {
    num_ = add(num_, rhs.num_);
    return *this;
  }
  if (compare(den_, rhs.den_) == 0) {
    num_ = add(num_, rhs.num_);
  } else {
    num_ = add(mul(num_, rhs.den_), mul(rhs.num_, den_));
    den_ = mul(den_, rhs.den_);
  }
  normalize();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) { return *this += -rhs; }

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Coefficient();
  num_ = mul(num_, rhs.num_);
  if (den_.size() == 1 && rhs.den_.size() == 1) return *this;
  den_ = mul(den_, rhs.den_);
  normalize();
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("Coefficient: division by zero");
  Coefficient r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Coefficient& a, const Coefficient& b) {
  return compare(a.num_, b.num_) == 0 && compare(a.den_, b.den_) == 0;
}

std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
  int c = compare(a.num_, b.num_);
  if (c == 0) c = compare(a.den_, b.den_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

double Coefficient::evaluate(double nu) const {
  auto horner = [nu](const Poly& p) {
    double acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * nu + p[i].get_d();
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string Coefficient::to_string(const std::string& parameter_name) const {
  if (is_zero()) return "0";
  if (is_rational()) return num_[0].get_str();

  auto [num_content, num_prim] = primitive_part(num_);
  auto [den_content, den_prim] = primitive_part(den_);
  mpq_class ratio = num_content / den_content;
  ratio.canonicalize();
  const mpz_class top = ratio.get_num();
  const mpz_class bottom = ratio.get_den();

  const bool num_unit = num_prim.size() == 1;
  const bool den_unit = den_prim.size() == 1;
  const std::string num_poly = integer_poly_text(num_prim, parameter_name);
  const std::string den_poly = integer_poly_text(den_prim, parameter_name);
  const bool num_compound = nonzero_count(num_prim) > 1;
  const bool den_compound = nonzero_count(den_prim) > 1;

  std::string numerator;
  if (num_unit) {
    numerator = top.get_str();
  } else {
    const std::string body = num_compound ? "(" + num_poly + ")" : num_poly;
    if (top == 1) numerator = body;
    else if (top == -1) numerator = "-" + body;
    else numerator = top.get_str() + "*" + body;
  }

  std::string denominator;
  if (den_unit) {
    if (bottom != 1) denominator = bottom.get_str();
  } else if (bottom == 1) {
    denominator = den_compound ? "(" + den_poly + ")" : den_poly;
  } else {
    denominator = "(" + bottom.get_str() + "*" + (den_compound ? "(" + den_poly + ")" : den_poly) + ")";
  }
  return denominator.empty() ? numerator : numerator + "/" + denominator;
}

}  // namespace dreduce
