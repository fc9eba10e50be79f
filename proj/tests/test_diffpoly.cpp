#include <doctest.h>

#include "dreduce/errors.hpp"
#include "dreduce/parser.hpp"

using namespace dreduce;

namespace {
const SymbolTable& syms() {
  static const SymbolTable s({"u", "v", "w", "p"});
  return s;
}
DiffPoly P(const char* text) { return parse_polynomial(text, syms()); }
}  // namespace

TEST_CASE("addition") {
  CHECK(P("u_x + v") + P("-v") == P("u_x"));
  CHECK(P("u_x*v - 3") + DiffPoly() == P("u_x*v - 3"));
  CHECK(P("2*u") + P("3*u") == P("5*u"));
  CHECK((P("u") - P("u")).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(P("u_x") * P("u_x") == P("u_x^2"));
  CHECK(P("u*v + w") * DiffPoly(1L) == P("u*v + w"));
  CHECK(P("u + v") * P("u - v") == P("u^2 - v^2"));
  CHECK(pow(P("u + 1"), 3) == P("u^3 + 3*u^2 + 3*u + 1"));
}

TEST_CASE("total derivatives") {
  CHECK(P("u_x*v").differentiate(Derivation::x) == P("u_xx*v + u_x*v_x"));
  CHECK(DiffPoly(Coefficient::parameter_power(1)).differentiate(Derivation::x).is_zero());
  CHECK(P("u_x").differentiate(Derivation::y) == P("u_y").differentiate(Derivation::x));
  CHECK(P("u_xy") == P("u_yx"));
  CHECK(P("u^3").differentiate(Derivation::t) == P("3*u^2*u_t"));
  MultiIndex theta{};
  theta[static_cast<int>(Derivation::x)] = 2;
  theta[static_cast<int>(Derivation::t)] = 1;
  CHECK(P("u").differentiate(theta) == P("u_xxt"));
}

TEST_CASE("measure") {
  const Measure m = measure(P("u_t + p_x - nu*(u_xx + u_yy + u_zz)"));
  CHECK(m.max_order == 2);
  CHECK(m.keys.size() == 5);
  CHECK(measure(P("u")).max_order == 0);
  try {
    measure(DiffPoly());
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

TEST_CASE("canonical form does not depend on term order") {
  const auto u = syms().id("u"), v = syms().id("v");
  const Term a{Monomial(DerivativeKey{u, {0, 1, 0, 0}}), Coefficient(2L)};
  const Term b{Monomial(DerivativeKey{v, {}}, 2), Coefficient(-1L)};
  const Term c{Monomial(DerivativeKey{u, {0, 1, 0, 0}}), Coefficient(3L)};
  CHECK(DiffPoly::from_terms({a, b, c}) == DiffPoly::from_terms({c, b, a}));
  CHECK(DiffPoly::from_terms({a, b, c}) == P("5*u_x - v^2"));
  CHECK(DiffPoly::from_terms({a, Term{a.monomial, Coefficient(-2L)}}).is_zero());
}

TEST_CASE("polynomial views") {
  const auto ux = DerivativeKey{syms().id("u"), {0, 1, 0, 0}};
  const DiffPoly f = P("3*v*u_x^2 + w*u_x + p");
  CHECK(f.degree_in(ux) == 2);
  CHECK(f.coefficient_of(ux, 2) == P("3*v"));
  CHECK(f.coefficient_of(ux, 0) == P("p"));
  CHECK(f.partial(ux) == P("6*v*u_x + w"));
  CHECK(f.total_degree() == 3);
  CHECK(DiffPoly(Coefficient::parameter_power(2)).is_parameter_only());
}
