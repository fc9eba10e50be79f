#include <doctest.h>

#include "dreduce/errors.hpp"
#include "dreduce/parser.hpp"
#include "goldens.hpp"

using namespace dreduce;
using namespace dreduce::testing;

namespace {
std::pair<int, int> syntax_position(std::string_view text) {
  try {
    parse_system(text);
  } catch (const SyntaxError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}
ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ZeroPolynomial;
}
}  // namespace

TEST_CASE("Stokes system file") {
  const SystemFile sys = load_system("stokes3d.sys");
  REQUIRE(sys.equations.size() == 4);
  CHECK(sys.equations[0] == parse_polynomial("u_x + v_y + w_z", sys.symbols));
  CHECK(sys.equations[1] == parse_polynomial("u_t + p_x - nu*(u_xx + u_yy + u_zz)", sys.symbols));
  CHECK(sys.equations[1] == parse_polynomial("u_t + p_x = nu*u_xx + nu*u_yy + nu*u_zz", sys.symbols));
  REQUIRE(sys.ranking.has_value());
  CHECK(sys.ranking->blocks().size() == 4);
  CHECK(sys.symbols.parameter() == "nu");
}

TEST_CASE("syntax errors point at the offending token") {
  CHECK(syntax_position("var u, v;\nu_x + * v\n") == std::pair{2, 7});
  CHECK(syntax_position("var u;\nu_x + (u\n") == std::pair{2, 9});
  CHECK(syntax_position("var u;\n\n  u^x\n") == std::pair{3, 5});
  CHECK(syntax_position("var u;\nu_q = 0\n") == std::pair{2, 3});
}

TEST_CASE("undeclared symbols") {
  CHECK(kind_of([] { parse_system("var u;\nu_x + q = 0\n"); }) == ErrorKind::UndeclaredSymbol);
}

TEST_CASE("derivative suffixes") {
  const SymbolTable s({"u", "u'"});
  CHECK(parse_polynomial("u_xy", s) == parse_polynomial("u_yx", s));
  CHECK(parse_polynomial("u'_t", s) != parse_polynomial("u_t", s));
  CHECK(parse_polynomial("2*u'^2 - u'*u'", s) == parse_polynomial("u'^2", s));
  CHECK(kind_of([] { parse_system("var u;\nderivations x, y;\nu_t = 0\n"); }) == ErrorKind::UndeclaredSymbol);
}

TEST_CASE("rankings") {
  const SymbolTable s({"u", "v", "w", "u'", "v'", "w'", "p"});
  CHECK(parse_ranking("u>v>w>p", SymbolTable({"u", "v", "w", "p"})).blocks().size() == 4);
  const Ranking r = parse_ranking("u>v>w>u'>v'>w'>p", s);
  CHECK(r.blocks() == std::vector<IndeterminateId>{0, 1, 2, 3, 4, 5, 6});
  const Ranking q = parse_ranking("p>u>v>w>u'>v'>w'; prec t,z", s);
  CHECK(q.blocks().front() == s.id("p"));
  CHECK(q.precedence() == std::array{Derivation::t, Derivation::z, Derivation::x, Derivation::y});
  CHECK(kind_of([&] { parse_ranking("u>u", s); }) == ErrorKind::DuplicateEntry);
  CHECK(kind_of([&] { parse_ranking("u>q", s); }) == ErrorKind::UnknownIndeterminate);
}

TEST_CASE("coefficients") {
  const SymbolTable s({"u"});
  CHECK(parse_polynomial("1/nu*u", s) == parse_polynomial("nu^-1*u", s));
  CHECK(parse_polynomial("(nu + 1)/(2*nu)*u", s) == parse_polynomial("1/2*u + 1/(2*nu)*u", s));
  CHECK(parse_polynomial("u = u", s).is_zero());
}
