#include <doctest.h>

#include "dreduce/parser.hpp"
#include "dreduce/render.hpp"
#include "goldens.hpp"

using namespace dreduce;
using namespace dreduce::testing;

TEST_CASE("polynomials") {
  const SymbolTable s({"u", "v", "w", "p"});
  const Ranking r({0, 1, 2, 3});
  CHECK(render(DiffPoly(), s, r) == "0");
  CHECK(render(parse_polynomial("v_y + u_x + w_z", s), s, r) == "u_x + v_y + w_z");
  CHECK(render(parse_polynomial("nu*u_xx - 1/2*p", s), s, r) == "nu*u_xx - 1/2*p");
  CHECK(render_solved(parse_polynomial("u_x + v_y + w_z", s), s, r) == "u_x = -v_y - w_z");
  CHECK(render_solved(parse_polynomial("v*u_x^2 - p", s), s, r) == "v*u_x^2 = p");
  CHECK(render_solved(parse_polynomial("nu", s), s, r) == "nu = 0");
}

TEST_CASE("Stokes verdict renders the published solved forms") {
  const SystemFile sys = load_system("stokes3d.sys");
  const Ranking r = sys.effective_ranking();
  const Verdict v = rosenfeld_groebner(sys.equations, r);
  const std::string text = render(v, sys.symbols, r);
  CHECK(text.find("u_x = -v_y - w_z\n") != std::string::npos);
  CHECK(text.find("p_xx = -p_yy - p_zz\n") != std::string::npos);
  CHECK(text.find("u_yy = -u_zz + 1/nu*u_t + v_xy + w_xz + 1/nu*p_x\n") != std::string::npos);
  for (const auto& d : v.branches[0].chain.divisors())
    CHECK(parse_polynomial(render_solved(d.poly, sys.symbols, r), sys.symbols) == d.poly);
}

TEST_CASE("JSON verdicts") {
  const SystemFile sys = load_system("stokes3d.sys");
  const Ranking r = sys.effective_ranking();
  const nlohmann::json ok = to_json(rosenfeld_groebner(sys.equations, r), sys.symbols, r);
  CHECK(ok["schema"] == kSchemaVersion);
  CHECK(ok["outcome"] == "R");
  CHECK(ok["chains"].size() == 1);
  CHECK(ok["chains"][0].size() == 5);
  CHECK(ok["chains"][0][0].contains("leader"));

  Budget b;
  b.step_cap = 2;
  const nlohmann::json capped = to_json(rosenfeld_groebner(sys.equations, r, b), sys.symbols, r);
  CHECK(capped["outcome"] == "I");
  CHECK(capped["reason"] == "budget_exhausted");
  CHECK(capped["stats"]["total_steps"].get<int>() > 0);
  CHECK(capped["stats"].contains("distinct_leaders_seen"));
  CHECK(capped["stats"].contains("max_order_reached"));
}
