#include <doctest.h>

#include "dreduce/errors.hpp"
#include "dreduce/parser.hpp"
#include "dreduce/reduction.hpp"
#include "goldens.hpp"

using namespace dreduce;
using namespace dreduce::testing;

namespace {
const SymbolTable& syms() {
  static const SymbolTable s({"u", "v", "w", "p"});
  return s;
}
DiffPoly P(const char* text) { return parse_polynomial(text, syms()); }
const Ranking uvwp({0, 1, 2, 3});
const DiffPoly continuity = P("u_x + v_y + w_z");
}  // namespace

TEST_CASE("pseudo-reduction by the continuity equation") {
  const ReductionResult r = pseudo_reduce(P("u_xx + v"), continuity, uvwp);
  CHECK(r.remainder == P("v - v_xy - w_xz"));
  CHECK(r.trace.step_count == 1);
  CHECK(r.complete);

  const ReductionResult same = pseudo_reduce(P("v - p_x"), continuity, uvwp);
  CHECK(same.remainder == P("v - p_x"));
  CHECK(same.trace.step_count == 0);

  CHECK(pseudo_reduce(continuity.differentiate(Derivation::x), continuity, uvwp).remainder.is_zero());
  CHECK_THROWS_AS(pseudo_reduce(P("u"), P("nu"), uvwp), Error);
}

TEST_CASE("nonlinear divisors premultiply by initial and separant") {
  const DiffPoly g = P("v*u_x^2 - p");
  const ReductionResult full = pseudo_reduce(P("u_x^3"), g, uvwp);
  CHECK(full.remainder == P("p*u_x"));
  CHECK(pseudo_reduce(P("u_x^3"), g, uvwp, ReductionMode::partial).remainder == P("u_x^3"));

  const ReductionResult proper = pseudo_reduce(P("u_xy"), g, uvwp);
  CHECK(is_reduced(proper.remainder, g, uvwp));
  CHECK(proper.trace.step_count >= 1);
}

TEST_CASE("traces replay to the remainder") {
  const DiffPoly f = P("u_xxy*w + u_x^2 + p_t");
  const std::vector<Divisor> divs{Divisor(continuity, uvwp), Divisor(P("w_z - p"), uvwp)};
  const ReductionResult r = reduce_by(f, divs, uvwp, ReductionMode::full, true);
  const std::vector<DiffPoly> polys{continuity, P("w_z - p")};
  CHECK(replay(f, r.trace, polys) == r.remainder);
  CHECK(r.trace.steps.size() == r.trace.step_count);
  CHECK(r.trace.pass_count <= r.trace.step_count);
}

TEST_CASE("step and term limits stop a reduction early") {
  const DiffPoly f = P("u_xxx + u_xx + u_x");
  const std::vector<Divisor> divs{Divisor(continuity, uvwp)};
  const ReductionResult capped = reduce_by(f, divs, uvwp, ReductionMode::full, false, 1);
  CHECK_FALSE(capped.complete);
  CHECK(capped.trace.step_count == 1);
  const ReductionResult swelled = reduce_by(f, divs, uvwp, ReductionMode::full, false,
                                            std::numeric_limits<std::size_t>::max(), 2);
  CHECK(swelled.swelled);
  CHECK_FALSE(swelled.complete);
}

TEST_CASE("reduction against chains") {
  CHECK(reduce_against_chain(P("u_xx + p"), Chain(), uvwp).remainder == P("u_xx + p"));
  const Chain c({continuity}, uvwp);
  const DiffPoly r = reduce_against_chain(P("u_xx + p_x"), c, uvwp).remainder;
  for (const auto& k : r.keys()) CHECK(k.base != syms().id("u"));
  const DiffPoly member = P("v") * continuity.differentiate(Derivation::y) + P("3*p_x") * continuity;
  CHECK(reduce_against_chain(member, c, uvwp).remainder.is_zero());
  const DiffPoly reduced = P("v_xy + w*p");
  CHECK(reduce_against_chain(reduced, c, uvwp).remainder == reduced);
}

TEST_CASE("autoreduction") {
  CHECK(autoreduce({P("u_x")}, uvwp).polys() == std::vector<DiffPoly>{P("u_x")});
  CHECK(autoreduce({P("u_x"), P("u_x + v")}, uvwp).polys() == std::vector<DiffPoly>{P("v"), P("u_x")});
  try {
    autoreduce({P("u_x"), P("u_x + nu")}, uvwp);
    FAIL("expected InconsistentSystem");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InconsistentSystem);
  }
  CHECK_FALSE(try_autoreduce({P("u_x^2*v + w"), P("u_x*w^2 + v*p")}, uvwp, 1).has_value());
}

TEST_CASE("chains reject sets that are not autoreduced") {
  CHECK_THROWS_AS(Chain({P("u_x"), P("u_xy + v")}, uvwp), std::invalid_argument);
  CHECK_NOTHROW(Chain({P("u_x"), P("v_y + p")}, uvwp));
}

TEST_CASE("normalization makes parameter-power initials monic") {
  CHECK(normalize(P("-nu*u_xx + p"), uvwp) == P("u_xx - 1/nu*p"));
  CHECK(normalize(P("-2*v*u_x + p"), uvwp) == P("v*u_x - 1/2*p"));
}
