#include <doctest.h>

#include "dreduce/errors.hpp"
#include "dreduce/models.hpp"
#include "dreduce/parser.hpp"
#include "dreduce/render.hpp"
#include "goldens.hpp"

using namespace dreduce;
using namespace dreduce::testing;

namespace {
bool mentions_t(const DiffPoly& p) {
  for (const auto& k : p.keys())
    if (k.alpha[static_cast<int>(Derivation::t)] > 0) return true;
  return false;
}
bool has_parameter(const DiffPoly& p) {
  for (const auto& t : p.terms())
    if (!t.coefficient.is_rational()) return true;
  return false;
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

TEST_CASE("Stokes and two-scale Stokes match the system files") {
  const ModelSpec s = build(ModelName::stokes3d, Regime::incompressible);
  const SystemFile f = load_system("stokes3d.sys");
  CHECK(s.equations == f.equations);
  CHECK(s.suggested_ranking.blocks() == f.effective_ranking().blocks());

  const ModelSpec r = build(ModelName::rans_stokes, Regime::incompressible);
  const SystemFile g = load_system("rans_stokes.sys");
  CHECK(r.equations == g.equations);
  CHECK(r.suggested_ranking.blocks() == g.effective_ranking().blocks());
}

TEST_CASE("Stokes limit of Navier-Stokes is the Stokes system") {
  const ModelSpec ns = build(ModelName::ns3d, Regime::incompressible);
  const ModelSpec filtered = regime_filter(ns, Regime::stokes_limit);
  CHECK(filtered.equations == build(ModelName::stokes3d, Regime::incompressible).equations);
  CHECK(build(ModelName::ns3d, Regime::stokes_limit).equations == filtered.equations);
}

TEST_CASE("rotational two-scale model") {
  const ModelSpec s = build(ModelName::omega_rans, Regime::stokes_limit);
  CHECK(s.equations.size() == 11);
  for (const auto& e : s.equations) CHECK(e.total_degree() == 1);
  const ModelSpec full = build(ModelName::omega_rans, Regime::incompressible);
  CHECK(full.equations.size() == 11);
  int nonlinear = 0;
  for (const auto& e : full.equations) nonlinear += e.total_degree() > 1;
  CHECK(nonlinear == 3);
  CHECK(build(ModelName::omega_rans, Regime::stokes_limit, {false}).equations.size() == 5);
}

TEST_CASE("curl definitions close the rotational model") {
  // Eliminating omega and its fluctuation leaves only velocity indeterminates.
  const ModelSpec s = build(ModelName::omega_rans, Regime::incompressible);
  std::vector<DiffPoly> defs(s.equations.begin() + 3, s.equations.begin() + 9);
  const Chain c(defs, s.suggested_ranking);
  for (int i = 0; i < 3; ++i) {
    const DiffPoly r = reduce_against_chain(s.equations[i], c, s.suggested_ranking).remainder;
    for (const auto& k : r.keys()) CHECK(s.symbols.name(k.base).rfind("omega", 0) == std::string::npos);
  }
}

TEST_CASE("regime filters") {
  const ModelSpec psi = build(ModelName::streamfunction2d, Regime::incompressible);
  for (const auto& e : regime_filter(psi, Regime::stationary).equations) CHECK_FALSE(mentions_t(e));
  const ModelSpec stokes = build(ModelName::stokes3d, Regime::incompressible);
  const ModelSpec euler = regime_filter(build(ModelName::ns3d, Regime::incompressible), Regime::euler_limit);
  for (const auto& e : euler.equations) CHECK_FALSE(has_parameter(e));
  for (const auto& e : regime_filter(stokes, Regime::euler_limit).equations) CHECK_FALSE(has_parameter(e));
  CHECK(kind_of([&] { regime_filter(euler, Regime::stokes_limit); }) == ErrorKind::UnsupportedCell);
}

TEST_CASE("unsupported cells") {
  CHECK(kind_of([] { build(ModelName::busemann, Regime::compressible); }) == ErrorKind::UnsupportedCell);
  CHECK(kind_of([] { build(ModelName::streamfunction2d, Regime::compressible); }) == ErrorKind::UnsupportedCell);
  CHECK(kind_of([] { parse_model_name("pipe_flow"); }) == ErrorKind::UnsupportedCell);
}

TEST_CASE("every built equation round-trips through the parser") {
  for (const TableCell& cell : table_cells()) {
    if (!cell.supported) continue;
    const ModelSpec s = build(cell.model, cell.column);
    CHECK(!s.equations.empty());
    CHECK((s.dimension == 2 || s.dimension == 3));
    for (const auto& e : s.equations)
      CHECK(parse_polynomial(render(e, s.symbols, s.suggested_ranking), s.symbols) == e);
  }
}

TEST_CASE("published grid") {
  CHECK(published_code(ModelName::ns3d, Regime::stokes_limit) == Classification::R);
  CHECK(published_code(ModelName::ns3d, Regime::incompressible) == Classification::I);
  CHECK(published_code(ModelName::prandtl, Regime::incompressible) == Classification::R);
  CHECK(table_columns().size() == 5);
  CHECK(column_label(Regime::stationary) == "St");
}
