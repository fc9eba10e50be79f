#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dreduce/diffpoly.hpp"
#include "dreduce/ranking.hpp"
#include "dreduce/rosenfeld_groebner.hpp"

namespace dreduce {

enum class ModelName { stokes3d, rans_stokes, ns3d, rans3d, omega_rans, streamfunction2d, prandtl, busemann };

/// Regime flags; a spec carries a set of them.
enum class Regime : unsigned {
  compressible = 1u << 0,
  incompressible = 1u << 1,
  stokes_limit = 1u << 2,
  euler_limit = 1u << 3,
  stationary = 1u << 4,
};

std::string to_string(ModelName m);
std::string to_string(Regime r);
/// Throws UnsupportedCell for unknown names.
ModelName parse_model_name(const std::string& s);
Regime parse_regime(const std::string& s);

struct ModelOptions {
  /// omega_rans only: add omega = curl(v) and its fluctuation counterpart.
  bool with_curl_defs = true;
};

struct ModelSpec {
  ModelName name = ModelName::stokes3d;
  unsigned regime = 0;  // bitwise OR of Regime values
  int dimension = 3;
  SymbolTable symbols;
  std::vector<DiffPoly> equations;
  Ranking suggested_ranking;
  /// The source names this model without displaying its equations; a
  /// standard textbook form is used instead.
  bool best_effort = false;

  bool has(Regime r) const { return (regime & static_cast<unsigned>(r)) != 0; }
};

/// Builds one supported (model, regime) cell. Throws UnsupportedCell.
ModelSpec build(ModelName name, Regime regime, const ModelOptions& options = {});

/// Syntactic regime transformation: stokes_limit drops nonlinear monomials,
/// euler_limit drops monomials whose coefficient involves the parameter,
/// stationary drops monomials containing a t-derivative. Throws
/// UnsupportedCell for inconsistent or non-syntactic requests.
ModelSpec regime_filter(const ModelSpec& spec, Regime flag);

/// One cell of the reducibility grid.
struct TableCell {
  ModelName model;
  Regime column;
  bool supported = false;                     // false: unsupported/best-effort stub
  std::optional<Classification> published;    // published code, if any
};

/// Table columns in published order: C, In, S, E, St.
const std::vector<Regime>& table_columns();
const std::vector<ModelName>& table_rows();
/// Published code for a cell; nullopt for "not applicable".
std::optional<Classification> published_code(ModelName m, Regime column);
/// Every applicable cell, rows then columns.
std::vector<TableCell> table_cells();

std::string column_label(Regime r);
std::string row_label(ModelName m);

}  // namespace dreduce
