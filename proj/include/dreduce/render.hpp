#pragma once

#include <string>

#include <json.hpp>

#include "dreduce/diffpoly.hpp"
#include "dreduce/ranking.hpp"
#include "dreduce/reduction.hpp"
#include "dreduce/rosenfeld_groebner.hpp"

namespace dreduce {

inline constexpr const char* kSchemaVersion = "delta-reduce/1";

enum class Format { human, json };

/// Expression text; terms from the highest-ranked monomial down. "0" for zero.
std::string render(const DiffPoly& p, const SymbolTable& symbols, const Ranking& r);

/// Solved form "leader = rhs"; the left side becomes "initial*leader^d" when
/// the initial is not 1. Parameter-only input renders as "c = 0".
std::string render_solved(const DiffPoly& p, const SymbolTable& symbols, const Ranking& r);

std::string render(const Chain& c, const SymbolTable& symbols, const Ranking& r);
std::string render(const Verdict& v, const SymbolTable& symbols, const Ranking& r);

std::string render_condition(const BranchCondition& c, const SymbolTable& symbols, const Ranking& r);

/// {leader, rhs, poly} for each chain element, ascending.
nlohmann::json to_json(const Chain& c, const SymbolTable& symbols, const Ranking& r);
/// Full verdict object including "schema".
nlohmann::json to_json(const Verdict& v, const SymbolTable& symbols, const Ranking& r);
nlohmann::json to_json(const RunStats& s);

}  // namespace dreduce
