#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dreduce/diffpoly.hpp"
#include "dreduce/ranking.hpp"

namespace dreduce {

/// A parsed system file.
///
///   # comment
///   var u, v, w, p
///   param nu
///   derivations t, x, y, z        (optional; restricts suffix letters)
///   ranking u>v>w>p; prec x,y,z,t (optional)
///   u_x + v_y + w_z = 0
///
/// Declarations may end in ';'. One equation per line; "lhs = rhs" is stored
/// as lhs - rhs and a bare expression as expression = 0.
struct SystemFile {
  SymbolTable symbols;
  std::vector<DiffPoly> equations;
  std::optional<Ranking> ranking;

  /// The file's ranking, or declaration order with default precedence.
  Ranking effective_ranking() const;
};

/// Throws SyntaxError (with 1-based line/column), UndeclaredSymbol,
/// UnknownIndeterminate or DuplicateEntry.
SystemFile parse_system(std::string_view text);

/// Parses one expression or equation against declared symbols.
DiffPoly parse_polynomial(std::string_view text, const SymbolTable& symbols);

/// "u>v>w>p" with optional "; prec x,y,z,t". Missing derivations in a partial
/// precedence list follow in default order.
Ranking parse_ranking(std::string_view text, const SymbolTable& symbols);

}  // namespace dreduce
