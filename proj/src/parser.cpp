#include "dreduce/parser.hpp"

#include <cctype>
#include <sstream>

#include "dreduce/errors.hpp"

namespace dreduce {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct ParseContext {
  const SymbolTable& symbols;
  bool parameter_declared = true;
  std::array<bool, 4> allowed_derivations{true, true, true, true};
};

// Recursive-descent parser over one line of text.
class ExprParser {
 public:
  ExprParser(std::string_view src, int line, int column_offset, const ParseContext& ctx)
      : src_(src), line_(line), offset_(column_offset), ctx_(ctx) {}

  DiffPoly equation() {
    DiffPoly lhs = expression();
    skip_space();
    if (peek() == '=') {
      ++pos_;
      DiffPoly rhs = expression();
      lhs -= rhs;
    }
    skip_space();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw SyntaxError(msg, line_, offset_ + static_cast<int>(pos) + 1);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  DiffPoly expression() {
    skip_space();
    DiffPoly acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      DiffPoly rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  DiffPoly term() {
    DiffPoly acc = unary();
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') break;
      const std::size_t op = pos_++;
      DiffPoly rhs = unary();
      if (c == '*') {
        acc *= rhs;
      } else {
        if (!rhs.is_parameter_only()) fail_at(op, "division by an expression involving derivatives");
        if (rhs.is_zero()) fail_at(op, "division by zero");
        acc *= rhs.constant_value().inverse();
      }
    }
    return acc;
  }

  DiffPoly unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  DiffPoly power() {
    DiffPoly base = atom();
    skip_space();
    if (peek() != '^') return base;
    const std::size_t op = pos_++;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 4) fail_at(start, "exponent too large");
    const unsigned n = static_cast<unsigned>(std::stoul(digits));
    if (negative) {
      if (!base.is_parameter_only() || base.is_zero()) fail_at(op, "negative exponent on a non-invertible base");
      base = DiffPoly(base.constant_value().inverse());
    }
    return pow(base, n);
  }

  DiffPoly atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      DiffPoly inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return DiffPoly(Coefficient(mpq_class(std::string(src_.substr(start, pos_ - start)))));
    }
    if (is_ident_start(c)) return identifier();
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  DiffPoly identifier() {
    const std::size_t start = pos_;
    while (is_ident_char(peek())) ++pos_;
    while (peek() == '\'') ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    MultiIndex alpha{};
    bool has_suffix = false;
    std::size_t suffix_pos = pos_;
    if (peek() == '_') {
      has_suffix = true;
      ++pos_;
      if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected derivation letters after '_'");
      while (std::isalpha(static_cast<unsigned char>(peek()))) {
        const auto d = derivation_from_char(peek());
        if (!d) fail("'" + std::string(1, peek()) + "' is not a derivation (use t, x, y, z)");
        if (!ctx_.allowed_derivations[static_cast<int>(*d)])
          throw Error(ErrorKind::UndeclaredSymbol, "derivation '" + std::string(1, peek()) + "' is not declared");
        ++alpha[static_cast<int>(*d)];
        ++pos_;
      }
    }

    if (name == ctx_.symbols.parameter()) {
      if (!ctx_.parameter_declared) throw Error(ErrorKind::UndeclaredSymbol, "'" + name + "'");
      if (has_suffix) fail_at(suffix_pos, "parameters carry no derivatives");
      return DiffPoly(Coefficient::parameter_power(1));
    }
    auto id = ctx_.symbols.find(name);
    if (!id) throw Error(ErrorKind::UndeclaredSymbol, "'" + name + "' (line " + std::to_string(line_) + ")");
    return DiffPoly(DerivativeKey{*id, alpha});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;
  const ParseContext& ctx_;
};

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !is_ident_start(n[0])) return false;
  std::size_t i = 1;
  while (i < n.size() && is_ident_char(n[i])) ++i;
  while (i < n.size() && n[i] == '\'') ++i;
  return i == n.size();
}

// Returns the rest of the line if it starts with the given keyword.
std::optional<std::string_view> keyword(std::string_view line, std::string_view word) {
  if (line.substr(0, word.size()) != word) return std::nullopt;
  std::string_view rest = line.substr(word.size());
  if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest.front()))) return std::nullopt;
  rest = trim(rest);
  if (!rest.empty() && rest.back() == ';') rest.remove_suffix(1);
  return trim(rest);
}

}  // namespace

Ranking SystemFile::effective_ranking() const {
  if (ranking) return *ranking;
  std::vector<IndeterminateId> blocks;
  for (std::size_t i = 0; i < symbols.size(); ++i) blocks.push_back(static_cast<IndeterminateId>(i));
  return Ranking(blocks);
}

Ranking parse_ranking(std::string_view text, const SymbolTable& symbols) {
  std::string_view blocks_text = text;
  std::string_view prec_text;
  if (auto semi = text.find(';'); semi != std::string_view::npos) {
    blocks_text = text.substr(0, semi);
    prec_text = trim(text.substr(semi + 1));
    if (prec_text.substr(0, 4) != "prec")
      throw SyntaxError("expected 'prec' after ';' in ranking", 1, static_cast<int>(semi) + 2);
    prec_text = trim(prec_text.substr(4));
  }

  std::vector<IndeterminateId> blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t gt = blocks_text.find('>', start);
    const std::string name(trim(blocks_text.substr(start, gt == std::string_view::npos ? gt : gt - start)));
    if (name.empty()) throw SyntaxError("empty entry in ranking", 1, static_cast<int>(start) + 1);
    const IndeterminateId id = symbols.id(name);
    if (std::find(blocks.begin(), blocks.end(), id) != blocks.end())
      throw Error(ErrorKind::DuplicateEntry, "'" + name + "' appears twice in the ranking");
    blocks.push_back(id);
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }

  std::array<Derivation, 4> precedence = Ranking::kDefaultPrecedence;
  if (!prec_text.empty()) {
    std::vector<Derivation> listed;
    for (const auto& tok : split_names(prec_text)) {
      const auto d = tok.size() == 1 ? derivation_from_char(tok[0]) : std::nullopt;
      if (!d) throw SyntaxError("unknown derivation '" + tok + "' in precedence", 1, 1);
      if (std::find(listed.begin(), listed.end(), *d) != listed.end())
        throw Error(ErrorKind::DuplicateEntry, "derivation '" + tok + "' appears twice in precedence");
      listed.push_back(*d);
    }
    for (Derivation d : Ranking::kDefaultPrecedence)
      if (std::find(listed.begin(), listed.end(), d) == listed.end()) listed.push_back(d);
    std::copy(listed.begin(), listed.end(), precedence.begin());
  }
  return Ranking(std::move(blocks), precedence);
}

DiffPoly parse_polynomial(std::string_view text, const SymbolTable& symbols) {
  ParseContext ctx{symbols};
  return ExprParser(text, 1, 0, ctx).equation();
}

SystemFile parse_system(std::string_view text) {
  SystemFile out;
  ParseContext ctx{out.symbols};
  ctx.parameter_declared = false;
  bool param_seen = false;
  std::optional<std::pair<std::string, int>> ranking_line;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string_view::npos) continue;
    const std::string_view body = trim(line);

    if (auto rest = keyword(body, "var")) {
      for (const auto& n : split_names(*rest)) {
        if (!valid_name(n)) throw SyntaxError("invalid indeterminate name '" + n + "'", line_no, static_cast<int>(lead) + 1);
        if (out.symbols.find(n) || (param_seen && n == out.symbols.parameter()))
          throw Error(ErrorKind::DuplicateEntry, "'" + n + "' declared twice");
        out.symbols.declare(n);
      }
    } else if (auto rest = keyword(body, "param")) {
      const auto names = split_names(*rest);
      if (names.size() != 1 || param_seen)
        throw SyntaxError("exactly one parameter may be declared", line_no, static_cast<int>(lead) + 1);
      if (!valid_name(names[0]) || out.symbols.find(names[0]))
        throw SyntaxError("invalid parameter name '" + names[0] + "'", line_no, static_cast<int>(lead) + 1);
      out.symbols.set_parameter(names[0]);
      param_seen = true;
      ctx.parameter_declared = true;
    } else if (auto rest = keyword(body, "derivations")) {
      ctx.allowed_derivations = {false, false, false, false};
      for (const auto& n : split_names(*rest)) {
        const auto d = n.size() == 1 ? derivation_from_char(n[0]) : std::nullopt;
        if (!d) throw SyntaxError("unknown derivation '" + n + "'", line_no, static_cast<int>(lead) + 1);
        ctx.allowed_derivations[static_cast<int>(*d)] = true;
      }
    } else if (auto rest = keyword(body, "ranking")) {
      if (ranking_line) throw Error(ErrorKind::DuplicateEntry, "second ranking line");
      ranking_line = std::make_pair(std::string(*rest), line_no);
    } else {
      ExprParser p(line.substr(lead), line_no, static_cast<int>(lead), ctx);
      out.equations.push_back(p.equation());
    }
  }
  if (ranking_line) out.ranking = parse_ranking(ranking_line->first, out.symbols);
  return out;
}

}  // namespace dreduce
