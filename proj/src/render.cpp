#include "dreduce/render.hpp"

#include <algorithm>
#include <sstream>

namespace dreduce {

namespace {

std::string render_monomial(const Monomial& m, const SymbolTable& symbols, const Ranking& r) {
  std::vector<Factor> f = m.factors();
  std::sort(f.begin(), f.end(), [&](const Factor& a, const Factor& b) { return r.less(b.key, a.key); });
  std::string out;
  for (const auto& fac : f) {
    if (!out.empty()) out += '*';
    out += symbols.key_name(fac.key, r.precedence());
    if (fac.exponent > 1) out += '^' + std::to_string(fac.exponent);
  }
  return out;
}

// Renders |term| and reports whether the term was negative.
std::string render_term(const Term& t, const SymbolTable& symbols, const Ranking& r, bool& negative) {
  negative = t.coefficient.leading_sign() < 0;
  const Coefficient mag = negative ? -t.coefficient : t.coefficient;
  if (t.monomial.is_unit()) return mag.to_string(symbols.parameter());
  const std::string mono = render_monomial(t.monomial, symbols, r);
  if (mag.is_one()) return mono;
  return mag.to_string(symbols.parameter()) + "*" + mono;
}

std::string join_terms(std::vector<Term> terms, const SymbolTable& symbols, const Ranking& r) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return compare_monomials(b.monomial, a.monomial, r) < 0; });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool negative = false;
    const std::string body = render_term(terms[i], symbols, r, negative);
    if (i == 0) out += negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

bool needs_parens(const DiffPoly& p) {
  if (p.size() > 1) return true;
  if (p.size() == 1 && p.terms()[0].monomial.is_unit()) {
    const auto& c = p.terms()[0].coefficient;
    return !c.is_rational() && !c.is_parameter_monomial();
  }
  return false;
}

std::string solved_lhs(const LeaderData& d, const SymbolTable& symbols, const Ranking& r) {
  std::string lead = symbols.key_name(d.leader, r.precedence());
  if (d.degree > 1) lead += '^' + std::to_string(d.degree);
  if (d.initial == DiffPoly(1L)) return lead;
  if (d.initial == DiffPoly(-1L)) return "-" + lead;
  std::string init = render(d.initial, symbols, r);
  if (needs_parens(d.initial)) init = "(" + init + ")";
  return init + "*" + lead;
}

}  // namespace

std::string render(const DiffPoly& p, const SymbolTable& symbols, const Ranking& r) {
  return join_terms(p.terms(), symbols, r);
}

std::string render_solved(const DiffPoly& p, const SymbolTable& symbols, const Ranking& r) {
  if (p.is_parameter_only()) return render(p, symbols, r) + " = 0";
  const LeaderData d = leader_data(p, r);
  std::vector<Term> rhs;
  for (const auto& t : p.terms())
    if (t.monomial.degree_in(d.leader) != d.degree) rhs.push_back({t.monomial, -t.coefficient});
  return solved_lhs(d, symbols, r) + " = " + join_terms(std::move(rhs), symbols, r);
}

std::string render(const Chain& c, const SymbolTable& symbols, const Ranking& r) {
  std::string out;
  for (const auto& d : c.divisors()) out += render_solved(d.poly, symbols, r) + "\n";
  return out;
}

std::string render_condition(const BranchCondition& c, const SymbolTable& symbols, const Ranking& r) {
  return render(c.poly, symbols, r) + (c.vanishes ? " = 0" : " != 0");
}

std::string render(const Verdict& v, const SymbolTable& symbols, const Ranking& r) {
  std::ostringstream out;
  if (!v.reducible) {
    out << "verdict: I (irreducible: " << to_string(v.reason) << (v.stats.term_cap_hit ? ", term cap" : "") << ")\n";
  } else {
    out << "verdict: R (" << v.branches.size() << (v.branches.size() == 1 ? " branch" : " branches") << ")\n";
    for (std::size_t i = 0; i < v.branches.size(); ++i) {
      const auto& b = v.branches[i];
      out << "\nbranch " << i + 1 << " [" << to_string(b.convergence) << "]";
      if (!b.conditions.empty()) {
        out << " assuming";
        for (std::size_t k = 0; k < b.conditions.size(); ++k)
          out << (k ? ", " : " ") << render_condition(b.conditions[k], symbols, r);
      }
      out << "\n" << render(b.chain, symbols, r);
    }
  }
  const auto& s = v.stats;
  out << "\nsteps: " << s.total_steps << ", distinct leaders: " << s.distinct_leaders_seen
      << ", max order: " << s.max_order_reached << ", branches: " << s.branches_explored << " explored, "
      << s.branches_discarded << " discarded\n";
  return out.str();
}

nlohmann::json to_json(const Chain& c, const SymbolTable& symbols, const Ranking& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : c.divisors()) {
    const std::string solved = render_solved(d.poly, symbols, r);
    const auto eq = solved.find(" = ");
    arr.push_back({{"leader", symbols.key_name(d.data.leader, r.precedence())},
                   {"lhs", solved.substr(0, eq)},
                   {"rhs", solved.substr(eq + 3)},
                   {"poly", render(d.poly, symbols, r)}});
  }
  return arr;
}

nlohmann::json to_json(const RunStats& s) {
  return {{"total_steps", s.total_steps},
          {"distinct_leaders_seen", s.distinct_leaders_seen},
          {"max_order_reached", s.max_order_reached},
          {"branches_explored", s.branches_explored},
          {"branches_discarded", s.branches_discarded},
          {"largest_remainder", s.largest_remainder},
          {"term_cap_hit", s.term_cap_hit}};
}

nlohmann::json to_json(const Verdict& v, const SymbolTable& symbols, const Ranking& r) {
  nlohmann::json out;
  out["schema"] = kSchemaVersion;
  out["outcome"] = v.reducible ? "R" : "I";
  out["reason"] = v.reducible ? nlohmann::json(nullptr) : nlohmann::json(to_string(v.reason));
  out["provenance"] = v.reducible ? "completed or quiescent within budget"
                                  : "budget or order cap reached; not a proof of irreducibility";
  nlohmann::json chains = nlohmann::json::array();
  nlohmann::json conditions = nlohmann::json::array();
  nlohmann::json convergence = nlohmann::json::array();
  for (const auto& b : v.branches) {
    chains.push_back(to_json(b.chain, symbols, r));
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : b.conditions) conds.push_back(render_condition(c, symbols, r));
    conditions.push_back(std::move(conds));
    convergence.push_back(to_string(b.convergence));
  }
  out["chains"] = std::move(chains);
  out["branch_conditions"] = std::move(conditions);
  out["convergence"] = std::move(convergence);
  out["stats"] = to_json(v.stats);
  return out;
}

}  // namespace dreduce
