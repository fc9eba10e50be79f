#include "dreduce/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dreduce/errors.hpp"

namespace dreduce {

namespace {

std::uint32_t theta_code(const MultiIndex& t) {
  return (std::uint32_t{t[0]} << 24) | (std::uint32_t{t[1]} << 16) | (std::uint32_t{t[2]} << 8) | t[3];
}

// Keys of p sorted from the highest-ranked down.
std::vector<DerivativeKey> keys_descending(const DiffPoly& p, const Ranking& r) {
  auto ks = p.keys();
  std::vector<DerivativeKey> out(ks.begin(), ks.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return r.less(b, a); });
  return out;
}

void sort_ascending(std::vector<Divisor>& v, const Ranking& r) {
  std::sort(v.begin(), v.end(), [&](const Divisor& a, const Divisor& b) {
    auto c = compare_rank(a.poly, b.poly, r);
    return c != 0 ? c < 0 : a.poly < b.poly;
  });
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const Ranking& r) {
  auto desc = [&](const Monomial& m) {
    std::vector<Factor> f = m.factors();
    std::sort(f.begin(), f.end(), [&](const Factor& x, const Factor& y) { return r.less(y.key, x.key); });
    return f;
  };
  const auto fa = desc(a);
  const auto fb = desc(b);
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = r.compare(fa[i].key, fb[i].key); c != 0) return c;
    if (auto c = fa[i].exponent <=> fb[i].exponent; c != 0) return c;
  }
  return fa.size() <=> fb.size();
}

ReductionResult reduce_by(const DiffPoly& f, std::span<const Divisor> divisors, const Ranking& r, ReductionMode mode,
                          bool record_trace, std::size_t max_steps, std::size_t max_terms) {
  ReductionResult res{f, {}};
  DiffPoly& cur = res.remainder;
  std::map<std::pair<std::size_t, std::uint32_t>, DiffPoly> derived;
  std::size_t last_divisor = divisors.size();

  while (!cur.is_zero()) {
    std::optional<DerivativeKey> target;
    std::size_t chosen = 0;
    for (const auto& k : keys_descending(cur, r)) {
      const DerivativeKey* best_leader = nullptr;
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        const auto& v = divisors[i].data.leader;
        const bool reducible =
            v.proper_divisor_of(k) || (mode == ReductionMode::full && v == k && cur.degree_in(k) >= divisors[i].data.degree);
        if (reducible && (!best_leader || r.less(*best_leader, v))) {
          best_leader = &v;
          chosen = i;
        }
      }
      if (best_leader) {
        target = k;
        break;
      }
    }
    if (!target) break;
    if (res.trace.step_count >= max_steps) {
      res.complete = false;
      break;
    }

    const Divisor& g = divisors[chosen];
    const MultiIndex theta = quotient(target->alpha, g.data.leader.alpha);
    const bool exact = total_order(theta) == 0;
    const std::uint32_t e = cur.degree_in(*target);

    const DiffPoly* reducer = &g.poly;
    const DiffPoly* init = &g.data.initial;
    std::uint32_t d = g.data.degree;
    if (!exact) {
      auto key = std::make_pair(chosen, theta_code(theta));
      auto it = derived.find(key);
      if (it == derived.end()) it = derived.emplace(key, g.poly.differentiate(theta)).first;
      reducer = &it->second;
      init = &g.data.separant;
      d = 1;
    }

    DiffPoly multiplier = cur.coefficient_of(*target, e);
    if (e > d) multiplier *= DiffPoly(Monomial(*target, e - d), Coefficient(1));
    const std::size_t estimate =
        (init->is_parameter_only() ? 1 : init->size()) * cur.size() + multiplier.size() * reducer->size();
    if (estimate > max_terms) {
      res.complete = false;
      res.swelled = true;
      break;
    }
    DiffPoly premultiplier(1L);
    if (init->is_parameter_only()) {
      multiplier *= init->constant_value().inverse();
      cur -= multiplier * *reducer;
    } else {
      premultiplier = *init;
      cur = premultiplier * cur - multiplier * *reducer;
    }

    ++res.trace.step_count;
    if (chosen != last_divisor) ++res.trace.pass_count;
    last_divisor = chosen;
    if (record_trace)
      res.trace.steps.push_back({chosen, theta, std::move(premultiplier), std::move(multiplier)});
  }
  return res;
}

ReductionResult pseudo_reduce(const DiffPoly& f, const DiffPoly& g, const Ranking& r, ReductionMode mode) {
  std::vector<Divisor> one;
  one.emplace_back(g, r);
  return reduce_by(f, one, r, mode, true);
}

ReductionResult reduce_against_chain(const DiffPoly& f, const Chain& c, const Ranking& r) {
  return reduce_by(f, c.divisors(), r, ReductionMode::full, true);
}

DiffPoly replay(const DiffPoly& f, const ReductionTrace& trace, std::span<const DiffPoly> divisors) {
  DiffPoly cur = f;
  for (const auto& s : trace.steps)
    cur = s.premultiplier * cur - s.multiplier * divisors[s.divisor].differentiate(s.theta);
  return cur;
}

DiffPoly normalize(const DiffPoly& p, const Ranking& r) {
  if (p.is_parameter_only()) return p;
  const LeaderData d = leader_data(p, r);
  const Term* lead = nullptr;
  for (const auto& t : d.initial.terms())
    if (!lead || compare_monomials(lead->monomial, t.monomial, r) < 0) lead = &t;
  if (lead->coefficient.is_one()) return p;
  return p * lead->coefficient.inverse();
}

// ---------------------------------------------------------------------------

Chain::Chain(std::vector<DiffPoly> elements, const Ranking& r) {
  for (auto& p : elements) elements_.emplace_back(std::move(p), r);
  sort_ascending(elements_, r);
  if (!is_autoreduced(elements_, r)) throw std::invalid_argument("Chain: elements are not autoreduced");
}

Chain Chain::from_divisors(std::vector<Divisor> elements, const Ranking& r) {
  sort_ascending(elements, r);
  if (!is_autoreduced(elements, r)) throw std::invalid_argument("Chain: elements are not autoreduced");
  Chain c;
  c.elements_ = std::move(elements);
  return c;
}

std::vector<DiffPoly> Chain::polys() const {
  std::vector<DiffPoly> out;
  out.reserve(elements_.size());
  for (const auto& d : elements_) out.push_back(d.poly);
  return out;
}

bool Chain::is_autoreduced(std::span<const Divisor> elements, const Ranking& r) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].poly.is_zero()) return false;
    if (i > 0 && !r.less(elements[i - 1].data.leader, elements[i].data.leader)) return false;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && !is_reduced(elements[i].poly, elements[j].poly, r, ReductionMode::full)) return false;
  }
  return true;
}

std::optional<Chain> try_autoreduce(const std::vector<DiffPoly>& s, const Ranking& r, std::size_t max_terms) {
  std::vector<DiffPoly> pending;
  for (const auto& p : s) {
    if (p.is_zero()) continue;
    if (p.is_parameter_only()) throw Error(ErrorKind::InconsistentSystem, "nonzero constant in the input");
    pending.push_back(p);
  }

  std::vector<Divisor> chain;
  while (!pending.empty()) {
    auto lowest = std::min_element(pending.begin(), pending.end(), [&](const DiffPoly& a, const DiffPoly& b) {
      auto c = compare_rank(a, b, r);
      return c != 0 ? c < 0 : a < b;
    });
    DiffPoly h = std::move(*lowest);
    pending.erase(lowest);

    ReductionResult red = reduce_by(h, chain, r, ReductionMode::full, false,
                                    std::numeric_limits<std::size_t>::max(), max_terms);
    if (red.swelled) return std::nullopt;
    h = std::move(red.remainder);
    if (h.is_zero()) continue;
    if (h.is_parameter_only()) throw Error(ErrorKind::InconsistentSystem, "derived a nonzero constant");

    Divisor added(normalize(h, r), r);
    std::vector<Divisor> kept;
    for (auto& a : chain) {
      if (is_reduced(a.poly, added.poly, r, ReductionMode::full)) kept.push_back(std::move(a));
      else pending.push_back(std::move(a.poly));
    }
    kept.push_back(std::move(added));
    sort_ascending(kept, r);
    chain = std::move(kept);
  }

  Chain out;
  out.elements_ = std::move(chain);
  return out;
}

Chain autoreduce(const std::vector<DiffPoly>& s, const Ranking& r) {
  return *try_autoreduce(s, r, std::numeric_limits<std::size_t>::max());
}

}  // namespace dreduce
