#include "dreduce/rosenfeld_groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "dreduce/errors.hpp"

namespace dreduce {

std::string to_string(IrreducibleReason reason) {
  return reason == IrreducibleReason::budget_exhausted ? "budget_exhausted" : "order_cap";
}

std::string to_string(Convergence c) { return c == Convergence::complete ? "complete" : "quiescence"; }

std::optional<DiffPoly> delta_poly(const DiffPoly& f, const DiffPoly& g, const Ranking& r) {
  const LeaderData df = leader_data(f, r);
  const LeaderData dg = leader_data(g, r);
  if (df.leader.base != dg.leader.base) return std::nullopt;
  if (df.leader.proper_divisor_of(dg.leader) || dg.leader.proper_divisor_of(df.leader)) return std::nullopt;
  const MultiIndex common = lcm(df.leader.alpha, dg.leader.alpha);
  const DiffPoly lifted_f = f.differentiate(quotient(common, df.leader.alpha));
  const DiffPoly lifted_g = g.differentiate(quotient(common, dg.leader.alpha));
  return dg.separant * lifted_f - df.separant * lifted_g;
}

namespace {

struct Element {
  Divisor div;
  std::size_t id;
};

struct BranchState {
  std::vector<DiffPoly> inputs;  // system plus assumed-vanishing conditions
  std::vector<DiffPoly> pending;
  std::vector<Element> chain;    // ascending rank
  std::vector<DiffPoly> inequations;
  std::vector<BranchCondition> conditions;
  std::set<std::pair<std::size_t, std::size_t>> done_pairs;
  std::set<DerivativeKey> seen;
  std::size_t quiet_steps = 0;
};

enum class BranchEnd { reduced, discarded, irreducible };

bool conditions_less(const ReducedBranch& a, const ReducedBranch& b) {
  const auto& x = a.conditions;
  const auto& y = b.conditions;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i].vanishes != y[i].vanishes) return !x[i].vanishes;
    if (auto c = x[i].poly <=> y[i].poly; c != 0) return c < 0;
  }
  return x.size() < y.size();
}

class Engine {
 public:
  Engine(const Ranking& r, const Budget& b) : r_(r), b_(b) {}

  Verdict run(const std::vector<DiffPoly>& system) {
    BranchState root;
    for (const auto& p : system) {
      if (p.is_zero()) continue;
      if (p.is_parameter_only()) throw Error(ErrorKind::InconsistentSystem, "nonzero constant in the input");
      root.inputs.push_back(p);
    }
    root.pending = root.inputs;
    stack_.push_back(std::move(root));

    Verdict v;
    while (!stack_.empty()) {
      BranchState s = std::move(stack_.back());
      stack_.pop_back();
      const BranchEnd end = run_branch(s);
      if (end == BranchEnd::irreducible) {
        v.reducible = false;
        v.reason = reason_;
        break;
      }
      if (end == BranchEnd::discarded) ++stats_.branches_discarded;
    }
    stats_.distinct_leaders_seen = all_seen_.size();
    v.stats = stats_;
    if (v.reducible) {
      if (results_.empty()) throw Error(ErrorKind::InconsistentSystem, "every branch is inconsistent");
      std::sort(results_.begin(), results_.end(), conditions_less);
      v.branches = std::move(results_);
    }
    return v;
  }

 private:
  std::vector<Divisor> divisors(const BranchState& s) const {
    std::vector<Divisor> out;
    out.reserve(s.chain.size());
    for (const auto& e : s.chain) out.push_back(e.div);
    return out;
  }

  // Returns false when the step cap interrupted the reduction.
  bool reduce(BranchState& s, const DiffPoly& p, DiffPoly& out) {
    const std::size_t room = b_.step_cap - stats_.total_steps;
    ReductionResult res = reduce_by(p, divisors(s), r_, ReductionMode::full, false, room, b_.term_cap);
    const std::size_t used = b_.unit == StepUnit::elementary ? res.trace.step_count : res.trace.pass_count;
    stats_.total_steps += used;
    s.quiet_steps += used;
    out = std::move(res.remainder);
    stats_.largest_remainder = std::max(stats_.largest_remainder, out.size());
    if (res.swelled) stats_.term_cap_hit = true;
    return res.complete;
  }

  // Records a leader; returns false if it breaks the order cap.
  bool note_leader(BranchState& s, const DerivativeKey& k) {
    if (s.seen.insert(k).second) s.quiet_steps = 0;
    all_seen_.insert(k);
    stats_.max_order_reached = std::max(stats_.max_order_reached, k.order());
    return k.order() <= b_.order_cap;
  }

  static bool contains(const std::vector<DiffPoly>& v, const DiffPoly& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  }

  void split(BranchState& s, const DiffPoly& h, const LeaderData& d) {
    std::vector<DiffPoly> pivots{d.initial};
    if (d.degree > 1) pivots.push_back(d.separant);
    for (const auto& q : pivots) {
      if (q.is_parameter_only()) continue;  // parameters are nonzero
      const DiffPoly qn = normalize(q, r_);
      if (contains(s.inequations, qn)) continue;
      BranchState zero = s;
      zero.inputs.push_back(qn);
      zero.pending.push_back(h);
      zero.pending.push_back(qn);
      zero.conditions.push_back({qn, true});
      zero.quiet_steps = 0;
      stack_.push_back(std::move(zero));
      s.inequations.push_back(qn);
      s.conditions.push_back({qn, false});
    }
  }

  void insert(BranchState& s, DiffPoly h) {
    Divisor added(std::move(h), r_);
    std::vector<Element> kept;
    for (auto& e : s.chain) {
      if (is_reduced(e.div.poly, added.poly, r_, ReductionMode::full)) kept.push_back(std::move(e));
      else s.pending.push_back(std::move(e.div.poly));
    }
    kept.push_back({std::move(added), next_id_++});
    std::sort(kept.begin(), kept.end(), [&](const Element& a, const Element& b) {
      return r_.less(a.div.data.leader, b.div.data.leader);
    });
    s.chain = std::move(kept);
  }

  // Lowest-lcm unprocessed pair of chain elements sharing an indeterminate.
  std::optional<std::pair<std::size_t, std::size_t>> next_pair(const BranchState& s) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    DerivativeKey best_key;
    std::pair<std::size_t, std::size_t> best_ids;
    for (std::size_t i = 0; i < s.chain.size(); ++i) {
      for (std::size_t j = i + 1; j < s.chain.size(); ++j) {
        const auto& a = s.chain[i];
        const auto& b = s.chain[j];
        if (a.div.data.leader.base != b.div.data.leader.base) continue;
        const std::pair<std::size_t, std::size_t> ids = std::minmax(a.id, b.id);
        if (s.done_pairs.count(ids)) continue;
        const DerivativeKey key{a.div.data.leader.base, lcm(a.div.data.leader.alpha, b.div.data.leader.alpha)};
        const bool better = !best || r_.less(key, best_key) || (key == best_key && ids < best_ids);
        if (better) {
          best = std::make_pair(i, j);
          best_key = key;
          best_ids = ids;
        }
      }
    }
    return best;
  }

  DiffPoly delta(const Element& a, const Element& b) const {
    const auto& da = a.div.data;
    const auto& db = b.div.data;
    const MultiIndex common = lcm(da.leader.alpha, db.leader.alpha);
    const DiffPoly la = a.div.poly.differentiate(quotient(common, da.leader.alpha));
    const DiffPoly lb = b.div.poly.differentiate(quotient(common, db.leader.alpha));
    return db.separant * la - da.separant * lb;
  }

  // Reduces every pair and every branch input against the current chain.
  // Returns the nonzero remainders; sets `interrupted` if the cap hit.
  std::vector<DiffPoly> verify(BranchState& s, bool& interrupted) {
    std::vector<DiffPoly> found;
    std::vector<DiffPoly> candidates;
    for (std::size_t i = 0; i < s.chain.size(); ++i)
      for (std::size_t j = i + 1; j < s.chain.size(); ++j)
        if (s.chain[i].div.data.leader.base == s.chain[j].div.data.leader.base)
          candidates.push_back(delta(s.chain[i], s.chain[j]));
    candidates.insert(candidates.end(), s.inputs.begin(), s.inputs.end());
    for (const auto& c : candidates) {
      DiffPoly rem;
      if (!reduce(s, c, rem)) {
        interrupted = true;
        return {};
      }
      if (!rem.is_zero()) found.push_back(std::move(rem));
    }
    return found;
  }

  BranchEnd finish(BranchState& s, Convergence how) {
    for (const auto& h : s.inequations) {
      DiffPoly rem;
      if (!reduce(s, h, rem)) return fail(IrreducibleReason::budget_exhausted);
      if (rem.is_zero()) return BranchEnd::discarded;
    }
    std::vector<Divisor> divs = divisors(s);
    results_.push_back({Chain::from_divisors(std::move(divs), r_), s.conditions, how});
    return BranchEnd::reduced;
  }

  BranchEnd fail(IrreducibleReason why) {
    reason_ = why;
    return BranchEnd::irreducible;
  }

  BranchEnd run_branch(BranchState& s) {
    ++stats_.branches_explored;
    while (true) {
      if (stats_.total_steps >= b_.step_cap) return fail(IrreducibleReason::budget_exhausted);
      if (s.quiet_steps >= b_.quiescence_window) return finish(s, Convergence::quiescence);

      if (!s.pending.empty()) {
        auto lowest = std::min_element(s.pending.begin(), s.pending.end(), [&](const DiffPoly& a, const DiffPoly& b) {
          auto c = compare_rank(a, b, r_);
          return c != 0 ? c < 0 : a < b;
        });
        DiffPoly p = std::move(*lowest);
        s.pending.erase(lowest);

        DiffPoly h;
        if (!reduce(s, p, h)) return fail(IrreducibleReason::budget_exhausted);
        if (h.is_zero()) continue;
        if (h.is_parameter_only()) {
          if (s.conditions.empty()) throw Error(ErrorKind::InconsistentSystem, "derived a nonzero constant");
          return BranchEnd::discarded;
        }
        h = normalize(h, r_);
        if (contains(s.inequations, h)) return BranchEnd::discarded;
        const LeaderData d = leader_data(h, r_);
        if (!note_leader(s, d.leader)) return fail(IrreducibleReason::order_cap);
        split(s, h, d);
        insert(s, std::move(h));
        continue;
      }

      if (auto pair = next_pair(s)) {
        const Element& a = s.chain[pair->first];
        const Element& b = s.chain[pair->second];
        s.done_pairs.insert(std::pair<std::size_t, std::size_t>(std::minmax(a.id, b.id)));
        DiffPoly d = delta(a, b);
        if (!d.is_zero()) s.pending.push_back(std::move(d));
        continue;
      }

      bool interrupted = false;
      std::vector<DiffPoly> extra = verify(s, interrupted);
      if (interrupted) return fail(IrreducibleReason::budget_exhausted);
      if (extra.empty()) return finish(s, Convergence::complete);
      for (auto& e : extra) s.pending.push_back(std::move(e));
    }
  }

  const Ranking& r_;
  Budget b_;
  RunStats stats_;
  std::set<DerivativeKey> all_seen_;
  std::size_t next_id_ = 0;
  std::vector<BranchState> stack_;
  std::vector<ReducedBranch> results_;
  IrreducibleReason reason_ = IrreducibleReason::budget_exhausted;
};

}  // namespace

Verdict rosenfeld_groebner(const std::vector<DiffPoly>& system, const Ranking& r, const Budget& b) {
  return Engine(r, b).run(system);
}

Classification classify(const std::vector<DiffPoly>& system, const Ranking& r, const Budget& b) {
  return rosenfeld_groebner(system, r, b).reducible ? Classification::R : Classification::I;
}

}  // namespace dreduce
