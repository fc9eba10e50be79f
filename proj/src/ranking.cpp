#include "dreduce/ranking.hpp"

#include <algorithm>

#include "dreduce/errors.hpp"

namespace dreduce {

Ranking::Ranking(std::vector<IndeterminateId> blocks, std::array<Derivation, 4> precedence)
    : blocks_(std::move(blocks)), precedence_(precedence) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const IndeterminateId id = blocks_[i];
    if (id >= position_.size()) position_.resize(id + 1, -1);
    if (position_[id] >= 0) throw Error(ErrorKind::DuplicateEntry, "indeterminate listed twice in ranking");
    position_[id] = static_cast<int>(i);
  }
  std::array<bool, 4> seen{};
  for (Derivation d : precedence_) {
    if (seen[static_cast<int>(d)]) throw Error(ErrorKind::DuplicateEntry, "derivation listed twice in precedence");
    seen[static_cast<int>(d)] = true;
  }
}

std::strong_ordering Ranking::compare(const DerivativeKey& a, const DerivativeKey& b) const {
  if (!ranks(a.base) || !ranks(b.base))
    throw Error(ErrorKind::UnknownIndeterminate, "derivative of an indeterminate missing from the ranking");
  if (a.base != b.base) return position_[b.base] <=> position_[a.base];  // earlier block ranks higher
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  for (Derivation d : precedence_) {
    const int slot = static_cast<int>(d);
    if (auto c = a.alpha[slot] <=> b.alpha[slot]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

DerivativeKey leader(const DiffPoly& p, const Ranking& r) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no leader");
  const DerivativeKey* best = nullptr;
  for (const auto& t : p.terms())
    for (const auto& f : t.monomial.factors())
      if (!best || r.less(*best, f.key)) best = &f.key;
  if (!best) throw Error(ErrorKind::NoLeader, "polynomial involves parameters only");
  return *best;
}

LeaderData leader_data(const DiffPoly& p, const Ranking& r) {
  LeaderData d;
  d.leader = leader(p, r);
  d.degree = p.degree_in(d.leader);
  d.initial = p.coefficient_of(d.leader, d.degree);
  d.separant = p.partial(d.leader);
  return d;
}

bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r, ReductionMode mode) {
  const DerivativeKey v = leader(g, r);
  for (const auto& t : f.terms())
    for (const auto& fac : t.monomial.factors())
      if (v.proper_divisor_of(fac.key)) return false;
  if (mode == ReductionMode::full) return f.degree_in(v) < g.degree_in(v);
  return true;
}

std::strong_ordering compare_rank(const DiffPoly& a, const DiffPoly& b, const Ranking& r) {
  const bool ac = a.is_parameter_only();
  const bool bc = b.is_parameter_only();
  if (ac || bc) return bc <=> ac;  // constants rank lowest
  const DerivativeKey la = leader(a, r);
  const DerivativeKey lb = leader(b, r);
  if (auto c = r.compare(la, lb); c != 0) return c;
  return a.degree_in(la) <=> b.degree_in(lb);
}

}  // namespace dreduce
