#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "dreduce/diffpoly.hpp"
#include "dreduce/ranking.hpp"

namespace dreduce {

/// A polynomial together with its cached leader data.
struct Divisor {
  DiffPoly poly;
  LeaderData data;

  Divisor(DiffPoly p, const Ranking& r) : poly(std::move(p)), data(leader_data(poly, r)) {}
};

/// One elementary elimination:
///   f <- premultiplier * f - multiplier * theta(divisors[divisor]).
struct ReductionStep {
  std::size_t divisor = 0;
  MultiIndex theta{};
  DiffPoly premultiplier;
  DiffPoly multiplier;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // empty unless recording was requested
  std::size_t step_count = 0;        // elementary eliminations
  std::size_t pass_count = 0;        // maximal runs of steps using one divisor
};

struct ReductionResult {
  DiffPoly remainder;
  ReductionTrace trace;
  bool complete = true;  // false when stopped by max_steps or max_terms
  bool swelled = false;  // stopped because the remainder outgrew max_terms
};

/// Autoreduced set ordered by ascending rank of leaders.
class Chain {
 public:
  Chain() = default;
  /// Takes elements in any order; throws std::invalid_argument if they do not
  /// form an autoreduced set with distinct leaders.
  Chain(std::vector<DiffPoly> elements, const Ranking& r);

  /// Same contract as the constructor, reusing cached leader data.
  static Chain from_divisors(std::vector<Divisor> elements, const Ranking& r);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Divisor>& divisors() const { return elements_; }
  std::vector<DiffPoly> polys() const;

  /// Pairwise full reducedness, distinct leaders, ascending order.
  static bool is_autoreduced(std::span<const Divisor> elements, const Ranking& r);

 private:
  friend std::optional<Chain> try_autoreduce(const std::vector<DiffPoly>&, const Ranking&, std::size_t);
  std::vector<Divisor> elements_;
};

/// Ritt reduction of f by a family of divisors. Each step eliminates the
/// highest-ranked reducible derivative of f, using the divisor with the
/// highest-ranked leader among those able to reduce it.
ReductionResult reduce_by(const DiffPoly& f, std::span<const Divisor> divisors, const Ranking& r,
                          ReductionMode mode = ReductionMode::full, bool record_trace = false,
                          std::size_t max_steps = std::numeric_limits<std::size_t>::max(),
                          std::size_t max_terms = std::numeric_limits<std::size_t>::max());

/// Throws NoLeader if g is parameter-only.
ReductionResult pseudo_reduce(const DiffPoly& f, const DiffPoly& g, const Ranking& r,
                              ReductionMode mode = ReductionMode::full);

ReductionResult reduce_against_chain(const DiffPoly& f, const Chain& c, const Ranking& r);

/// Re-runs a recorded trace; returns the remainder it describes.
DiffPoly replay(const DiffPoly& f, const ReductionTrace& trace, std::span<const DiffPoly> divisors);

/// Scales p so that the leading coefficient of its initial is 1. When the
/// initial is parameter-only this makes the leader monic.
DiffPoly normalize(const DiffPoly& p, const Ranking& r);

/// Fixed point of reduction and reinsertion. Throws InconsistentSystem if a
/// nonzero parameter-only polynomial appears.
Chain autoreduce(const std::vector<DiffPoly>& s, const Ranking& r);

/// As autoreduce, but gives up (nullopt) once a remainder would exceed
/// max_terms terms.
std::optional<Chain> try_autoreduce(const std::vector<DiffPoly>& s, const Ranking& r, std::size_t max_terms);

/// Ranking-aware monomial order: compare keys from the highest-ranked down,
/// then exponents.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const Ranking& r);

}  // namespace dreduce
