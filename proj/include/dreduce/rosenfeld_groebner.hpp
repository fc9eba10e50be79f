#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dreduce/diffpoly.hpp"
#include "dreduce/ranking.hpp"
#include "dreduce/reduction.hpp"

namespace dreduce {

/// What one unit of the step budget counts.
enum class StepUnit {
  elementary,    // one elimination of one leader power
  divisor_pass,  // one maximal run of eliminations by the same divisor
};

struct Budget {
  std::size_t quiescence_window = 400;
  int order_cap = 12;
  std::size_t step_cap = 100000;
  /// Largest intermediate remainder, in terms.
  std::size_t term_cap = 20000;
  StepUnit unit = StepUnit::elementary;
};

/// separant(g) * theta_f(f) - separant(f) * theta_g(g), where theta_f and
/// theta_g lift both leaders to their least common derivative. Empty when the
/// leaders belong to different indeterminates or one leader is a proper
/// derivative of the other.
std::optional<DiffPoly> delta_poly(const DiffPoly& f, const DiffPoly& g, const Ranking& r);

struct BranchCondition {
  DiffPoly poly;
  bool vanishes = false;  // poly = 0 when true, poly != 0 otherwise
  friend bool operator==(const BranchCondition&, const BranchCondition&) = default;
};

enum class Convergence {
  complete,    // every delta-polynomial reduced to zero
  quiescence,  // no unseen leader within the quiescence window
};

struct ReducedBranch {
  Chain chain;
  std::vector<BranchCondition> conditions;
  Convergence convergence = Convergence::complete;
};

struct RunStats {
  std::size_t total_steps = 0;
  std::size_t distinct_leaders_seen = 0;
  int max_order_reached = 0;
  std::size_t branches_explored = 0;
  std::size_t branches_discarded = 0;
  std::size_t largest_remainder = 0;  // terms
  bool term_cap_hit = false;
  friend bool operator==(const RunStats&, const RunStats&) = default;
};

enum class IrreducibleReason { budget_exhausted, order_cap };

std::string to_string(IrreducibleReason reason);
std::string to_string(Convergence c);

struct Verdict {
  bool reducible = true;
  std::vector<ReducedBranch> branches;  // reducible only; sorted by conditions
  IrreducibleReason reason = IrreducibleReason::budget_exhausted;
  RunStats stats;
};

/// Splitting Ritt-Kolchin completion. Throws InconsistentSystem when the
/// unconditioned system, or every branch of it, is inconsistent.
Verdict rosenfeld_groebner(const std::vector<DiffPoly>& system, const Ranking& r, const Budget& b = {});

enum class Classification { R, I };

Classification classify(const std::vector<DiffPoly>& system, const Ranking& r, const Budget& b = {});

}  // namespace dreduce
