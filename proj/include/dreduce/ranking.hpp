#pragma once

#include <array>
#include <compare>
#include <vector>

#include "dreduce/diffpoly.hpp"

namespace dreduce {

enum class ReductionMode { partial, full };

/// Elimination ranking with one indeterminate per block (highest first);
/// orderly inside a block, ties broken lexicographically along the
/// derivation precedence list.
class Ranking {
 public:
  static constexpr std::array<Derivation, 4> kDefaultPrecedence = {Derivation::x, Derivation::y, Derivation::z,
                                                                   Derivation::t};

  Ranking() = default;
  /// Throws DuplicateEntry on repeated blocks or derivations.
  explicit Ranking(std::vector<IndeterminateId> blocks,
                   std::array<Derivation, 4> precedence = kDefaultPrecedence);

  const std::vector<IndeterminateId>& blocks() const { return blocks_; }
  const std::array<Derivation, 4>& precedence() const { return precedence_; }
  bool ranks(IndeterminateId id) const { return id < position_.size() && position_[id] >= 0; }

  /// Throws UnknownIndeterminate when a base is not in the ranking.
  std::strong_ordering compare(const DerivativeKey& a, const DerivativeKey& b) const;
  bool less(const DerivativeKey& a, const DerivativeKey& b) const { return compare(a, b) < 0; }

 private:
  std::vector<IndeterminateId> blocks_;
  std::vector<int> position_;
  std::array<Derivation, 4> precedence_ = kDefaultPrecedence;
};

struct LeaderData {
  DerivativeKey leader;
  std::uint32_t degree = 0;
  DiffPoly initial;
  DiffPoly separant;
};

/// Highest-ranked key of p. Throws ZeroPolynomial / NoLeader.
DerivativeKey leader(const DiffPoly& p, const Ranking& r);
LeaderData leader_data(const DiffPoly& p, const Ranking& r);

/// True when f needs no reduction by g (g must have a leader).
bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r, ReductionMode mode = ReductionMode::full);

/// Rank of a nonzero polynomial: (leader, degree); parameter-only polynomials
/// rank below everything.
std::strong_ordering compare_rank(const DiffPoly& a, const DiffPoly& b, const Ranking& r);

}  // namespace dreduce
