#pragma once

#include <cstddef>
#include <vector>

#include "ordstop/dist.hpp"
#include "ordstop/stopping.hpp"

namespace ordstop {

/// One two-point variable: value b w.p. p, value a w.p. 1-p, 0 <= a <= b.
struct TwoPointVar {
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;
};

/// A collection of two-point variables, validated at construction.
class TwoPointInstance {
 public:
  explicit TwoPointInstance(std::vector<TwoPointVar> vars);

  const std::vector<TwoPointVar>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }

  /// The variables as distributions, in index order.
  std::vector<Dist> dists() const;

 private:
  std::vector<TwoPointVar> vars_;
};

/// Optimal ordering when every left endpoint is zero: sort by right endpoint
/// descending (ties by index). The value equals the hindsight maximum.
OrderingResult solve_zero_left(const TwoPointInstance& inst);

/// Optimal ordering for arbitrary two-point variables. Evaluates the n
/// candidate orders that place one variable last and the rest in descending
/// right-endpoint order, and returns the best (ties by smallest candidate
/// index). O(n^2) evaluator work after one sort.
OrderingResult solve(const TwoPointInstance& inst);

/// Left-endpoint property: every non-final position's left endpoint is at
/// most the continuation value (within 1e-12).
bool check_lep(const OrderingResult& res, const TwoPointInstance& inst);

}  // namespace ordstop
