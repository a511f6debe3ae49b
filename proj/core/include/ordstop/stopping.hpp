#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ordstop/dist.hpp"

namespace ordstop {

/// Value of a fixed probe order under the optimal stopping rule.
///
/// thresholds[j] is the expected reward of the suffix starting at position j
/// (0-based), so thresholds[n] = 0, value = thresholds[0], and the optimal
/// policy accepts the variable at position t iff its realization is at least
/// thresholds[t+1].
struct OrderingResult {
  std::vector<std::size_t> order;
  double value = 0.0;
  std::vector<double> thresholds;
};

/// Per-position excess decomposition of an ordering's value.
///
/// cutoffs[i] is the continuation value after position i and excesses[i] is
/// E[(X_i - cutoffs[i])+]; the excesses telescope to the ordering's value.
struct ExcessProfile {
  std::vector<double> excesses;
  std::vector<double> cutoffs;
  double total = 0.0;
};

/// E[max(X, c)] for c >= 0, exact for both finite and uniform supports.
double emax(const FiniteDist& d, double c);
double emax(const UniformDist& d, double c);
double emax(const Dist& d, double c);

/// E[(X - c)+] = emax(d, c) - c.
double excess(const Dist& d, double c);

/// Backward-induction value of probing the sequence in the given order.
/// An empty sequence has value 0 and empty thresholds.
OrderingResult sequence_value(std::span<const Dist> seq);
OrderingResult sequence_value(std::span<const FiniteDist> seq);

/// sequence_value of dists permuted by `order`; the result carries `order`.
OrderingResult evaluate_order(std::span<const Dist> dists,
                              std::span<const std::size_t> order);
OrderingResult evaluate_order(std::span<const FiniteDist> dists,
                              std::span<const std::size_t> order);

/// E[max of all variables], the hindsight (prophet) benchmark. Computed over
/// the sorted union of atoms; uniform variables are not supported and the
/// Dist overload throws ShapeError when one is present.
double hindsight_max(std::span<const FiniteDist> dists);
double hindsight_max(std::span<const Dist> dists);

/// Expected reward of the fixed-threshold policy that accepts the variable
/// at position j iff its realization is >= accept_thresholds[j], with reward
/// 0 when everything is rejected.
double policy_value(std::span<const FiniteDist> seq,
                    std::span<const double> accept_thresholds);

/// Excess decomposition of the sequence's optimal-stopping value.
ExcessProfile makespan_value(std::span<const Dist> seq);
ExcessProfile makespan_value(std::span<const FiniteDist> seq);

}  // namespace ordstop
