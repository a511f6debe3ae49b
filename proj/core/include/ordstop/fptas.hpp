#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ordstop/dist.hpp"
#include "ordstop/stopping.hpp"

namespace ordstop {

/// Partial ordered partition maintained by the approximation scheme.
///
/// Variables are prepended as the scheme walks the input in ascending order
/// of E[X|X>0], so both stored sequences are weakly decreasing in that key.
/// v_s and v_t cache the sequence values of the two blocks; prepending X to
/// a block with cached value v updates the cache to emax(X, v).
struct OrderedPartition {
  std::vector<std::size_t> s_indices;
  std::vector<std::size_t> t_indices;
  double v_s = 0.0;
  double v_t = 0.0;
};

/// Parameters of one approximation run over n variables.
struct FptasConfig {
  FptasConfig(double epsilon_in, double max_param_in, std::size_t n_in);

  double epsilon;    // accuracy target, in (0,1)
  double max_param;  // scale parameter; the default path uses E[max]/2
  std::size_t n;     // variables in this run
  double rho;        // grid ratio 1 - epsilon/(2n)
};

struct FptasResult {
  std::vector<std::size_t> ordering;
  /// Value of `ordering` on the original distributions (sequence_value).
  double value = 0.0;
  /// Kept-list size after each trim round (winning run only for the
  /// general-left solver).
  std::vector<std::size_t> partitions_kept;
  /// The winning partition; for the general-left solver this covers the
  /// variables preceding the pinned last one.
  OrderedPartition best;
};

/// Per-run record of the kept lists, for diagnostics and tests.
struct FptasRunTrace {
  std::size_t run_n = 0;
  double epsilon = 0.0;
  std::vector<std::vector<OrderedPartition>> kept;
};

struct FptasTrace {
  std::vector<FptasRunTrace> runs;
};

/// One trimming round over a multiplicative value grid.
///
/// With max = max V(T) over the list, the grid keeps buckets
/// B_j = (rho^j max, rho^{j-1} max] for j = 1..J where J is the largest j
/// with rho^j max >= (epsilon/2n) max_param, plus the bucket of partitions
/// with empty T. One partition survives per non-empty bucket: the one with
/// the largest V(S) (ties by lexicographically smallest s_indices).
/// Partitions with non-empty T at or below the grid floor are dropped.
std::vector<OrderedPartition> trim(std::vector<OrderedPartition> partitions,
                                   const FptasConfig& cfg);

/// (1-eps)-approximate optimal ordering for {0,m,1}-shaped variables by
/// partition growth plus trimming. The scale parameter is E[max]/2.
FptasResult solve_common_endpoints(std::span<const FiniteDist> dists,
                                   double epsilon,
                                   FptasTrace* trace = nullptr);

/// Variant with an explicit scale parameter, exposed for testing the
/// kept-list bound; the guarantee needs max_param in [OPT/2, OPT].
FptasResult solve_common_endpoints(std::span<const FiniteDist> dists,
                                   double epsilon, double max_param,
                                   FptasTrace* trace = nullptr);

/// (1-eps)-approximate optimal ordering for {a,m,1}-shaped variables.
///
/// Runs the common-endpoint scheme n times: iteration i pins X_i last,
/// replaces every other variable's left endpoint by 0, orders the rest, and
/// scores the assembled order on the original distributions. Returns the
/// best of the n candidates (ties by smallest pinned index).
FptasResult solve_general_left(std::span<const FiniteDist> dists,
                               double epsilon, FptasTrace* trace = nullptr);

}  // namespace ordstop
