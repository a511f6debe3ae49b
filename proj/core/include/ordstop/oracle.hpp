#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordstop/dist.hpp"
#include "ordstop/stopping.hpp"

namespace ordstop {

/// Result of exhaustive search over probe orders.
struct OracleResult {
  double best_value = 0.0;
  /// Every permutation whose value is within the tie tolerance of the best,
  /// in lexicographic order.
  std::vector<std::vector<std::size_t>> best_orderings;
  std::uint64_t evaluated_count = 0;
};

/// Ordered partition (S, T) of variable indices together with its value.
struct PartitionResult {
  std::vector<std::size_t> s_indices;
  std::vector<std::size_t> t_indices;
  double value = 0.0;
};

/// Evaluates all n! probe orders. Guarded to n <= 10.
OracleResult brute_force_order(std::span<const Dist> dists,
                               double tie_tol = 1e-9);
OracleResult brute_force_order(std::span<const FiniteDist> dists,
                               double tie_tol = 1e-9);

/// Value of the threshold policy induced by an ordered partition of
/// {0,m,1}-shaped variables: probe S then T, accept an S variable only at
/// the top value 1 and a T variable at any positive realization.
double ordered_partition_value(std::span<const FiniteDist> dists,
                               std::span<const std::size_t> s_indices,
                               std::span<const std::size_t> t_indices);

/// Evaluates all 2^n - 1 ordered partitions (T non-empty, S in index order,
/// T in weakly decreasing order of E[X|X>0] with ties by index) and returns
/// the best. Guarded to n <= 20; requires {0,m,1}-shaped supports.
PartitionResult brute_force_partition(std::span<const FiniteDist> dists);

}  // namespace ordstop
