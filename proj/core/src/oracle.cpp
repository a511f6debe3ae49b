#include "ordstop/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ordstop {

namespace {

constexpr std::size_t kMaxPermutationVars = 10;
constexpr std::size_t kMaxPartitionVars = 20;

template <typename D>
double order_value(std::span<const D> dists,
                   const std::vector<std::size_t>& perm) {
  double v = 0.0;
  for (std::size_t j = perm.size(); j-- > 0;) {
    v = emax(dists[perm[j]], v);
  }
  return v;
}

template <typename D>
OracleResult brute_force_order_impl(std::span<const D> dists, double tie_tol) {
  const std::size_t n = dists.size();
  if (n == 0) throw ArgumentError("instance must contain a variable");
  if (n > kMaxPermutationVars) {
    throw SizeLimitError("permutation search limited to 10 variables");
  }
  if (tie_tol < 0.0) throw ArgumentError("tie tolerance must be non-negative");

  OracleResult res;
  std::vector<std::size_t> perm(n);

  // Two passes keep the search trivially auditable: find the maximum, then
  // collect every permutation within the tie tolerance, in lexicographic
  // order.
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  res.best_value = -std::numeric_limits<double>::infinity();
  do {
    res.best_value = std::max(res.best_value, order_value(dists, perm));
    ++res.evaluated_count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (order_value(dists, perm) >= res.best_value - tie_tol) {
      res.best_orderings.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

void require_partition_shape(std::span<const FiniteDist> dists) {
  for (const FiniteDist& d : dists) {
    if (!has_zero_mid_one_support(d)) {
      throw ShapeError("partition search needs {0,m,1}-shaped supports");
    }
  }
}

double smallest_positive_atom(const FiniteDist& d) {
  for (double a : d.atoms()) {
    if (a > 0.0) return a;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

OracleResult brute_force_order(std::span<const Dist> dists, double tie_tol) {
  return brute_force_order_impl(dists, tie_tol);
}

OracleResult brute_force_order(std::span<const FiniteDist> dists,
                               double tie_tol) {
  return brute_force_order_impl(dists, tie_tol);
}

double ordered_partition_value(std::span<const FiniteDist> dists,
                               std::span<const std::size_t> s_indices,
                               std::span<const std::size_t> t_indices) {
  std::vector<FiniteDist> seq;
  std::vector<double> thresholds;
  seq.reserve(s_indices.size() + t_indices.size());
  thresholds.reserve(s_indices.size() + t_indices.size());
  // An S variable is taken only at the top value; a T variable at any
  // positive realization.
  for (std::size_t i : s_indices) {
    seq.push_back(dists[i]);
    thresholds.push_back(1.0);
  }
  for (std::size_t i : t_indices) {
    seq.push_back(dists[i]);
    thresholds.push_back(smallest_positive_atom(dists[i]));
  }
  return policy_value(seq, thresholds);
}

PartitionResult brute_force_partition(std::span<const FiniteDist> dists) {
  const std::size_t n = dists.size();
  if (n == 0) throw ArgumentError("instance must contain a variable");
  if (n > kMaxPartitionVars) {
    throw SizeLimitError("partition search limited to 20 variables");
  }
  require_partition_shape(dists);

  std::vector<double> cond_mean(n);
  for (std::size_t i = 0; i < n; ++i) {
    cond_mean[i] = conditional_mean_positive_or_zero(dists[i]);
  }

  PartitionResult best;
  best.value = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> s;
  std::vector<std::size_t> t;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    s.clear();
    t.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        t.push_back(i);
      } else {
        s.push_back(i);
      }
    }
    std::stable_sort(t.begin(), t.end(), [&](std::size_t a, std::size_t b) {
      return cond_mean[a] > cond_mean[b];
    });
    double v = ordered_partition_value(dists, s, t);
    if (v > best.value) {
      best.value = v;
      best.s_indices = s;
      best.t_indices = t;
    }
  }
  return best;
}

}  // namespace ordstop
