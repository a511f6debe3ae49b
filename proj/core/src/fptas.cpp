#include "ordstop/fptas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace ordstop {

namespace {

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw ArgumentError("epsilon must lie in (0,1)");
  }
}

std::vector<std::size_t> ascending_cond_mean_order(
    std::span<const FiniteDist> dists) {
  std::vector<std::size_t> order(dists.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> key(dists.size());
  for (std::size_t i = 0; i < dists.size(); ++i) {
    key[i] = conditional_mean_positive_or_zero(dists[i]);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return order;
}

std::vector<std::size_t> concatenated_order(const OrderedPartition& p) {
  std::vector<std::size_t> order = p.s_indices;
  order.insert(order.end(), p.t_indices.begin(), p.t_indices.end());
  return order;
}

// Zero out the left endpoint: the smallest atom moves to 0, masses unchanged.
FiniteDist with_zero_left_endpoint(const FiniteDist& d) {
  if (d.min_atom() == 0.0) return d;
  std::vector<double> atoms = d.atoms();
  atoms.front() = 0.0;
  return FiniteDist(std::move(atoms), d.masses());
}

FptasResult trivial_result(std::size_t n) {
  FptasResult res;
  res.ordering.resize(n);
  std::iota(res.ordering.begin(), res.ordering.end(), std::size_t{0});
  res.best.s_indices = res.ordering;
  return res;
}

}  // namespace

FptasConfig::FptasConfig(double epsilon_in, double max_param_in,
                         std::size_t n_in)
    : epsilon(epsilon_in), max_param(max_param_in), n(n_in) {
  require_epsilon(epsilon);
  if (!(max_param > 0.0) || !std::isfinite(max_param)) {
    throw ArgumentError("scale parameter must be positive");
  }
  if (n == 0) throw ArgumentError("run needs at least one variable");
  rho = 1.0 - epsilon / (2.0 * static_cast<double>(n));
}

std::vector<OrderedPartition> trim(std::vector<OrderedPartition> partitions,
                                   const FptasConfig& cfg) {
  if (partitions.empty()) return partitions;

  double max_vt = 0.0;
  for (const OrderedPartition& p : partitions) {
    max_vt = std::max(max_vt, p.v_t);
  }
  const double grid_floor =
      cfg.epsilon / (2.0 * static_cast<double>(cfg.n)) * cfg.max_param;

  // J is the largest grid index with rho^J * max_vt still above the floor;
  // J = -1 leaves no bucket for partitions with non-empty T.
  long j_top = -1;
  if (max_vt > 0.0 && max_vt >= grid_floor) {
    j_top = static_cast<long>(
        std::floor(std::log(grid_floor / max_vt) / std::log(cfg.rho)));
    while (std::pow(cfg.rho, static_cast<double>(j_top + 1)) * max_vt >=
           grid_floor) {
      ++j_top;
    }
    while (j_top >= 0 &&
           std::pow(cfg.rho, static_cast<double>(j_top)) * max_vt <
               grid_floor) {
      --j_top;
    }
  }

  std::vector<double> cutoffs;  // cutoffs[j] = rho^j * max_vt, descending
  cutoffs.reserve(static_cast<std::size_t>(j_top + 1));
  for (long j = 0; j <= j_top; ++j) {
    cutoffs.push_back(std::pow(cfg.rho, static_cast<double>(j)) * max_vt);
  }

  // buckets[0] holds the empty-T partitions, buckets[j] the grid cell
  // (cutoffs[j], cutoffs[j-1]].
  std::vector<std::optional<OrderedPartition>> buckets(
      static_cast<std::size_t>(j_top + 2));
  auto offer = [&](std::size_t j, OrderedPartition&& p) {
    std::optional<OrderedPartition>& slot = buckets[j];
    if (!slot || p.v_s > slot->v_s ||
        (p.v_s == slot->v_s &&
         std::lexicographical_compare(p.s_indices.begin(), p.s_indices.end(),
                                      slot->s_indices.begin(),
                                      slot->s_indices.end()))) {
      slot = std::move(p);
    }
  };

  for (OrderedPartition& p : partitions) {
    if (p.t_indices.empty()) {
      offer(0, std::move(p));
      continue;
    }
    if (j_top < 0 || !(p.v_t > cutoffs[static_cast<std::size_t>(j_top)])) {
      continue;  // below the grid: discarded
    }
    // Smallest j >= 1 with v_t > cutoffs[j]; cutoffs are strictly decreasing.
    std::size_t lo = 1;
    std::size_t hi = static_cast<std::size_t>(j_top);
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (p.v_t > cutoffs[mid]) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    offer(lo, std::move(p));
  }

  std::vector<OrderedPartition> kept;
  for (std::optional<OrderedPartition>& slot : buckets) {
    if (slot) kept.push_back(std::move(*slot));
  }
  return kept;
}

FptasResult solve_common_endpoints(std::span<const FiniteDist> dists,
                                   double epsilon, double max_param,
                                   FptasTrace* trace) {
  require_epsilon(epsilon);
  const std::size_t n = dists.size();
  if (n == 0) throw ArgumentError("instance must contain a variable");
  for (const FiniteDist& d : dists) {
    if (!has_zero_mid_one_support(d)) {
      throw ShapeError("solver needs {0,m,1}-shaped supports");
    }
  }

  const FptasConfig cfg(epsilon, max_param, n);
  const std::vector<std::size_t> process = ascending_cond_mean_order(dists);

  FptasRunTrace* run = nullptr;
  if (trace) {
    trace->runs.push_back({n, epsilon, {}});
    run = &trace->runs.back();
  }

  FptasResult res;
  std::vector<OrderedPartition> kept{OrderedPartition{}};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t idx = process[k];
    const FiniteDist& x = dists[idx];
    std::vector<OrderedPartition> grown;
    grown.reserve(2 * kept.size());
    for (const OrderedPartition& p : kept) {
      OrderedPartition to_s = p;
      to_s.s_indices.insert(to_s.s_indices.begin(), idx);
      to_s.v_s = emax(x, p.v_s);
      grown.push_back(std::move(to_s));

      OrderedPartition to_t = p;
      to_t.t_indices.insert(to_t.t_indices.begin(), idx);
      to_t.v_t = emax(x, p.v_t);
      grown.push_back(std::move(to_t));
    }
    kept = trim(std::move(grown), cfg);
    res.partitions_kept.push_back(kept.size());
    if (run) run->kept.push_back(kept);
  }

  // Best full partition by the value of its concrete ordering. On ties a
  // partition with non-empty T is preferred, then list order decides.
  bool have_best = false;
  OrderingResult best_eval;
  for (const OrderedPartition& p : kept) {
    std::vector<std::size_t> order = concatenated_order(p);
    OrderingResult eval = evaluate_order(dists, order);
    bool better =
        !have_best || eval.value > best_eval.value ||
        (eval.value == best_eval.value && res.best.t_indices.empty() &&
         !p.t_indices.empty());
    if (better) {
      best_eval = std::move(eval);
      res.best = p;
      have_best = true;
    }
  }
  res.ordering = best_eval.order;
  res.value = best_eval.value;
  return res;
}

FptasResult solve_common_endpoints(std::span<const FiniteDist> dists,
                                   double epsilon, FptasTrace* trace) {
  require_epsilon(epsilon);
  if (dists.empty()) throw ArgumentError("instance must contain a variable");
  const double e_max = hindsight_max(dists);
  if (e_max <= 0.0) return trivial_result(dists.size());
  return solve_common_endpoints(dists, epsilon, 0.5 * e_max, trace);
}

FptasResult solve_general_left(std::span<const FiniteDist> dists,
                               double epsilon, FptasTrace* trace) {
  require_epsilon(epsilon);
  const std::size_t n = dists.size();
  if (n == 0) throw ArgumentError("instance must contain a variable");
  for (const FiniteDist& d : dists) {
    if (!has_left_mid_one_support(d)) {
      throw ShapeError("solver needs {a,m,1}-shaped supports");
    }
  }

  std::vector<Dist> originals(dists.begin(), dists.end());

  FptasResult best;
  bool have_best = false;
  for (std::size_t pinned = 0; pinned < n; ++pinned) {
    std::vector<FiniteDist> primed;
    std::vector<std::size_t> primed_to_original;
    primed.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pinned) continue;
      primed.push_back(with_zero_left_endpoint(dists[j]));
      primed_to_original.push_back(j);
    }

    FptasResult inner;
    std::vector<std::size_t> candidate;
    if (!primed.empty()) {
      inner = solve_common_endpoints(std::span<const FiniteDist>(primed),
                                     epsilon, trace);
      candidate.reserve(n);
      for (std::size_t pos : inner.ordering) {
        candidate.push_back(primed_to_original[pos]);
      }
      for (std::size_t& i : inner.best.s_indices) i = primed_to_original[i];
      for (std::size_t& i : inner.best.t_indices) i = primed_to_original[i];
    }
    candidate.push_back(pinned);

    OrderingResult eval = evaluate_order(originals, candidate);
    if (!have_best || eval.value > best.value) {
      best.ordering = eval.order;
      best.value = eval.value;
      best.partitions_kept = inner.partitions_kept;
      best.best = inner.best;
      have_best = true;
    }
  }
  return best;
}

}  // namespace ordstop
