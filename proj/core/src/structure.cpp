#include "ordstop/structure.hpp"

#include <algorithm>
#include <numeric>

namespace ordstop {

StructureReport classify_st(const OrderingResult& res,
                            std::span<const FiniteDist> dists) {
  if (res.order.size() != dists.size()) {
    throw ArgumentError("result does not match the instance");
  }
  for (const FiniteDist& d : dists) {
    if (!has_zero_mid_one_support(d)) {
      throw ShapeError("classification needs {0,m,1}-shaped supports");
    }
  }

  const std::size_t n = res.order.size();
  StructureReport report;
  std::vector<bool> in_s(n, false);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t var = res.order[t];
    // Accepted only at the top value iff the continuation beats the middle
    // point; the final position always takes any positive realization.
    const bool selective =
        t + 1 < n && res.thresholds[t + 1] > middle_point(dists[var]) + 1e-12;
    in_s[t] = selective;
    if (selective) {
      report.s_indices.push_back(var);
    } else {
      report.t_indices.push_back(var);
    }
  }

  bool seen_t = false;
  for (std::size_t t = 0; t < n; ++t) {
    if (!in_s[t]) {
      seen_t = true;
    } else if (seen_t) {
      report.violations.push_back(
          {t, "top-only position after the take-positive block begins"});
    }
  }

  double prev_mean = 0.0;
  bool have_prev = false;
  for (std::size_t t = 0; t < n; ++t) {
    if (in_s[t]) continue;
    const double cm = conditional_mean_positive_or_zero(dists[res.order[t]]);
    if (have_prev && cm > prev_mean + 1e-12) {
      report.violations.push_back(
          {t, "take-positive block not in weakly decreasing conditional-mean "
              "order"});
    }
    prev_mean = cm;
    have_prev = true;
  }

  report.satisfies_claim = report.violations.empty();
  return report;
}

OrderingResult solve_nested_uniform(std::span<const UniformDist> dists) {
  if (dists.empty()) throw ArgumentError("instance must contain a variable");

  // Sorting by (width desc, lo asc) is permutation-independent, so the
  // nestedness verdict and the returned support sequence are too.
  std::vector<std::size_t> order(dists.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const double wa = dists[a].hi - dists[a].lo;
                     const double wb = dists[b].hi - dists[b].lo;
                     if (wa != wb) return wa > wb;
                     return dists[a].lo < dists[b].lo;
                   });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const UniformDist& outer = dists[order[k]];
    const UniformDist& inner = dists[order[k + 1]];
    if (inner.lo < outer.lo || inner.hi > outer.hi) {
      throw ShapeError("supports do not form a nested chain");
    }
  }

  std::vector<Dist> seq;
  seq.reserve(dists.size());
  for (const UniformDist& d : dists) seq.emplace_back(d);
  return evaluate_order(seq, order);
}

}  // namespace ordstop
