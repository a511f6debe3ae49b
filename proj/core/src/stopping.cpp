#include "ordstop/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ordstop {

namespace {

void require_nonnegative_floor(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw ArgumentError("floor value must be finite and non-negative");
  }
}

template <typename D>
OrderingResult sequence_value_impl(std::span<const D> seq) {
  OrderingResult res;
  const std::size_t n = seq.size();
  if (n == 0) return res;
  res.order.resize(n);
  res.thresholds.assign(n + 1, 0.0);
  for (std::size_t j = n; j-- > 0;) {
    res.order[j] = j;
    res.thresholds[j] = emax(seq[j], res.thresholds[j + 1]);
  }
  res.value = res.thresholds.front();
  return res;
}

void require_permutation(std::size_t n, std::span<const std::size_t> order) {
  if (order.size() != n) {
    throw ArgumentError("order must be a permutation of the instance indices");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) {
      throw ArgumentError(
          "order must be a permutation of the instance indices");
    }
    seen[i] = true;
  }
}

template <typename D>
OrderingResult evaluate_order_impl(std::span<const D> dists,
                                   std::span<const std::size_t> order) {
  require_permutation(dists.size(), order);
  const std::size_t n = dists.size();
  OrderingResult res;
  if (n == 0) return res;
  res.order.assign(order.begin(), order.end());
  res.thresholds.assign(n + 1, 0.0);
  for (std::size_t j = n; j-- > 0;) {
    res.thresholds[j] = emax(dists[order[j]], res.thresholds[j + 1]);
  }
  res.value = res.thresholds.front();
  return res;
}

template <typename D>
ExcessProfile makespan_value_impl(std::span<const D> seq) {
  ExcessProfile profile;
  const std::size_t n = seq.size();
  if (n == 0) return profile;
  OrderingResult res = sequence_value_impl(seq);
  profile.excesses.resize(n);
  profile.cutoffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    profile.cutoffs[i] = res.thresholds[i + 1];
    profile.excesses[i] = res.thresholds[i] - res.thresholds[i + 1];
  }
  for (double e : profile.excesses) profile.total += e;
  return profile;
}

}  // namespace

double emax(const FiniteDist& d, double c) {
  require_nonnegative_floor(c);
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d.masses()[i] * std::max(d.atoms()[i], c);
  }
  return acc;
}

double emax(const UniformDist& d, double c) {
  require_nonnegative_floor(c);
  if (c >= d.hi) return c;
  if (c <= d.lo) return mean(d);
  const double width = d.hi - d.lo;
  return c * (c - d.lo) / width + 0.5 * (d.hi + c) * (d.hi - c) / width;
}

double emax(const Dist& d, double c) {
  return std::visit([c](const auto& v) { return emax(v, c); }, d);
}

double excess(const Dist& d, double c) { return emax(d, c) - c; }

OrderingResult sequence_value(std::span<const Dist> seq) {
  return sequence_value_impl(seq);
}

OrderingResult sequence_value(std::span<const FiniteDist> seq) {
  return sequence_value_impl(seq);
}

OrderingResult evaluate_order(std::span<const Dist> dists,
                              std::span<const std::size_t> order) {
  return evaluate_order_impl(dists, order);
}

OrderingResult evaluate_order(std::span<const FiniteDist> dists,
                              std::span<const std::size_t> order) {
  return evaluate_order_impl(dists, order);
}

double hindsight_max(std::span<const FiniteDist> dists) {
  if (dists.empty()) return 0.0;
  std::vector<double> values;
  for (const FiniteDist& d : dists) {
    values.insert(values.end(), d.atoms().begin(), d.atoms().end());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  double acc = 0.0;
  for (double v : values) {
    double p_le = 1.0;
    double p_lt = 1.0;
    for (const FiniteDist& d : dists) {
      p_le *= d.cdf(v);
      p_lt *= d.cdf_strict(v);
    }
    acc += v * (p_le - p_lt);
  }
  return acc;
}

double hindsight_max(std::span<const Dist> dists) {
  std::vector<FiniteDist> finite;
  finite.reserve(dists.size());
  for (const Dist& d : dists) {
    if (!std::holds_alternative<FiniteDist>(d)) {
      throw ShapeError("hindsight maximum supports finite distributions only");
    }
    finite.push_back(std::get<FiniteDist>(d));
  }
  return hindsight_max(std::span<const FiniteDist>(finite));
}

double policy_value(std::span<const FiniteDist> seq,
                    std::span<const double> accept_thresholds) {
  if (seq.size() != accept_thresholds.size()) {
    throw ArgumentError("one acceptance threshold per position required");
  }
  double value = 0.0;
  for (std::size_t j = seq.size(); j-- > 0;) {
    const FiniteDist& d = seq[j];
    const double theta = accept_thresholds[j];
    double accepted = 0.0;
    double stay = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d.atoms()[i] >= theta) {
        accepted += d.masses()[i] * d.atoms()[i];
      } else {
        stay += d.masses()[i];
      }
    }
    value = accepted + stay * value;
  }
  return value;
}

ExcessProfile makespan_value(std::span<const Dist> seq) {
  return makespan_value_impl(seq);
}

ExcessProfile makespan_value(std::span<const FiniteDist> seq) {
  return makespan_value_impl(seq);
}

}  // namespace ordstop
