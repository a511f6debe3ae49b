#include "ordstop/two_point.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ordstop {

namespace {

// Indices sorted by right endpoint descending, ties by index ascending.
std::vector<std::size_t> by_descending_right_endpoint(
    const std::vector<TwoPointVar>& vars) {
  std::vector<std::size_t> idx(vars.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return vars[a].b > vars[b].b;
  });
  return idx;
}

}  // namespace

TwoPointInstance::TwoPointInstance(std::vector<TwoPointVar> vars)
    : vars_(std::move(vars)) {
  for (const TwoPointVar& v : vars_) {
    if (!std::isfinite(v.a) || !std::isfinite(v.b) || v.a < 0.0 || v.b < v.a) {
      throw ArgumentError("two-point variable needs 0 <= a <= b");
    }
    if (!std::isfinite(v.p) || v.p < 0.0 || v.p > 1.0) {
      throw ArgumentError("two-point probability must lie in [0,1]");
    }
  }
}

std::vector<Dist> TwoPointInstance::dists() const {
  std::vector<Dist> out;
  out.reserve(vars_.size());
  for (const TwoPointVar& v : vars_) {
    out.emplace_back(two_point(v.a, v.b, v.p));
  }
  return out;
}

OrderingResult solve_zero_left(const TwoPointInstance& inst) {
  if (inst.size() == 0) throw ArgumentError("instance must contain a variable");
  for (const TwoPointVar& v : inst.vars()) {
    if (v.a != 0.0) {
      throw ArgumentError("zero-left solver needs every left endpoint at 0");
    }
  }
  std::vector<Dist> dists = inst.dists();
  std::vector<std::size_t> order = by_descending_right_endpoint(inst.vars());
  return evaluate_order(dists, order);
}

OrderingResult solve(const TwoPointInstance& inst) {
  const std::size_t n = inst.size();
  if (n == 0) throw ArgumentError("instance must contain a variable");
  std::vector<Dist> dists = inst.dists();
  std::vector<std::size_t> sorted = by_descending_right_endpoint(inst.vars());

  // One candidate per choice of last variable; the rest keep the descending
  // right-endpoint order. The first candidate attaining the best value wins.
  OrderingResult best;
  bool have_best = false;
  std::vector<std::size_t> candidate(n);
  for (std::size_t last = 0; last < n; ++last) {
    std::size_t out = 0;
    for (std::size_t i : sorted) {
      if (i != last) candidate[out++] = i;
    }
    candidate[out] = last;
    OrderingResult res = evaluate_order(dists, candidate);
    if (!have_best || res.value > best.value) {
      best = std::move(res);
      have_best = true;
    }
  }
  return best;
}

bool check_lep(const OrderingResult& res, const TwoPointInstance& inst) {
  if (res.order.size() != inst.size()) {
    throw ArgumentError("result does not match the instance");
  }
  for (std::size_t t = 0; t + 1 < res.order.size(); ++t) {
    if (inst.vars()[res.order[t]].a > res.thresholds[t + 1] + 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace ordstop
