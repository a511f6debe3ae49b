#include "ordstop/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ordstop/oracle.hpp"

namespace ordstop {

namespace {

constexpr std::size_t kMaxDecisionVars = 20;

// Exact integer product with saturation well above any meaningful target.
std::int64_t saturating_product(const std::vector<std::int64_t>& integers,
                                const std::vector<std::size_t>& subset) {
  constexpr std::int64_t kCap = std::numeric_limits<std::int64_t>::max() / 2;
  std::int64_t acc = 1;
  for (std::size_t i : subset) {
    if (acc > kCap / integers[i]) return kCap;
    acc *= integers[i];
  }
  return acc;
}

}  // namespace

HardnessInstance generate(std::vector<std::int64_t> integers,
                          std::int64_t target) {
  if (integers.empty()) throw ArgumentError("need at least one integer");
  if (target < 1) throw ArgumentError("target must be a positive integer");
  if (target > 3037000499LL) throw ArgumentError("target too large");
  for (std::int64_t a : integers) {
    if (a < 2) throw ArgumentError("every integer must be at least 2");
    if (target * target <= a) {
      throw ArgumentError("target^2 must exceed every integer");
    }
  }

  HardnessInstance inst;
  inst.integers = std::move(integers);
  inst.target = target;
  inst.dists.reserve(inst.integers.size());
  const double b2 = static_cast<double>(target) * static_cast<double>(target);
  for (std::int64_t a : inst.integers) {
    // Probabilities are exact integer ratios, converted to float once.
    const double ad = static_cast<double>(a);
    const double m = (b2 - ad) / (b2 + 1.0);
    const double p = (ad - 1.0) / (ad * ad);
    const double q = (ad - 1.0) / ad;
    inst.dists.push_back(three_point(0.0, m, 1.0, p, q));
  }
  return inst;
}

double value_function(const HardnessInstance& inst, double gamma_t) {
  if (!(gamma_t >= 1.0)) throw ArgumentError("gamma_t must be at least 1");
  double gamma = 1.0;
  for (std::int64_t a : inst.integers) gamma *= static_cast<double>(a);
  const double b2 = static_cast<double>(inst.target) *
                    static_cast<double>(inst.target);
  const double share = gamma_t / gamma;
  return 1.0 - share +
         share * (1.0 - 1.0 / (gamma_t * gamma_t)) * (b2 / (b2 + 1.0));
}

SubsetProductDecision decide_subset_product(const HardnessInstance& inst) {
  if (inst.dists.size() > kMaxDecisionVars) {
    throw SizeLimitError("subset-product decision limited to 20 variables");
  }
  PartitionResult best = brute_force_partition(inst.dists);

  SubsetProductDecision decision;
  decision.witness = best.t_indices;
  std::sort(decision.witness.begin(), decision.witness.end());
  const std::int64_t product =
      saturating_product(inst.integers, decision.witness);
  decision.gamma_t_opt = static_cast<double>(product);
  decision.answer = product == inst.target;
  return decision;
}

}  // namespace ordstop
