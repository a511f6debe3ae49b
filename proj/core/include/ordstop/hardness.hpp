#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordstop/dist.hpp"

namespace ordstop {

/// Subset-product reduction instance: integers a_1..a_n (each > 1), target
/// B, and one three-point variable per integer with support
/// {0, (B^2 - a_i)/(B^2 + 1), 1} and masses {1/a_i^2, (a_i-1)/a_i^2,
/// (a_i-1)/a_i}. Every variable has the same conditional mean
/// E[X|X>0] = B^2/(B^2+1).
struct HardnessInstance {
  std::vector<std::int64_t> integers;
  std::int64_t target = 0;
  std::vector<FiniteDist> dists;
};

/// Builds the reduction instance. Requires a_i >= 2, B >= 1 and B^2 > max a_i
/// so every middle point is positive.
HardnessInstance generate(std::vector<std::int64_t> integers,
                          std::int64_t target);

/// Closed-form partition value as a function of the product gamma_T of T's
/// integers: with gamma the product of all integers,
/// f(g) = 1 - g/gamma + (g/gamma) (1 - 1/g^2) B^2/(B^2+1).
/// Strictly concave with maximizer g = B.
double value_function(const HardnessInstance& inst, double gamma_t);

struct SubsetProductDecision {
  bool answer = false;      // does some subset multiply exactly to B?
  double gamma_t_opt = 0.0; // product of T's integers at the optimal partition
  std::vector<std::size_t> witness;  // the optimal partition's T
};

/// Decides subset product by solving the partitioning problem exhaustively
/// and comparing the optimal T's exact integer product to B. Guarded to
/// n <= 20.
SubsetProductDecision decide_subset_product(const HardnessInstance& inst);

}  // namespace ordstop
