#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordstop/dist.hpp"
#include "ordstop/stopping.hpp"

namespace ordstop {

struct StructureViolation {
  std::size_t position = 0;
  std::string reason;
};

/// S/T decomposition of an evaluated ordering of {0,m,1}-shaped variables.
///
/// A position belongs to S when its continuation value strictly exceeds the
/// variable's middle point (beyond 1e-12), i.e. the variable is accepted
/// only at the top value; the last position always lands in T.
/// satisfies_claim holds when all of S precedes all of T and T is in weakly
/// decreasing order of E[X|X>0].
struct StructureReport {
  std::vector<std::size_t> s_indices;
  std::vector<std::size_t> t_indices;
  bool satisfies_claim = false;
  std::vector<StructureViolation> violations;
};

StructureReport classify_st(const OrderingResult& res,
                            std::span<const FiniteDist> dists);

/// Optimal ordering of uniform variables whose supports form a nested chain:
/// widest support first. Throws ShapeError when the supports cannot be
/// arranged into a chain.
OrderingResult solve_nested_uniform(std::span<const UniformDist> dists);

}  // namespace ordstop
