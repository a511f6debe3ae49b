#include "ordstop/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ordstop {

FiniteDist::FiniteDist(std::vector<double> atoms, std::vector<double> masses) {
  if (atoms.size() != masses.size()) {
    throw ArgumentError("atoms and masses must have the same length");
  }
  if (atoms.empty()) {
    throw ArgumentError("distribution needs at least one atom");
  }
  for (double a : atoms) {
    if (!std::isfinite(a) || a < 0.0) {
      throw ArgumentError("atoms must be finite and non-negative");
    }
  }
  double total = 0.0;
  for (double m : masses) {
    if (!std::isfinite(m) || m < 0.0) {
      throw ArgumentError("masses must be finite and non-negative");
    }
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw ArgumentError("masses must sum to 1");
  }

  std::vector<std::size_t> idx(atoms.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return atoms[i] < atoms[j]; });

  // Merge coincident atoms, then drop negligible mass.
  for (std::size_t i : idx) {
    if (!atoms_.empty() && atoms_.back() == atoms[i]) {
      masses_.back() += masses[i];
    } else {
      atoms_.push_back(atoms[i]);
      masses_.push_back(masses[i]);
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (masses_[i] >= kMassFloor) {
      atoms_[out] = atoms_[i];
      masses_[out] = masses_[i];
      ++out;
    }
  }
  atoms_.resize(out);
  masses_.resize(out);
  if (atoms_.empty()) {
    throw ArgumentError("no support left after dropping negligible atoms");
  }

  double kept = std::accumulate(masses_.begin(), masses_.end(), 0.0);
  for (double& m : masses_) m /= kept;
}

double FiniteDist::cdf(double x) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < atoms_.size() && atoms_[i] <= x; ++i) {
    acc += masses_[i];
  }
  return acc;
}

double FiniteDist::cdf_strict(double x) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < atoms_.size() && atoms_[i] < x; ++i) {
    acc += masses_[i];
  }
  return acc;
}

UniformDist::UniformDist(double lo_in, double hi_in) : lo(lo_in), hi(hi_in) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi <= lo) {
    throw ArgumentError("uniform support needs 0 <= lo < hi");
  }
}

FiniteDist two_point(double a, double b, double p) {
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < a) {
    throw ArgumentError("two-point support needs 0 <= a <= b");
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw ArgumentError("two-point probability must lie in [0,1]");
  }
  return FiniteDist({a, b}, {1.0 - p, p});
}

FiniteDist three_point(double a, double m, double b, double p, double q) {
  if (!std::isfinite(a) || !std::isfinite(m) || !std::isfinite(b) ||
      a < 0.0 || m < a || b < m) {
    throw ArgumentError("three-point support needs 0 <= a <= m <= b");
  }
  if (!std::isfinite(p) || !std::isfinite(q) || p < 0.0 || q < 0.0) {
    throw ArgumentError("three-point probabilities must be non-negative");
  }
  double r = 1.0 - p - q;
  if (r < 0.0) {
    if (r < -kMassTolerance) {
      throw ArgumentError("three-point probabilities must satisfy p + q <= 1");
    }
    r = 0.0;
  }
  return FiniteDist({a, m, b}, {r, p, q});
}

double mean(const FiniteDist& d) {
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d.atoms()[i] * d.masses()[i];
  }
  return acc;
}

double mean(const UniformDist& d) { return 0.5 * (d.lo + d.hi); }

double mean(const Dist& d) {
  return std::visit([](const auto& v) { return mean(v); }, d);
}

double positive_mass(const FiniteDist& d) {
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.atoms()[i] > 0.0) acc += d.masses()[i];
  }
  return acc;
}

double conditional_mean_positive(const FiniteDist& d) {
  double mass = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.atoms()[i] > 0.0) {
      mass += d.masses()[i];
      weighted += d.atoms()[i] * d.masses()[i];
    }
  }
  if (mass <= 0.0) {
    throw ArgumentError("conditional mean undefined: no positive support");
  }
  return weighted / mass;
}

double conditional_mean_positive_or_zero(const FiniteDist& d) {
  return positive_mass(d) > 0.0 ? conditional_mean_positive(d) : 0.0;
}

bool has_zero_mid_one_support(const FiniteDist& d) {
  if (d.size() > 3) return false;
  int interior = 0;
  for (double a : d.atoms()) {
    if (a < 0.0 || a > 1.0) return false;
    if (a > 0.0 && a < 1.0) ++interior;
  }
  return interior <= 1;
}

bool has_left_mid_one_support(const FiniteDist& d) {
  if (d.size() > 3) return false;
  for (double a : d.atoms()) {
    if (a < 0.0 || a > 1.0) return false;
  }
  if (d.size() == 3 && d.max_atom() != 1.0) return false;
  return true;
}

double middle_point(const FiniteDist& d) {
  for (double a : d.atoms()) {
    if (a > 0.0 && a < 1.0) return a;
  }
  return 0.0;
}

}  // namespace ordstop
