#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ordstop/errors.hpp"

namespace ordstop {

/// Allowed deviation of the mass total from 1 at construction time; masses
/// are renormalized afterwards so downstream code sees an exact unit total.
inline constexpr double kMassTolerance = 1e-12;

/// Atoms carrying less mass than this are dropped at construction.
inline constexpr double kMassFloor = 1e-15;

/// Finite-support distribution over non-negative reals.
///
/// The support is canonical after construction: atoms strictly increasing,
/// coincident atoms merged, negligible-mass atoms dropped, masses
/// renormalized. All instances are immutable.
class FiniteDist {
 public:
  FiniteDist(std::vector<double> atoms, std::vector<double> masses);

  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& masses() const { return masses_; }
  std::size_t size() const { return atoms_.size(); }
  double min_atom() const { return atoms_.front(); }
  double max_atom() const { return atoms_.back(); }

  /// P(X <= x) and P(X < x).
  double cdf(double x) const;
  double cdf_strict(double x) const;

 private:
  std::vector<double> atoms_;
  std::vector<double> masses_;
};

/// Continuous uniform distribution on [lo, hi], 0 <= lo < hi.
struct UniformDist {
  double lo;
  double hi;
  UniformDist(double lo_in, double hi_in);
};

using Dist = std::variant<FiniteDist, UniformDist>;

/// Distribution with value b w.p. p and value a w.p. 1-p (a <= b).
/// Coincident endpoints and degenerate probabilities collapse to one atom.
FiniteDist two_point(double a, double b, double p);

/// Distribution with P(a) = 1-p-q, P(m) = p, P(b) = q, a <= m <= b.
FiniteDist three_point(double a, double m, double b, double p, double q);

double mean(const FiniteDist& d);
double mean(const UniformDist& d);
double mean(const Dist& d);

/// P(X > 0).
double positive_mass(const FiniteDist& d);

/// E[X | X > 0]. Throws ArgumentError when P(X > 0) = 0.
double conditional_mean_positive(const FiniteDist& d);

/// Same as conditional_mean_positive but 0 for an all-zero variable; the
/// sort key used when arranging take-positive blocks.
double conditional_mean_positive_or_zero(const FiniteDist& d);

/// True when the support is contained in {0} u {m} u {1} for a single
/// interior point m in (0,1).
bool has_zero_mid_one_support(const FiniteDist& d);

/// True when the support is contained in {a, m, 1}: at most three atoms in
/// [0,1], and a three-atom support must top out at exactly 1.
bool has_left_mid_one_support(const FiniteDist& d);

/// The interior support point of a {0,m,1}-shaped variable, or 0 when the
/// support has no atom strictly inside (0,1).
double middle_point(const FiniteDist& d);

}  // namespace ordstop
