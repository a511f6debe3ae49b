#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordstop/two_point.hpp"

namespace ordstop {

/// Constructive witness that one of two explicit orderings earns at least
/// 0.8 of the hindsight maximum on a two-point instance.
///
/// i_star is the variable with the largest left endpoint a*. U holds the
/// other variables with right endpoint >= b*, W those with right endpoint in
/// [a*, b*); variables below a* never matter and are dropped. b_w is the
/// expected maximum over W conditioned on at least one W variable realizing
/// its right endpoint (probability p_w), computed by exact enumeration of
/// W's outcomes. The bounds t1, t2, t3 lower-bound the values of the probe
/// orders sigma1 = (U, W, i*) and sigma2 = (U, i*, W), and max_value is the
/// hindsight maximum restricted to W u {i*}.
struct ProphetCertificate {
  std::size_t i_star = 0;
  std::vector<std::size_t> u_indices;
  std::vector<std::size_t> w_indices;
  double b_w = 0.0;
  double p_w = 0.0;
  double mu_star = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double max_value = 0.0;
  double sigma1_value = 0.0;
  double sigma2_value = 0.0;
  /// W empty: t1/t2 carry no information and the certificate rests on t3.
  bool w_empty = false;
};

struct ProphetReport {
  double e_max = 0.0;
  double best_order_value = 0.0;
  double ratio = 1.0;
  std::optional<ProphetCertificate> certificate;
};

/// Hindsight maximum, best-ordering value, their ratio, and the certificate.
ProphetReport prophet_ratio(const TwoPointInstance& inst);

ProphetCertificate build_certificate(const TwoPointInstance& inst);

/// The two-variable family whose best-ordering ratio approaches 1.25 as
/// eps -> 0: X1 on {0.5, 1/(2 eps)} w.p. {1-eps, eps}, X2 on {0,1} w.p.
/// {0.5, 0.5}.
TwoPointInstance tightness_instance(double eps);

}  // namespace ordstop
