#include "ordstop/prophet.hpp"

#include <algorithm>
#include <cmath>

#include "ordstop/stopping.hpp"

namespace ordstop {

namespace {

constexpr std::size_t kMaxEnumeratedW = 20;

// b descending, ties by index ascending.
void sort_by_right_endpoint(std::vector<std::size_t>& idx,
                            const std::vector<TwoPointVar>& vars) {
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return vars[a].b > vars[b].b;
  });
}

OrderingResult evaluate_two_point_order(const TwoPointInstance& inst,
                                        const std::vector<std::size_t>& order) {
  std::vector<Dist> seq;
  seq.reserve(order.size());
  for (std::size_t i : order) {
    const TwoPointVar& v = inst.vars()[i];
    seq.emplace_back(two_point(v.a, v.b, v.p));
  }
  OrderingResult res = sequence_value(std::span<const Dist>(seq));
  res.order = order;
  return res;
}

}  // namespace

ProphetCertificate build_certificate(const TwoPointInstance& inst) {
  if (inst.size() == 0) throw ArgumentError("instance must contain a variable");
  const std::vector<TwoPointVar>& vars = inst.vars();

  ProphetCertificate cert;
  for (std::size_t i = 1; i < vars.size(); ++i) {
    if (vars[i].a > vars[cert.i_star].a) cert.i_star = i;
  }
  const TwoPointVar star = vars[cert.i_star];

  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i == cert.i_star) continue;
    if (vars[i].b >= star.b) {
      cert.u_indices.push_back(i);
    } else if (vars[i].b >= star.a) {
      cert.w_indices.push_back(i);
    }
    // Variables with right endpoint below a* can never attain the maximum
    // and are left out of the certificate orderings.
  }
  sort_by_right_endpoint(cert.u_indices, vars);
  sort_by_right_endpoint(cert.w_indices, vars);
  cert.w_empty = cert.w_indices.empty();

  // Exact enumeration of W's outcome lattice: p_w is the chance that some W
  // variable realizes its right endpoint, b_w the expected maximum over W
  // conditioned on that event.
  if (!cert.w_empty) {
    if (cert.w_indices.size() > kMaxEnumeratedW) {
      throw SizeLimitError("certificate enumeration limited to 20 W variables");
    }
    const std::size_t w = cert.w_indices.size();
    double hit_mass = 0.0;
    double hit_weighted = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w); ++mask) {
      double prob = 1.0;
      double best = 0.0;
      for (std::size_t k = 0; k < w; ++k) {
        const TwoPointVar& v = vars[cert.w_indices[k]];
        if (mask & (std::uint64_t{1} << k)) {
          prob *= v.p;
          best = std::max(best, v.b);
        } else {
          prob *= 1.0 - v.p;
          best = std::max(best, v.a);
        }
      }
      if (mask != 0) {
        hit_mass += prob;
        hit_weighted += prob * best;
      }
    }
    cert.p_w = hit_mass;
    cert.b_w = hit_mass > 0.0 ? hit_weighted / hit_mass : 0.0;
  }

  cert.mu_star = star.p * star.b + (1.0 - star.p) * star.a;
  cert.t1 = cert.p_w * cert.b_w + (1.0 - cert.p_w) * cert.mu_star;
  cert.t2 = star.p * star.b + (1.0 - star.p) * cert.p_w * cert.b_w;
  cert.t3 = cert.mu_star;
  cert.max_value = star.p * star.b + (1.0 - star.p) * cert.p_w * cert.b_w +
                   (1.0 - star.p) * (1.0 - cert.p_w) * star.a;

  std::vector<std::size_t> sigma1 = cert.u_indices;
  sigma1.insert(sigma1.end(), cert.w_indices.begin(), cert.w_indices.end());
  sigma1.push_back(cert.i_star);
  std::vector<std::size_t> sigma2 = cert.u_indices;
  sigma2.push_back(cert.i_star);
  sigma2.insert(sigma2.end(), cert.w_indices.begin(), cert.w_indices.end());

  cert.sigma1_value = evaluate_two_point_order(inst, sigma1).value;
  cert.sigma2_value = evaluate_two_point_order(inst, sigma2).value;
  return cert;
}

ProphetReport prophet_ratio(const TwoPointInstance& inst) {
  if (inst.size() == 0) throw ArgumentError("instance must contain a variable");
  ProphetReport report;
  report.e_max = hindsight_max(std::span<const Dist>(inst.dists()));
  report.best_order_value = solve(inst).value;
  report.ratio = report.best_order_value > 0.0
                     ? report.e_max / report.best_order_value
                     : 1.0;
  report.certificate = build_certificate(inst);
  return report;
}

TwoPointInstance tightness_instance(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw ArgumentError("eps must lie in (0,1)");
  }
  return TwoPointInstance({{0.5, 1.0 / (2.0 * eps), eps}, {0.0, 1.0, 0.5}});
}

}  // namespace ordstop
