#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ordstop/oracle.hpp"
#include "ordstop/prophet.hpp"
#include "test_support.hpp"

using namespace ordstop;
using namespace ordstop::testing;

TEST_CASE("ratio is 1 when a single order matches the benchmark") {
  TwoPointInstance intro({{0.0, 1.0, 0.1}, {0.1, 0.1, 1.0}});
  ProphetReport report = prophet_ratio(intro);
  CHECK(near(report.e_max, 0.19, 1e-15));
  CHECK(near(report.best_order_value, 0.19, 1e-15));
  CHECK(near(report.ratio, 1.0, 1e-12));

  TwoPointInstance single({{0.2, 0.9, 0.4}});
  CHECK(near(prophet_ratio(single).ratio, 1.0, 1e-12));
}

TEST_CASE("ratio of the near-tight pair") {
  // E[max] = 5/4 - 3e/4. The optimal order probes X2 first and earns
  // 1/2 + (1/2) E[X1] = 1 - e/4, so the ratio is (5/4 - 3e/4)/(1 - e/4);
  // 1.175 / 0.975 at e = 0.1.
  ProphetReport report = prophet_ratio(tightness_instance(0.1));
  CHECK(near(report.e_max, 1.175, 1e-12));
  CHECK(near(report.best_order_value, 0.975, 1e-12));
  CHECK(near(report.ratio, 1.175 / 0.975, 1e-12));
}

TEST_CASE("ratio stays within [1, 1.25] on random instances") {
  Rng rng(20);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform_index(rng, 1, 8);
    TwoPointInstance inst = random_two_point_instance(rng, n);
    ProphetReport report = prophet_ratio(inst);
    CHECK(report.ratio >= 1.0 - 1e-12);
    CHECK(report.ratio <= 1.25 + 1e-9);
  }
}

TEST_CASE("certificate of the near-tight pair") {
  ProphetCertificate cert = build_certificate(tightness_instance(0.1));
  CHECK(cert.i_star == 0);
  CHECK(cert.u_indices.empty());
  CHECK(cert.w_indices == std::vector<std::size_t>{1});
  CHECK(near(cert.b_w, 1.0, 1e-15));
  CHECK(near(cert.p_w, 0.5, 1e-15));
  CHECK(near(cert.mu_star, 0.95, 1e-15));
  CHECK(near(cert.t1, 0.975, 1e-15));
  CHECK(near(cert.t2, 0.95, 1e-15));
  CHECK(near(cert.t3, 0.95, 1e-15));
  CHECK(near(cert.max_value, 1.175, 1e-15));
  CHECK(near(cert.sigma1_value, 0.975, 1e-15));
  CHECK(near(cert.sigma2_value, 0.95, 1e-15));
  const double best_bound = std::max({cert.t1, cert.t2, cert.t3});
  CHECK(best_bound >= 0.8 * cert.max_value - 1e-9);
}

TEST_CASE("certificate degenerates cleanly when W is empty") {
  TwoPointInstance single({{0.3, 0.9, 0.5}});
  ProphetCertificate cert = build_certificate(single);
  CHECK(cert.w_empty);
  CHECK(cert.b_w == 0.0);
  CHECK(cert.p_w == 0.0);
  CHECK(near(cert.t3, cert.mu_star, 1e-15));
  CHECK(near(cert.max_value, cert.mu_star, 1e-15));
}

TEST_CASE("certificate invariants hold across random instances") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform_index(rng, 1, 8);
    TwoPointInstance inst = random_two_point_instance(rng, n);
    ProphetCertificate cert = build_certificate(inst);

    // p_w two ways: outcome enumeration inside build_certificate versus the
    // complement product.
    double miss = 1.0;
    for (std::size_t i : cert.w_indices) miss *= 1.0 - inst.vars()[i].p;
    CHECK(near(cert.p_w, 1.0 - miss, 1e-12));

    const double best_bound = std::max({cert.t1, cert.t2, cert.t3});
    CHECK(std::max(cert.sigma1_value, cert.sigma2_value) >=
          best_bound - 1e-9);
    CHECK(best_bound >= 0.8 * cert.max_value - 1e-9);

    // Dropped variables never carry the maximum.
    std::vector<Dist> full = inst.dists();
    std::vector<Dist> restricted;
    for (std::size_t i : cert.u_indices) restricted.push_back(full[i]);
    for (std::size_t i : cert.w_indices) restricted.push_back(full[i]);
    restricted.push_back(full[cert.i_star]);
    const double full_max = hindsight_max(std::span<const Dist>(full));
    const double restricted_max =
        hindsight_max(std::span<const Dist>(restricted));
    CHECK(near(full_max, restricted_max, 1e-12));

    // With U empty the certificate's MAX is itself the restricted benchmark.
    if (cert.u_indices.empty()) {
      CHECK(near(cert.max_value, restricted_max, 1e-12));
    }
  }
}

TEST_CASE("tightness family: parameters, formula, and limit behaviour") {
  CHECK_THROWS_AS(tightness_instance(0.0), ArgumentError);
  CHECK_THROWS_AS(tightness_instance(1.0), ArgumentError);

  TwoPointInstance inst = tightness_instance(0.1);
  CHECK(inst.vars()[0].a == 0.5);
  CHECK(near(inst.vars()[0].b, 5.0, 1e-15));
  CHECK(near(inst.vars()[0].p, 0.1, 1e-15));
  CHECK(inst.vars()[1].a == 0.0);
  CHECK(inst.vars()[1].b == 1.0);

  // Exact ratio (5/4 - 3e/4)/(1 - e/4), verified against the permutation
  // oracle at every probe.
  const double eps_values[] = {0.5, 0.1, 0.01, 0.001};
  double previous = 0.0;
  for (double eps : eps_values) {
    TwoPointInstance family = tightness_instance(eps);
    ProphetReport report = prophet_ratio(family);
    const double expected =
        (5.0 / 4.0 - 3.0 * eps / 4.0) / (1.0 - eps / 4.0);
    CHECK(near(report.ratio, expected, 1e-9));
    OracleResult oracle =
        brute_force_order(std::span<const Dist>(family.dists()));
    CHECK(near(report.best_order_value, oracle.best_value, 1e-12));
    CHECK(report.ratio >= previous);
    previous = report.ratio;
  }
  CHECK(previous >= 1.2495);
  CHECK(previous <= 1.25);
}
