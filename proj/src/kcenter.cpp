/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/kcenter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpembed/common.hpp"
#include "lpembed/metric_tools.hpp"
#include "lpembed/snowflake.hpp"

namespace lpembed::cluster {

namespace {

double binomial_guarded(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    c *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (c > 1e18) return c;
  }
  return c;
}

}  // namespace

KCenterSolution gonzalez(const PointSet& ps, std::size_t k) {
  const std::size_t n = ps.size();
  if (k < 1 || k > n) throw param_error("gonzalez: need 1 <= k <= n");
  KCenterSolution sol;
  sol.centers.push_back(0);
  std::vector<double> dist(n);
  for (std::size_t x = 0; x < n; ++x) dist[x] = ps.dist(x, 0);
  while (sol.centers.size() < k) {
    const std::size_t far =
        std::max_element(dist.begin(), dist.end()) - dist.begin();
    sol.objective_history.push_back(dist[far]);
    sol.centers.push_back(far);
    for (std::size_t x = 0; x < n; ++x)
      dist[x] = std::min(dist[x], ps.dist(x, far));
  }
  sol.radius = *std::max_element(dist.begin(), dist.end());
  sol.objective_history.push_back(sol.radius);
  return sol;
}

KCenterSolution brute_force_kcenter(const DistanceMatrix& dm, std::size_t k) {
  const std::size_t n = dm.size();
  if (k < 1 || k > n) throw param_error("brute force k-center: need 1 <= k <= n");
  if (binomial_guarded(n, k) > 1e7)
    throw guard_error("brute force k-center: C(n,k) exceeds 1e7");

  // Enumeration parallelizes over the first center; each worker keeps its
  // own incumbent and the ascending merge below reproduces the global
  // lexicographically-first optimum independent of scheduling.
  const std::size_t firsts = n - k + 1;
  std::vector<KCenterSolution> local(firsts);
  parallel_for(firsts, [&](std::size_t first) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = first + i;
    KCenterSolution best;
    best.radius = std::numeric_limits<double>::infinity();
    for (;;) {
      // Radius of this center set, abandoned once past the incumbent.
      double radius = 0.0;
      for (std::size_t x = 0; x < n && radius < best.radius; ++x) {
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t c : pick) d = std::min(d, dm(x, c));
        radius = std::max(radius, d);
      }
      if (radius < best.radius) {
        best.radius = radius;
        best.centers = pick;
      }
      // Next combination with pick[0] fixed.
      std::size_t i = k;
      while (i > 1 && pick[i - 1] == n - k + i - 1) --i;
      if (i <= 1) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    local[first] = std::move(best);
  });

  KCenterSolution best = std::move(local.front());
  for (std::size_t f = 1; f < firsts; ++f)
    if (local[f].radius < best.radius) best = std::move(local[f]);
  best.objective_history.push_back(best.radius);
  return best;
}

KCenterSolution brute_force_kcenter(const PointSet& ps, std::size_t k) {
  DistanceMatrix dm(ps);
  return brute_force_kcenter(dm, k);
}

KCenterSolution kcenter_pipeline(const PointSet& ps, std::size_t k, double eps,
                                 std::uint64_t seed, std::size_t kprime) {
  if (!(eps > 0.0 && eps < 1.0)) throw param_error("pipeline: need eps in (0,1)");
  KCenterSolution coarse = gonzalez(ps, k);
  const double r_tilde = coarse.radius;
  if (r_tilde <= 0.0) return coarse;  // <= k distinct points

  const metric::Net net = metric::build_net(ps, 0.5 * eps * r_tilde);
  const std::vector<std::size_t>& V = net.centers;
  if (binomial_guarded(V.size(), k) > 1e7)
    throw guard_error("pipeline: net too large for the exact stage");

  KCenterSolution sol;
  sol.objective_history.push_back(r_tilde);

  std::vector<std::size_t> chosen;
  if (V.size() <= k) {
    chosen = V;
  } else {
    const PointSet vps = ps.subset(V);
    // The snowflake stage wants eps inside its own accuracy domain. Calibration
    // is skipped: the exact stage only consumes distance order, and net
    // distances may deliberately span less than a decade.
    const double snow_eps = std::min(eps, 0.2);
    const auto snow = snow::build_snowflake(vps, 0.5, snow_eps, vps.p(), kprime,
                                            derive_seed(seed, 7), false);
    std::vector<double> embedded;
    embedded.reserve(V.size() * snow.out_dim());
    for (std::size_t i = 0; i < vps.size(); ++i) {
      const auto img = snow.embed(vps.point(i), vps.dim());
      embedded.insert(embedded.end(), img.begin(), img.end());
    }
    const PointSet eps_set(std::move(embedded), snow.out_dim(), vps.p());
    DistanceMatrix edm(eps_set);
    KCenterSolution inner = brute_force_kcenter(edm, k);
    sol.objective_history.push_back(inner.radius);
    chosen.reserve(k);
    for (std::size_t pos : inner.centers) chosen.push_back(V[pos]);
  }

  sol.centers = chosen;
  double radius = 0.0;
  for (std::size_t x = 0; x < ps.size(); ++x) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t c : sol.centers) d = std::min(d, ps.dist(x, c));
    radius = std::max(radius, d);
  }
  sol.radius = radius;
  sol.objective_history.push_back(radius);
  return sol;
}

}  // namespace lpembed::cluster
