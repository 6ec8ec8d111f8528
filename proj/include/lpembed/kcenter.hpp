/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_KCENTER_HPP
#define LPEMBED_KCENTER_HPP

#include <cstdint>
#include <vector>

#include "lpembed/point_set.hpp"

namespace lpembed::cluster {

/// Discrete k-center answer: centers drawn from the input set.
struct KCenterSolution {
  std::vector<std::size_t> centers;
  double radius = 0.0;                   // max point-to-nearest-center distance
  std::vector<double> objective_history; // diagnostics, stage by stage
};

/// Farthest-point traversal (2-approximation), seeded at index 0.
KCenterSolution gonzalez(const PointSet& ps, std::size_t k);

/// Exact optimum by exhaustive center-set enumeration.
/// Guarded: C(n, k) must not exceed 1e7.
KCenterSolution brute_force_kcenter(const PointSet& ps, std::size_t k);
KCenterSolution brute_force_kcenter(const DistanceMatrix& dm, std::size_t k);

/// Full pipeline: coarse radius from gonzalez, (eps/2)r-net, snowflake
/// embedding of the net, exact solve in the embedded space, map back and
/// re-evaluate in the original metric.
KCenterSolution kcenter_pipeline(const PointSet& ps, std::size_t k, double eps,
                                 std::uint64_t seed, std::size_t kprime = 64);

}  // namespace lpembed::cluster

#endif  // LPEMBED_KCENTER_HPP
