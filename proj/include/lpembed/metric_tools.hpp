/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_METRIC_TOOLS_HPP
#define LPEMBED_METRIC_TOOLS_HPP

#include <cstdint>
#include <vector>

#include "lpembed/point_set.hpp"

namespace lpembed::metric {

/// Greedy gamma-net: centers pairwise >= gamma apart, every parent point
/// within < gamma of its assigned (nearest) center.
struct Net {
  double gamma = 0.0;
  std::vector<std::size_t> centers;  // indices into the parent point set
  std::vector<std::size_t> assign;   // parent point -> covering center index
};

Net build_net(const PointSet& ps, double gamma);
/// Net over a subset; `centers` hold original ids, `assign` is parallel to
/// `subset` and also holds original ids.
Net build_net(const PointSet& ps, const std::vector<std::size_t>& subset,
              double gamma);

/// Nested 2^i-nets from the full set up to a single root, scales measured in
/// units of the minimum interpoint distance.
struct Hierarchy {
  double min_dist = 1.0;                       // normalization unit
  std::vector<double> scales;                  // 2^i * min_dist per level
  std::vector<std::vector<std::size_t>> levels;
  // parent[l][j]: position in levels[l+1] of the parent of levels[l][j]
  std::vector<std::vector<std::size_t>> parent;

  std::size_t height() const { return levels.size(); }
  std::size_t root() const { return levels.back().front(); }
};

Hierarchy build_hierarchy(const PointSet& ps);

/// Upper-bound estimate of the doubling dimension: log2 of the largest
/// greedy half-radius cover over sampled (center, radius) balls.
double estimate_doubling_dimension(const PointSet& ps);

/// Multiset of bounded-diameter random partitions. Every cluster has
/// diameter <= delta; each point's ball of radius delta/(c0 * ddim) stays
/// inside its own cluster in at least a 1-eps fraction of the partitions
/// (c0 escalates automatically until that holds).
struct PaddedPartitionFamily {
  double delta = 0.0;
  double eps = 0.0;
  double c0 = 2.0;    // final value after escalation
  double ddim = 1.0;  // doubling estimate used for sizing
  int escalations = 0;
  std::vector<std::vector<int>> cluster_of;  // [partition][point] -> cluster id
  std::vector<double> padding;               // measured padded fraction per point

  std::size_t partitions() const { return cluster_of.size(); }
  double padding_radius() const;
  double min_padding() const;
};

PaddedPartitionFamily padded_decomposition(const PointSet& ps, double delta,
                                           double eps, std::uint64_t seed,
                                           double c0 = 2.0);

/// Non-oblivious embedding whose dimension depends on the doubling estimate
/// rather than n. Per partition of an s-padded decomposition, each cluster's
/// eps/ddim-net is blown up by ddim/eps, pushed through a threshold embedding
/// with parameter s' = s*ddim/eps, and scaled back; non-net points inherit
/// their covering net point's image, partitions concatenate with an m^{-1/q}
/// scale.
struct IntrinsicEmbedding {
  double p = 2.0, q = 2.0;
  double s = 2.0;        // threshold in the original metric
  double eps = 0.3;
  std::uint64_t seed = 0;
  double ddim = 1.0;
  double sprime = 0.0;   // s * ddim / eps
  double net_scale = 0.0;  // eps / ddim
  std::size_t kprime = 0;  // per-partition dimension
  std::size_t partitions = 0;
  int escalations = 0;
  std::size_t n = 0;
  std::size_t out_dim = 0;     // partitions * kprime
  std::vector<double> images;  // n x out_dim

  const double* image(std::size_t i) const { return images.data() + i * out_dim; }
  double image_distance(std::size_t i, std::size_t j) const;  // l_q
};

IntrinsicEmbedding intrinsic_embedding(const PointSet& ps, double s, double q,
                                       double eps, std::size_t kprime,
                                       std::uint64_t seed);

}  // namespace lpembed::metric

#endif  // LPEMBED_METRIC_TOOLS_HPP
