/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_DATASET_HPP
#define LPEMBED_DATASET_HPP

#include <cstdint>
#include <string>

#include "lpembed/point_set.hpp"

namespace lpembed::data {

enum class DatasetKind { gaussian, grid, clustered, low_doubling_curve };

DatasetKind parse_kind(const std::string& name);
std::string to_string(DatasetKind k);

struct DatasetSpec {
  DatasetKind kind = DatasetKind::gaussian;
  std::size_t n = 100;
  std::size_t m = 16;
  std::uint64_t seed = 0;
  double p = 1.0;          // norm the scale controls are calibrated against
  double range_lo = 1.0;   // clustered: target pair-distance band
  double range_hi = 4.0;   // curve: approximate diameter control
  std::size_t clusters = 10;
};

/// Deterministic under seed. `clustered` lands >= 90% of pairwise distances
/// in [range_lo, range_hi] (the rest fall below as intra-cluster pairs);
/// `low_doubling_curve` walks a coordinate-monotone staircase that is
/// isometric to a three-level 1-D multiscale set under l_1, with doubling
/// estimate <= 3.
PointSet generate_dataset(const DatasetSpec& spec);

}  // namespace lpembed::data

#endif  // LPEMBED_DATASET_HPP
