/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_DISTORTION_HPP
#define LPEMBED_DISTORTION_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lpembed/point_set.hpp"

namespace lpembed::bench {

/// Map from a point to its image; must be pure and thread-safe.
using PointMap = std::function<std::vector<double>(const double*, std::size_t)>;

/// Reference transform of the original distance the ratio is measured
/// against (identity for range-style embeddings, t^alpha for snowflakes).
using Reference = std::function<double(double)>;

struct DistortionOptions {
  double q = 2.0;            // norm of the embedded space
  double eps_band = 0.3;     // ratio acceptance band 1 +- eps
  std::size_t pair_budget = 100000;
  std::uint64_t seed = 0;
  double range_lo = 1.0;     // banding window on t
  double range_hi = 0.0;     // <= 0 means no upper band edge
};

struct PairRecord {
  std::uint32_t i = 0, j = 0;
  double t = 0.0;      // original distance
  double ref = 0.0;    // reference value the ratio is against
  double emb = 0.0;    // embedded distance
  double ratio = 0.0;  // emb / ref
  int band = 1;        // 0 below range, 1 in range, 2 above
};

struct BandSummary {
  std::string name;      // below / in / above / all
  std::size_t count = 0;
  double q05 = 0, q25 = 0, q50 = 0, q75 = 0, q95 = 0;  // ratio quantiles
  double within = 0.0;   // fraction with |ratio - 1| <= eps_band
};

struct DistortionReport {
  std::map<std::string, std::string> params;  // full parameter echo, seeds included
  DistortionOptions options;
  std::vector<PairRecord> records;            // sorted by (i, j)
  std::vector<BandSummary> bands;
  double elapsed_seconds = 0.0;  // stderr-only; never written to artifacts

  /// Per-pair CSV with a `# key=value` parameter header. Byte-stable.
  void write_csv(std::ostream& out) const;
  /// Machine-readable summary (no per-pair records). Byte-stable.
  std::string summary_json() const;
  /// Console block; the only place timings appear.
  void write_summary(std::ostream& out) const;
};

/// Evaluates up to `pair_budget` pairs (all pairs when they fit), computes
/// t in l_p and the embedded l_q distance, and aggregates band quantiles.
/// Deterministic for fixed seeds regardless of the worker count.
DistortionReport distortion_report(const PointSet& ps, const PointMap& f,
                                   const Reference& ref,
                                   const DistortionOptions& options,
                                   std::map<std::string, std::string> params);

}  // namespace lpembed::bench

#endif  // LPEMBED_DISTORTION_HPP
