/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_SINE_EMBEDDING_HPP
#define LPEMBED_SINE_EMBEDDING_HPP

#include <cstdint>
#include <vector>

namespace lpembed::sine {

// ---------------------------------------------------------------------------
// Sine-dampened stable projections. A single coordinate maps v to
//   F(v) = s/(2 P_q^{1/q}) * sin(phi + (2/s) <g, v>)
// with g a row of i.i.d. symmetric p-stables and phi a uniform phase; the
// full embedding stacks k independent coordinates scaled by k^{-1/q}.
// ---------------------------------------------------------------------------

/// One frozen coordinate: phase, stable row and the threshold scale.
struct CoordinateEmbedding {
  double p = 2.0;
  double q = 2.0;
  double threshold = 2.0;  // s > 1
  double phase = 0.0;      // in [0, 2pi)
  double amplitude = 0.0;  // s / (2 P_q^{1/q})
  std::vector<double> row; // m stable entries
};

/// F(v) for one coordinate. |result| <= amplitude always.
double embed_coordinate(const CoordinateEmbedding& c, const double* v,
                        std::size_t dim);

/// k frozen coordinates with independent phases and stable rows. Immutable
/// after construction; embed_point is safe to call concurrently.
class ThresholdEmbedding {
 public:
  double p() const { return p_; }
  double q() const { return q_; }
  double threshold() const { return s_; }
  std::size_t out_dim() const { return k_; }
  std::size_t in_dim() const { return m_; }
  std::uint64_t seed() const { return seed_; }
  double cosine_moment_q() const { return pq_; }

  /// Coordinate i as a standalone object (copies the row).
  CoordinateEmbedding coordinate(std::size_t i) const;

  /// Image of v; coordinate i is k^{-1/q} F_{phi_i,s}(v). Theta(mk) time.
  void embed_point(const double* v, std::size_t dim, double* out) const;
  std::vector<double> embed_point(const std::vector<double>& v) const;

  friend ThresholdEmbedding make_threshold_embedding(double p, double q, double s,
                                                     std::size_t k, std::size_t m,
                                                     std::uint64_t seed);

 private:
  double p_ = 2.0, q_ = 2.0, s_ = 2.0;
  std::size_t k_ = 0, m_ = 0;
  std::uint64_t seed_ = 0;
  double pq_ = 0.0;          // P_q
  double amplitude_ = 0.0;   // s / (2 P_q^{1/q})
  double coord_scale_ = 0.0; // k^{-1/q}
  std::vector<double> phases_;
  std::vector<double> rows_; // k x m, row-major
};

/// Freezes all randomness from `seed`; never inspects any data point.
ThresholdEmbedding make_threshold_embedding(double p, double q, double s,
                                            std::size_t k, std::size_t m,
                                            std::uint64_t seed);

/// E ||f(v)-f(w)||_q^q for ||v-w||_p = t, namely s^q H(t/s). The reference
/// curve for every distortion check in this project.
double expected_transform(double p, double q, double s, double t);

}  // namespace lpembed::sine

#endif  // LPEMBED_SINE_EMBEDDING_HPP
