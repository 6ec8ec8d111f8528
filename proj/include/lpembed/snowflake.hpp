/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_SNOWFLAKE_HPP
#define LPEMBED_SNOWFLAKE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lpembed/point_set.hpp"
#include "lpembed/sine_embedding.hpp"

namespace lpembed::snow {

// ---------------------------------------------------------------------------
// Assouad-style alpha-snowflake: one threshold embedding per geometric scale
// r_i = (1+eps)^i, each accurate on the band [r_i / s^{1-alpha}, r_i s^alpha],
// grouped round-robin into 2v blocks with per-scale weights
// (1+eps)^{-i(1-alpha)}, direct-summed and divided by the calibrated M^{1/q}.
// The result carries ||x-y||_p^alpha up to small multiplicative error.
// ---------------------------------------------------------------------------

struct SnowflakeParams {
  double alpha = 0.5;
  double alpha_bar = 0.5;  // min{alpha, 1-alpha}
  double eps = 0.2;        // in (0, 1/4)
  double p = 2.0;
  double q = 2.0;
  std::size_t kprime = 32;  // per-scale dimension
  std::uint64_t seed = 0;
  std::size_t v = 0;       // group half-count, 2v groups total
  long imin = 0, imax = 0; // scale index interval I
  double s = 0.0;          // effective band width (1+eps)^{2 v alpha_bar}
  double ddim = 1.0;       // doubling estimate behind v
};

class SnowflakeEmbedding {
 public:
  const SnowflakeParams& params() const { return params_; }
  double rescale() const { return rescale_; }
  double normalization() const { return m_; }
  std::size_t groups() const { return 2 * params_.v; }
  std::size_t out_dim() const { return groups() * params_.kprime; }
  const std::vector<long>& scale_indices() const { return indices_; }

  /// Direct-sum image divided by M^{1/q}; x lives in the original ambient
  /// space (the min-distance rescale is applied internally).
  std::vector<double> embed(const double* x, std::size_t dim) const;
  std::vector<double> embed(const std::vector<double>& x) const;

  /// Image before the M normalization.
  std::vector<double> embed_raw(const double* x, std::size_t dim) const;

  /// Per-scale block contribution
  /// B_i = ||phi_i(x) - phi_i(y)||_q / (1+eps)^{i(1-alpha)} for diagnostics.
  double scale_contribution(const double* x, const double* y, std::size_t dim,
                            std::size_t scale_pos) const;

  /// Net weight a scale's image enters its block with:
  /// (1+eps)^{i alpha} / s^{1-alpha} (at alpha = 1/2 this is the
  /// (1+eps)^{-i/2} divisor applied to the r_i/sqrt(s)-scaled embedding).
  double scale_weight(std::size_t scale_pos) const { return out_coef_[scale_pos]; }

  void set_normalization(double m);

  friend SnowflakeEmbedding build_snowflake(const PointSet& ps, double alpha,
                                            double eps, double q,
                                            std::size_t kprime,
                                            std::uint64_t seed, bool calibrate);

 private:
  void accumulate(const double* x, std::size_t dim, std::vector<double>& out) const;

  SnowflakeParams params_;
  double rescale_ = 1.0;  // input factor making the min interpoint distance 1
  double m_ = 1.0;        // calibrated normalization M
  std::vector<long> indices_;                    // retained scale indices
  std::vector<sine::ThresholdEmbedding> scales_; // parallel to indices_
  std::vector<double> in_scale_;                 // s^{1-alpha} / r_i
  std::vector<double> out_coef_;                 // (1+eps)^{i alpha} / s^{1-alpha}
};

/// Builds the per-scale family and calibrates M on seeded sample pairs.
/// Requires alpha in (0,1), eps in (0, 1/4) and >= 2 points. Callers that
/// only consume distance *order* (a global scale cannot change an argmin)
/// may skip calibration and keep M = 1.
SnowflakeEmbedding build_snowflake(const PointSet& ps, double alpha, double eps,
                                   double q, std::size_t kprime,
                                   std::uint64_t seed, bool calibrate = true);

/// M = median over calibration pairs of ||raw(x)-raw(y)||_q^q / t^{alpha q}.
/// Fails when the pair distances span less than one decade; warns below
/// three.
double calibrate_m(const SnowflakeEmbedding& emb, const PointSet& ps,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace lpembed::snow

#endif  // LPEMBED_SNOWFLAKE_HPP
