/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_RANGE_EMBEDDING_HPP
#define LPEMBED_RANGE_EMBEDDING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lpembed/sine_embedding.hpp"

namespace lpembed::range {

/// Dimension calculator flavor. The bennett branch is only defined for
/// 2q > p; `min_of` takes the smaller of the two brackets.
enum class DimMethod { hoeffding, bennett, min_of };

DimMethod parse_dim_method(const std::string& name);
std::string to_string(DimMethod m);

struct RangeParams {
  double p = 2.0;
  double q = 2.0;
  double R = 2.0;    // range width, distances preserved on [1, R]
  double eps = 0.3;  // accuracy, in (0, 1/2)
  std::size_t n = 2; // point-count budget (enters through log n)
  DimMethod method = DimMethod::min_of;
  double c_dim = 1.0; // leading constant in the dimension formula
};

/// Threshold for the target range:
///   q < p:  s = R eps^{-1/2} (1 + (p-q) eps^{-(q/2+1)})^{1/(p-q)}
///   q = p:  s = max{ R^{1/eps}, R eps^{-1/2} e^{eps^{-(q/2+1)}} }
/// Proportionality constant 1. Warns (does not fail) past 1e12, which
/// signals an impractical (eps, q) regime.
double select_threshold(double p, double q, double R, double eps);

/// k = ceil(c_dim * (ln n / eps^2) * B) with bracket B per method:
///   hoeffding: s^{2q}
///   bennett:   max{ s^{2q-p}/(2q-p), eps s^q }   (requires 2q > p)
std::size_t required_dimension(std::size_t n, double eps, double s, double p,
                               double q, DimMethod method, double c_dim = 1.0);

/// Threshold embedding composed with an output scale that flattens the
/// transform over [1, R]: Q^{-1/q} for q < p, and for q = p the transform
/// curve anchored at the geometric band center (the truncated-moment scale
/// up to 1 + O(eps)). Distances in [1, R] come out bi-Lipschitz in the ^q
/// sense.
class RangeEmbedding {
 public:
  const RangeParams& params() const { return params_; }
  double threshold() const { return s_; }
  double output_scale() const { return out_scale_; }
  std::size_t out_dim() const { return inner_.out_dim(); }
  std::size_t in_dim() const { return inner_.in_dim(); }
  const sine::ThresholdEmbedding& inner() const { return inner_; }

  void embed(const double* v, std::size_t dim, double* out) const;
  std::vector<double> embed(const std::vector<double>& v) const;

  friend RangeEmbedding make_range_embedding(const RangeParams& params,
                                             std::size_t m, std::uint64_t seed);

 private:
  RangeParams params_;
  double s_ = 0.0;
  double out_scale_ = 1.0;
  sine::ThresholdEmbedding inner_;
};

RangeEmbedding make_range_embedding(const RangeParams& params, std::size_t m,
                                    std::uint64_t seed);

}  // namespace lpembed::range

#endif  // LPEMBED_RANGE_EMBEDDING_HPP
