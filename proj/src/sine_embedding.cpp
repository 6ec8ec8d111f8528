/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/sine_embedding.hpp"

#include <cmath>

#include "lpembed/common.hpp"
#include "lpembed/stable.hpp"

namespace lpembed::sine {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

void check_domain(double p, double q, double s) {
  if (!(p >= 1.0 && p <= 2.0)) throw param_error("sine embedding: p must lie in [1,2]");
  if (!(q >= 1.0 && q <= p)) throw param_error("sine embedding: need 1 <= q <= p");
  if (!(s > 1.0)) throw param_error("sine embedding: threshold s must exceed 1");
}
}  // namespace

double embed_coordinate(const CoordinateEmbedding& c, const double* v,
                        std::size_t dim) {
  if (dim != c.row.size())
    throw param_error("embed_coordinate: dimension mismatch");
  const double arg = c.phase + (2.0 / c.threshold) * kahan_dot(c.row.data(), v, dim);
  return c.amplitude * std::sin(arg);
}

ThresholdEmbedding make_threshold_embedding(double p, double q, double s,
                                            std::size_t k, std::size_t m,
                                            std::uint64_t seed) {
  check_domain(p, q, s);
  if (k < 1 || m < 1) throw param_error("sine embedding: need k >= 1 and m >= 1");

  ThresholdEmbedding e;
  e.p_ = p;
  e.q_ = q;
  e.s_ = s;
  e.k_ = k;
  e.m_ = m;
  e.seed_ = seed;
  e.pq_ = stable::cosine_moment(q);
  e.amplitude_ = s / (2.0 * std::pow(e.pq_, 1.0 / q));
  e.coord_scale_ = std::pow(static_cast<double>(k), -1.0 / q);

  std::mt19937_64 phase_engine(derive_seed(seed, 0));
  e.phases_.resize(k);
  for (auto& phi : e.phases_) phi = kTwoPi * uniform53(phase_engine());

  stable::StableSampler g(p, derive_seed(seed, 1));
  e.rows_.resize(k * m);
  for (auto& x : e.rows_) x = g.draw();
  return e;
}

CoordinateEmbedding ThresholdEmbedding::coordinate(std::size_t i) const {
  CoordinateEmbedding c;
  c.p = p_;
  c.q = q_;
  c.threshold = s_;
  c.phase = phases_.at(i);
  c.amplitude = amplitude_;
  c.row.assign(rows_.begin() + i * m_, rows_.begin() + (i + 1) * m_);
  return c;
}

void ThresholdEmbedding::embed_point(const double* v, std::size_t dim,
                                     double* out) const {
  if (dim != m_) throw param_error("embed_point: dimension mismatch");
  const double rate = 2.0 / s_;
  const double scale = coord_scale_ * amplitude_;
  for (std::size_t i = 0; i < k_; ++i) {
    const double dot = kahan_dot(rows_.data() + i * m_, v, m_);
    out[i] = scale * std::sin(phases_[i] + rate * dot);
  }
}

std::vector<double> ThresholdEmbedding::embed_point(const std::vector<double>& v) const {
  std::vector<double> out(k_);
  embed_point(v.data(), v.size(), out.data());
  return out;
}

double expected_transform(double p, double q, double s, double t) {
  check_domain(p, q, s);
  if (!(t >= 0.0)) throw param_error("expected_transform: need t >= 0");
  return std::pow(s, q) * stable::transform_h(p, q, t / s);
}

}  // namespace lpembed::sine
