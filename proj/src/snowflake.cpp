/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/snowflake.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

#include "lpembed/common.hpp"
#include "lpembed/metric_tools.hpp"

namespace lpembed::snow {

namespace {

// Scales whose block weight falls this far below the unit-distance scale can
// never matter; dropping them bounds the cost on large aspect ratios.
constexpr double kWeightFloor = 1e-12;

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n,
                                                              std::size_t want,
                                                              std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t all = n * (n - 1) / 2;
  if (all <= want) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
  }
  std::mt19937_64 engine(seed);
  std::vector<char> used;  // dedup via sorted insert at this scale is fine
  while (pairs.size() < want) {
    std::size_t i = engine() % n;
    std::size_t j = engine() % n;
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) == pairs.end())
      pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

SnowflakeEmbedding build_snowflake(const PointSet& ps, double alpha, double eps,
                                   double q, std::size_t kprime,
                                   std::uint64_t seed, bool calibrate) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw param_error("snowflake: alpha must lie in (0,1)");
  if (!(eps > 0.0 && eps < 0.25))
    throw param_error("snowflake: eps must lie in (0, 1/4)");
  if (!(q >= 1.0 && q <= ps.p()))
    throw param_error("snowflake: need 1 <= q <= p");
  if (kprime < 1) throw param_error("snowflake: need kprime >= 1");
  if (ps.size() < 2) throw param_error("snowflake: need >= 2 points");

  SnowflakeEmbedding emb;
  auto& par = emb.params_;
  par.alpha = alpha;
  par.alpha_bar = std::min(alpha, 1.0 - alpha);
  par.eps = eps;
  par.p = ps.p();
  par.q = q;
  par.kprime = kprime;
  par.seed = seed;

  const double min_dist = ps.min_distance();
  if (!(min_dist > 0.0)) throw param_error("snowflake: duplicate-only point set");
  emb.rescale_ = 1.0 / min_dist;
  const double diam = ps.diameter() * emb.rescale_;

  par.ddim = std::max(1.0, metric::estimate_doubling_dimension(ps));
  const double log1e = std::log1p(eps);
  par.v = static_cast<std::size_t>(
      std::ceil(2.0 * std::log(par.ddim / eps) / log1e / par.alpha_bar));
  par.s = std::exp(2.0 * static_cast<double>(par.v) * par.alpha_bar * log1e);

  par.imin = -2 * static_cast<long>(par.v);
  par.imax = static_cast<long>(
      std::floor(2.0 * static_cast<double>(par.v) + std::log(diam) / log1e));
  if (par.imax < par.imin) par.imax = par.imin;
  if (par.imax - par.imin + 1 > 4000)
    std::cerr << "warning: snowflake scale interval has "
              << (par.imax - par.imin + 1) << " indices; cost will be high\n";

  const double s_pow = std::pow(par.s, 1.0 - alpha);
  for (long i = par.imin; i <= par.imax; ++i) {
    const double weight = std::exp(static_cast<double>(i) * alpha * log1e) / s_pow;
    // Relative to the unit-distance scale weight (i = 0).
    if (weight < kWeightFloor / s_pow) continue;
    emb.indices_.push_back(i);
    const double r_i = std::exp(static_cast<double>(i) * log1e);
    emb.in_scale_.push_back(s_pow / r_i);
    emb.out_coef_.push_back(weight);
  }
  // Per-scale construction is independent given the derived sub-seeds.
  emb.scales_.resize(emb.indices_.size());
  parallel_for(emb.indices_.size(), [&](std::size_t pos) {
    const long i = emb.indices_[pos];
    emb.scales_[pos] = sine::make_threshold_embedding(
        par.p, q, par.s, kprime, ps.dim(),
        derive_seed(seed, 5000 + static_cast<std::uint64_t>(i - par.imin)));
  });

  emb.m_ = 1.0;
  if (calibrate) {
    const auto pairs = sample_pairs(ps.size(), 256, derive_seed(seed, 4242));
    emb.m_ = calibrate_m(emb, ps, pairs);
  }
  return emb;
}

void SnowflakeEmbedding::set_normalization(double m) {
  if (!(m > 0.0)) throw param_error("snowflake: normalization must be positive");
  m_ = m;
}

void SnowflakeEmbedding::accumulate(const double* x, std::size_t dim,
                                    std::vector<double>& out) const {
  if (dim == 0) throw param_error("snowflake: empty input");
  std::vector<double> scaled(dim);
  std::vector<double> img(params_.kprime);
  out.assign(out_dim(), 0.0);
  const std::size_t groups2 = groups();
  for (std::size_t pos = 0; pos < scales_.size(); ++pos) {
    for (std::size_t d = 0; d < dim; ++d)
      scaled[d] = x[d] * rescale_ * in_scale_[pos];
    scales_[pos].embed_point(scaled.data(), dim, img.data());
    const long i = indices_[pos];
    const std::size_t block =
        static_cast<std::size_t>(((i % static_cast<long>(groups2)) + groups2) %
                                 groups2);
    double* dst = out.data() + block * params_.kprime;
    for (std::size_t c = 0; c < params_.kprime; ++c)
      dst[c] += out_coef_[pos] * img[c];
  }
}

std::vector<double> SnowflakeEmbedding::embed_raw(const double* x,
                                                  std::size_t dim) const {
  std::vector<double> out;
  accumulate(x, dim, out);
  return out;
}

std::vector<double> SnowflakeEmbedding::embed(const double* x, std::size_t dim) const {
  std::vector<double> out;
  accumulate(x, dim, out);
  const double scale = std::pow(m_, -1.0 / params_.q);
  for (double& v : out) v *= scale;
  return out;
}

std::vector<double> SnowflakeEmbedding::embed(const std::vector<double>& x) const {
  return embed(x.data(), x.size());
}

double SnowflakeEmbedding::scale_contribution(const double* x, const double* y,
                                              std::size_t dim,
                                              std::size_t scale_pos) const {
  std::vector<double> sx(dim), sy(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    sx[d] = x[d] * rescale_ * in_scale_[scale_pos];
    sy[d] = y[d] * rescale_ * in_scale_[scale_pos];
  }
  std::vector<double> ix(params_.kprime), iy(params_.kprime);
  scales_[scale_pos].embed_point(sx.data(), dim, ix.data());
  scales_[scale_pos].embed_point(sy.data(), dim, iy.data());
  double acc = 0.0;
  for (std::size_t c = 0; c < params_.kprime; ++c)
    acc += std::pow(std::fabs(ix[c] - iy[c]), params_.q);
  return out_coef_[scale_pos] * std::pow(acc, 1.0 / params_.q);
}

double calibrate_m(const SnowflakeEmbedding& emb, const PointSet& ps,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (pairs.size() < 32)
    throw param_error("calibrate_m: need at least 32 calibration pairs");
  double tmin = std::numeric_limits<double>::infinity(), tmax = 0.0;
  std::vector<double> ratios;
  ratios.reserve(pairs.size());
  const double aq = emb.params().alpha * emb.params().q;
  for (auto [i, j] : pairs) {
    const double t = ps.dist(i, j);
    if (!(t > 0.0)) continue;
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
    const auto ri = emb.embed_raw(ps.point(i), ps.dim());
    const auto rj = emb.embed_raw(ps.point(j), ps.dim());
    double acc = 0.0;
    for (std::size_t c = 0; c < ri.size(); ++c)
      acc += std::pow(std::fabs(ri[c] - rj[c]), emb.params().q);
    ratios.push_back(acc / std::pow(t, aq));
  }
  if (ratios.empty() || tmax / tmin < 10.0)
    throw param_error(
        "calibrate_m: calibration pairs span less than one distance decade; M "
        "would be scale-biased");
  if (tmax / tmin < 1000.0)
    std::cerr << "warning: calibration pairs span under three distance decades\n";
  std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
  return ratios[ratios.size() / 2];
}

}  // namespace lpembed::snow
