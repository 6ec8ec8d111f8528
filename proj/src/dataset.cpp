/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/dataset.hpp"

#include <cmath>
#include <random>

#include "lpembed/common.hpp"

namespace lpembed::data {

DatasetKind parse_kind(const std::string& name) {
  if (name == "gaussian") return DatasetKind::gaussian;
  if (name == "grid") return DatasetKind::grid;
  if (name == "clustered") return DatasetKind::clustered;
  if (name == "low-doubling-curve") return DatasetKind::low_doubling_curve;
  throw param_error("unknown dataset kind: " + name);
}

std::string to_string(DatasetKind k) {
  switch (k) {
    case DatasetKind::gaussian: return "gaussian";
    case DatasetKind::grid: return "grid";
    case DatasetKind::clustered: return "clustered";
    default: return "low-doubling-curve";
  }
}

namespace {

double next_normal(std::mt19937_64& engine) {
  // Box-Muller on raw 53-bit uniforms keeps generation platform-stable.
  double u1 = uniform53(engine());
  double u2 = uniform53(engine());
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
}

PointSet make_gaussian(const DatasetSpec& spec) {
  PointSet ps(spec.n, spec.m, spec.p);
  std::mt19937_64 engine(derive_seed(spec.seed, 1));
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t d = 0; d < spec.m; ++d) ps.point(i)[d] = next_normal(engine);
  return ps;
}

PointSet make_grid(const DatasetSpec& spec) {
  PointSet ps(spec.n, spec.m, spec.p);
  const std::size_t side = static_cast<std::size_t>(
      std::ceil(std::pow(static_cast<double>(spec.n), 1.0 / spec.m)));
  for (std::size_t i = 0; i < spec.n; ++i) {
    std::size_t rest = i;
    for (std::size_t d = 0; d < spec.m; ++d) {
      ps.point(i)[d] = static_cast<double>(rest % side);
      rest /= side;
    }
  }
  return ps;
}

// Mean |u - v|^p for u, v uniform on [0, w] is w^p * 2 / ((p+1)(p+2)); in m
// dimensions the l_p distance between two uniform-cube points concentrates at
// w * (2m / ((p+1)(p+2)))^{1/p}, which calibrates the cluster-center spread.
double uniform_pair_distance(double w, std::size_t m, double p) {
  return w * std::pow(2.0 * static_cast<double>(m) / ((p + 1.0) * (p + 2.0)),
                      1.0 / p);
}

PointSet make_clustered(const DatasetSpec& spec) {
  if (!(spec.range_hi > spec.range_lo && spec.range_lo > 0.0))
    throw param_error("clustered dataset: need 0 < range_lo < range_hi");
  const std::size_t c = std::max<std::size_t>(2, spec.clusters);
  const double mid = 0.5 * (spec.range_lo + spec.range_hi);
  const double unit = uniform_pair_distance(1.0, spec.m, spec.p);
  const double w = mid / unit;                       // center spread
  const double jit = 0.3 * spec.range_lo / unit / 2.0;  // intra well below lo

  std::mt19937_64 engine(derive_seed(spec.seed, 2));
  std::vector<double> centers(c * spec.m);
  for (auto& x : centers) x = w * uniform53(engine());

  PointSet ps(spec.n, spec.m, spec.p);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::size_t cl = i % c;
    for (std::size_t d = 0; d < spec.m; ++d)
      ps.point(i)[d] =
          centers[cl * spec.m + d] + jit * (2.0 * uniform53(engine()) - 1.0);
  }
  return ps;
}

// Coordinate-monotone staircase through m dimensions: every coordinate is a
// nondecreasing function of the curve parameter, so l_1 distances equal
// parameter gaps exactly. Parameters follow a 5 x 5 x rest ladder with
// geometrically separated level spacings, giving three distance decades and
// a low doubling estimate.
PointSet make_curve(const DatasetSpec& spec) {
  if (!(spec.range_hi > spec.range_lo && spec.range_lo > 0.0))
    throw param_error("curve dataset: need 0 < range_lo < range_hi");
  const double l0 = spec.range_lo;
  const double l2 = std::max(spec.range_hi / 4.0, 64.0 * l0);
  const double l1 = std::max(std::sqrt(l0 * l2), 8.0 * l0);

  std::vector<double> params(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i)
    params[i] = static_cast<double>(i % 5) * l0 +
                static_cast<double>((i / 5) % 5) * l1 +
                static_cast<double>(i / 25) * l2;

  const double seg = l1;  // axis switches once per seg units of arc length
  std::mt19937_64 engine(derive_seed(spec.seed, 3));
  const double total = params.back();
  const std::size_t nseg = static_cast<std::size_t>(total / seg) + 2;
  std::vector<std::size_t> axis(nseg);
  for (auto& a : axis) a = engine() % spec.m;

  PointSet ps(spec.n, spec.m, spec.p);
  for (std::size_t i = 0; i < spec.n; ++i) {
    double* x = ps.point(i);
    const double u = params[i];
    const std::size_t full = static_cast<std::size_t>(u / seg);
    for (std::size_t s = 0; s < full; ++s) x[axis[s]] += seg;
    x[axis[full]] += u - static_cast<double>(full) * seg;
  }
  return ps;
}

}  // namespace

PointSet generate_dataset(const DatasetSpec& spec) {
  if (spec.n < 2 || spec.m < 1)
    throw param_error("dataset: need n >= 2 and m >= 1");
  switch (spec.kind) {
    case DatasetKind::gaussian: return make_gaussian(spec);
    case DatasetKind::grid: return make_grid(spec);
    case DatasetKind::clustered: return make_clustered(spec);
    case DatasetKind::low_doubling_curve: return make_curve(spec);
  }
  throw param_error("dataset: unknown kind");
}

}  // namespace lpembed::data
