/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/metric_tools.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <random>

#include "lpembed/common.hpp"
#include "lpembed/sine_embedding.hpp"

namespace lpembed::metric {

Net build_net(const PointSet& ps, const std::vector<std::size_t>& subset,
              double gamma) {
  if (!(gamma > 0.0)) throw param_error("build_net: need gamma > 0");
  Net net;
  net.gamma = gamma;
  for (std::size_t id : subset) {
    bool covered = false;
    for (std::size_t c : net.centers) {
      if (lp_distance(ps.point(id), ps.point(c), ps.dim(), ps.p()) < gamma) {
        covered = true;
        break;
      }
    }
    if (!covered) net.centers.push_back(id);
  }
  net.assign.resize(subset.size());
  for (std::size_t pos = 0; pos < subset.size(); ++pos) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = net.centers.front();
    for (std::size_t c : net.centers) {
      const double d =
          lp_distance(ps.point(subset[pos]), ps.point(c), ps.dim(), ps.p());
      if (d < best) {
        best = d;
        arg = c;
      }
    }
    net.assign[pos] = arg;
  }
  return net;
}

Net build_net(const PointSet& ps, double gamma) {
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build_net(ps, all, gamma);
}

Hierarchy build_hierarchy(const PointSet& ps) {
  if (ps.size() == 0) throw param_error("build_hierarchy: empty point set");
  Hierarchy h;
  h.min_dist = ps.size() > 1 ? ps.min_distance() : 1.0;
  if (h.min_dist <= 0.0) h.min_dist = 1.0;  // duplicate-only degenerate sets

  std::vector<std::size_t> level(ps.size());
  for (std::size_t i = 0; i < level.size(); ++i) level[i] = i;
  h.levels.push_back(level);
  h.scales.push_back(h.min_dist);  // bottom net is the set itself at scale 2^0

  int i = 1;
  while (h.levels.back().size() > 1) {
    const double gamma = std::ldexp(h.min_dist, i);  // 2^i * min_dist
    Net net = build_net(ps, h.levels.back(), gamma);
    // parent = closest covering net point of each member of the level below
    std::vector<std::size_t> parent_pos(h.levels.back().size());
    for (std::size_t j = 0; j < h.levels.back().size(); ++j) {
      const std::size_t assigned = net.assign[j];
      parent_pos[j] = std::find(net.centers.begin(), net.centers.end(), assigned) -
                      net.centers.begin();
    }
    h.parent.push_back(std::move(parent_pos));
    h.levels.push_back(net.centers);
    h.scales.push_back(gamma);
    ++i;
  }
  return h;
}

double estimate_doubling_dimension(const PointSet& ps) {
  if (ps.size() < 2) throw param_error("doubling estimate: need at least 2 points");
  const std::size_t n = ps.size();
  DistanceMatrix dm(ps);

  // Candidate radii: the distance set, thinned to at most 64 quantiles.
  std::vector<double> radii;
  radii.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dm(i, j) > 0.0) radii.push_back(dm(i, j));
  if (radii.empty()) return 0.0;
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  if (radii.size() > 64) {
    std::vector<double> thin;
    thin.reserve(64);
    for (std::size_t s = 0; s < 64; ++s)
      thin.push_back(radii[(radii.size() - 1) * s / 63]);
    thin.erase(std::unique(thin.begin(), thin.end()), thin.end());
    radii.swap(thin);
  }

  std::size_t lambda = 1;
  std::vector<std::size_t> ball;
  for (std::size_t center = 0; center < n; ++center) {
    for (double r : radii) {
      ball.clear();
      for (std::size_t j = 0; j < n; ++j)
        if (dm(center, j) <= r) ball.push_back(j);
      if (ball.size() <= lambda) continue;  // cover can never exceed ball size
      // Greedy half-radius cover of the ball.
      std::size_t count = 0;
      std::vector<char> covered(ball.size(), 0);
      for (std::size_t a = 0; a < ball.size(); ++a) {
        if (covered[a]) continue;
        ++count;
        for (std::size_t b = a; b < ball.size(); ++b)
          if (!covered[b] && dm(ball[a], ball[b]) <= r / 2.0) covered[b] = 1;
      }
      lambda = std::max(lambda, count);
    }
  }
  return std::log2(static_cast<double>(lambda));
}

double PaddedPartitionFamily::padding_radius() const {
  return delta / (c0 * std::max(ddim, 1.0));
}

double PaddedPartitionFamily::min_padding() const {
  double m = 1.0;
  for (double f : padding) m = std::min(m, f);
  return m;
}

namespace {

// One ball-carved partition: random order, radius uniform in [delta/4, delta/2].
std::vector<int> carve_partition(const DistanceMatrix& dm, double delta,
                                 std::mt19937_64& engine) {
  const std::size_t n = dm.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = engine() % i;
    std::swap(order[i - 1], order[j]);
  }
  const double r = delta / 4.0 * (1.0 + uniform53(engine()));
  std::vector<int> cluster(n, -1);
  int next = 0;
  for (std::size_t c : order) {
    bool used = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (cluster[x] < 0 && dm(c, x) <= r) {
        cluster[x] = next;
        used = true;
      }
    }
    if (used) ++next;
  }
  return cluster;
}

// Fraction of partitions in which B(x, rho) lies inside x's own cluster.
std::vector<double> measure_padding(const DistanceMatrix& dm,
                                    const std::vector<std::vector<int>>& parts,
                                    double rho) {
  const std::size_t n = dm.size();
  std::vector<double> padding(n, 0.0);
  for (const auto& cluster : parts) {
    for (std::size_t x = 0; x < n; ++x) {
      bool padded = true;
      for (std::size_t y = 0; y < n; ++y) {
        if (dm(x, y) <= rho && cluster[y] != cluster[x]) {
          padded = false;
          break;
        }
      }
      if (padded) padding[x] += 1.0;
    }
  }
  for (double& f : padding) f /= static_cast<double>(parts.size());
  return padding;
}

std::size_t family_size(double c0, double ddim, double eps) {
  const double d = std::max(ddim, 1.0);
  const double m = std::ceil(c0 * d * std::max(1.0, std::log2(std::max(d, 2.0))) / eps);
  if (m > 2000.0) {
    std::cerr << "warning: padded decomposition support clamped to 2000 partitions\n";
    return 2000;
  }
  return static_cast<std::size_t>(std::max(1.0, m));
}

}  // namespace

PaddedPartitionFamily padded_decomposition(const PointSet& ps, double delta,
                                           double eps, std::uint64_t seed,
                                           double c0) {
  if (!(delta > 0.0)) throw param_error("padded_decomposition: need delta > 0");
  if (!(eps > 0.0 && eps < 1.0))
    throw param_error("padded_decomposition: need eps in (0,1)");
  DistanceMatrix dm(ps);
  PaddedPartitionFamily fam;
  fam.delta = delta;
  fam.eps = eps;
  fam.c0 = c0;
  fam.ddim = ps.size() >= 2 ? std::max(1.0, estimate_doubling_dimension(ps)) : 1.0;

  for (int attempt = 0;; ++attempt) {
    if (fam.c0 > 64.0)
      throw guard_error("padded_decomposition: c0 escalation failed to reach padding");
    const std::size_t m = family_size(fam.c0, fam.ddim, eps);
    std::mt19937_64 engine(derive_seed(seed, 17 + attempt));
    fam.cluster_of.assign(m, {});
    for (std::size_t t = 0; t < m; ++t)
      fam.cluster_of[t] = carve_partition(dm, delta, engine);
    fam.padding = measure_padding(dm, fam.cluster_of, fam.padding_radius());
    if (fam.min_padding() >= 1.0 - eps) break;
    fam.c0 *= 1.5;
    ++fam.escalations;
  }
  return fam;
}

double IntrinsicEmbedding::image_distance(std::size_t i, std::size_t j) const {
  return lp_distance(image(i), image(j), out_dim, q);
}

IntrinsicEmbedding intrinsic_embedding(const PointSet& ps, double s, double q,
                                       double eps, std::size_t kprime,
                                       std::uint64_t seed) {
  if (!(s > 1.0)) throw param_error("intrinsic_embedding: need s > 1");
  if (!(eps > 0.0 && eps < 0.5))
    throw param_error("intrinsic_embedding: need eps in (0, 1/2)");
  if (!(q >= 1.0 && q <= ps.p()))
    throw param_error("intrinsic_embedding: need 1 <= q <= p");
  if (kprime < 1) throw param_error("intrinsic_embedding: need kprime >= 1");
  if (ps.size() < 2) throw param_error("intrinsic_embedding: need >= 2 points");

  IntrinsicEmbedding emb;
  emb.p = ps.p();
  emb.q = q;
  emb.s = s;
  emb.eps = eps;
  emb.seed = seed;
  emb.kprime = kprime;
  emb.n = ps.size();
  emb.ddim = std::max(1.0, estimate_doubling_dimension(ps));
  emb.sprime = s * emb.ddim / eps;
  emb.net_scale = eps / emb.ddim;

  DistanceMatrix dm(ps);
  const double fail_budget = eps / s;  // per-partition cross-cluster budget

  // Padding radius must equal s, so delta tracks the escalating c0.
  double c0 = 2.0;
  std::vector<std::vector<int>> parts;
  for (;; c0 *= 1.5, ++emb.escalations) {
    if (c0 > 64.0)
      throw guard_error("intrinsic_embedding: padded decomposition failed at radius s");
    const double delta = s * c0 * emb.ddim;
    const std::size_t m = family_size(c0, emb.ddim, fail_budget);
    std::mt19937_64 engine(derive_seed(seed, 29 + emb.escalations));
    parts.assign(m, {});
    for (std::size_t t = 0; t < m; ++t) parts[t] = carve_partition(dm, delta, engine);
    const auto padding = measure_padding(dm, parts, s);
    double worst = 1.0;
    for (double f : padding) worst = std::min(worst, f);
    if (worst >= 1.0 - fail_budget) break;
  }

  emb.partitions = parts.size();
  emb.out_dim = emb.partitions * kprime;
  emb.images.assign(emb.n * emb.out_dim, 0.0);

  const double up = emb.ddim / eps;           // net blow-up to unit separation
  const double down = emb.net_scale;          // image scale-back
  const double concat = std::pow(static_cast<double>(emb.partitions), -1.0 / q);

  // Partitions are independent given their derived sub-seeds and write
  // disjoint image columns, so this loop runs in parallel.
  parallel_for(emb.partitions, [&](std::size_t t) {
    std::vector<double> scaled(ps.dim());
    std::vector<double> img(kprime);
    const auto T = sine::make_threshold_embedding(
        emb.p, q, emb.sprime, kprime, ps.dim(), derive_seed(seed, 1000 + t));
    // Cluster memberships for this partition.
    int nclusters = 0;
    for (int c : parts[t]) nclusters = std::max(nclusters, c + 1);
    std::vector<std::vector<std::size_t>> members(nclusters);
    for (std::size_t x = 0; x < emb.n; ++x) members[parts[t][x]].push_back(x);

    for (const auto& cluster : members) {
      if (cluster.empty()) continue;
      const Net net = build_net(ps, cluster, emb.net_scale);
      // Embed each net point once.
      std::vector<std::vector<double>> net_img(net.centers.size());
      for (std::size_t c = 0; c < net.centers.size(); ++c) {
        const double* x = ps.point(net.centers[c]);
        for (std::size_t d = 0; d < ps.dim(); ++d) scaled[d] = up * x[d];
        T.embed_point(scaled.data(), scaled.size(), img.data());
        net_img[c].assign(img.begin(), img.end());
        for (double& v : net_img[c]) v *= down * concat;
      }
      // Every cluster member inherits its covering net point's image.
      for (std::size_t pos = 0; pos < cluster.size(); ++pos) {
        const std::size_t rep = net.assign[pos];
        const std::size_t c =
            std::find(net.centers.begin(), net.centers.end(), rep) -
            net.centers.begin();
        double* row = emb.images.data() + cluster[pos] * emb.out_dim + t * kprime;
        std::copy(net_img[c].begin(), net_img[c].end(), row);
      }
    }
  });
  return emb;
}

}  // namespace lpembed::metric
