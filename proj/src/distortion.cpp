/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/distortion.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>

#include "lpembed/common.hpp"

#include "json.hpp"

namespace lpembed::bench {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> choose_pairs(
    std::size_t n, std::size_t budget, std::uint64_t seed) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const std::size_t all = n * (n - 1) / 2;
  if (all <= budget) {
    pairs.reserve(all);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
  }
  std::mt19937_64 engine(derive_seed(seed, 97));
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  while (seen.size() < budget) {
    std::uint32_t i = static_cast<std::uint32_t>(engine() % n);
    std::uint32_t j = static_cast<std::uint32_t>(engine() % n);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    seen.emplace(i, j);
  }
  pairs.assign(seen.begin(), seen.end());
  return pairs;
}

BandSummary summarize(const std::string& name, std::vector<double> ratios,
                      double eps_band) {
  BandSummary s;
  s.name = name;
  s.count = ratios.size();
  if (ratios.empty()) return s;
  std::sort(ratios.begin(), ratios.end());
  auto quant = [&](double f) {
    const double pos = f * (ratios.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, ratios.size() - 1);
    return ratios[lo] + (pos - lo) * (ratios[hi] - ratios[lo]);
  };
  s.q05 = quant(0.05);
  s.q25 = quant(0.25);
  s.q50 = quant(0.50);
  s.q75 = quant(0.75);
  s.q95 = quant(0.95);
  std::size_t within = 0;
  for (double r : ratios)
    if (std::fabs(r - 1.0) <= eps_band) ++within;
  s.within = static_cast<double>(within) / static_cast<double>(ratios.size());
  return s;
}

}  // namespace

DistortionReport distortion_report(const PointSet& ps, const PointMap& f,
                                   const Reference& ref,
                                   const DistortionOptions& options,
                                   std::map<std::string, std::string> params) {
  const auto t0 = std::chrono::steady_clock::now();
  DistortionReport rep;
  rep.options = options;
  rep.params = std::move(params);
  rep.params["pair_budget"] = std::to_string(options.pair_budget);
  rep.params["pair_seed"] = std::to_string(options.seed);
  rep.params["eps_band"] = fmt(options.eps_band);

  const auto pairs = choose_pairs(ps.size(), options.pair_budget, options.seed);

  // Images once per point that participates in a pair.
  std::vector<char> needed(ps.size(), 0);
  for (auto [i, j] : pairs) needed[i] = needed[j] = 1;
  std::vector<std::vector<double>> image(ps.size());
  parallel_for(ps.size(), [&](std::size_t i) {
    if (needed[i]) image[i] = f(ps.point(i), ps.dim());
  });

  rep.records.resize(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    PairRecord r;
    r.i = i;
    r.j = j;
    r.t = ps.dist(i, j);
    r.ref = ref(r.t);
    r.emb = lp_distance(image[i].data(), image[j].data(), image[i].size(),
                        options.q);
    r.ratio = r.ref > 0.0 ? r.emb / r.ref : 0.0;
    if (r.t < options.range_lo)
      r.band = 0;
    else if (options.range_hi > 0.0 && r.t > options.range_hi)
      r.band = 2;
    rep.records[idx] = r;
  });
  // choose_pairs already yields (i, j) sorted; keep the guarantee explicit.
  std::sort(rep.records.begin(), rep.records.end(),
            [](const PairRecord& a, const PairRecord& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });

  std::vector<double> all, below, inside, above;
  for (const auto& r : rep.records) {
    all.push_back(r.ratio);
    if (r.band == 0)
      below.push_back(r.ratio);
    else if (r.band == 2)
      above.push_back(r.ratio);
    else
      inside.push_back(r.ratio);
  }
  rep.bands.push_back(summarize("all", std::move(all), options.eps_band));
  if (!below.empty())
    rep.bands.push_back(summarize("below", std::move(below), options.eps_band));
  if (!inside.empty())
    rep.bands.push_back(summarize("in", std::move(inside), options.eps_band));
  if (!above.empty())
    rep.bands.push_back(summarize("above", std::move(above), options.eps_band));

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

void DistortionReport::write_csv(std::ostream& out) const {
  for (const auto& [k, v] : params) out << "# " << k << "=" << v << "\n";
  out << "i,j,t,ref,emb,ratio,band\n";
  static const char* kBand[] = {"below", "in", "above"};
  for (const auto& r : records)
    out << r.i << ',' << r.j << ',' << fmt(r.t) << ',' << fmt(r.ref) << ','
        << fmt(r.emb) << ',' << fmt(r.ratio) << ',' << kBand[r.band] << "\n";
}

std::string DistortionReport::summary_json() const {
  nlohmann::json j;
  for (const auto& [k, v] : params) j["params"][k] = v;
  for (const auto& b : bands) {
    nlohmann::json jb;
    jb["count"] = b.count;
    jb["q05"] = b.q05;
    jb["q25"] = b.q25;
    jb["q50"] = b.q50;
    jb["q75"] = b.q75;
    jb["q95"] = b.q95;
    jb["within_band"] = b.within;
    j["bands"][b.name] = jb;
  }
  j["pairs"] = records.size();
  return j.dump(2);
}

void DistortionReport::write_summary(std::ostream& out) const {
  out << "pairs evaluated: " << records.size() << "\n";
  for (const auto& b : bands) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "  band %-6s n=%-8zu ratio q05=%.4f q50=%.4f q95=%.4f "
                  "within(1±%.2f)=%.1f%%\n",
                  b.name.c_str(), b.count, b.q05, b.q50, b.q95,
                  options.eps_band, 100.0 * b.within);
    out << line;
  }
  out << "elapsed: " << elapsed_seconds << " s\n";
}

}  // namespace lpembed::bench
