/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 * Test-only helpers: independent statistics and quadrature oracles. Nothing
 * here may call back into the code paths it is used to check.
 */

#ifndef LPEMBED_TESTS_SUPPORT_HPP
#define LPEMBED_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace testsup {

/// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double F = cdf(sample[i]);
    ks = std::max(ks, std::fabs(F - static_cast<double>(i + 1) / n));
    ks = std::max(ks, std::fabs(F - static_cast<double>(i) / n));
  }
  return ks;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double ks = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    ks = std::max(ks, std::fabs(static_cast<double>(i) / a.size() -
                                static_cast<double>(j) / b.size()));
  }
  return ks;
}

/// Spearman rank correlation of two equal-length value sequences.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    for (std::size_t pos = 0; pos < n; ++pos) r[order[pos]] = static_cast<double>(pos);
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

/// Least-squares slope of y against x.
inline double regression_slope(const std::vector<double>& x,
                               const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

/// Independent oracle for H(a) = 2 int_0^inf |sin(au)|^q h(u) du: panel
/// quadrature against a pointwise density oracle with panels aligned to
/// multiples of pi/a on [0, 120], plus the leading-order tail
///   int_U^inf |sin(au)|^q h(u) du ~ C_p a^p int_{aU}^inf |sin w|^q w^{-p-1} dw
/// with the closed-form coefficient C_p = Gamma(p+1) sin(pi p / 2) / pi.
/// The `density` callable is supplied by the caller; nothing here touches the
/// series evaluation under test.
inline double h_oracle(double p, double q, double a,
                       const std::function<double(double)>& density) {
  using g15 = boost::math::quadrature::gauss<double, 15>;
  const double upto = 120.0;
  auto f = [&](double u) {
    return std::pow(std::fabs(std::sin(a * u)), q) * density(u);
  };
  double total = 0.0;
  double lo = 0.0;
  const double panel = M_PI / a;
  int k = 1;
  while (lo < upto) {
    const double hi = std::min(upto, k * panel);
    int sub = std::max(1, static_cast<int>(std::ceil(hi - lo)));
    sub = std::min(sub, 128);
    for (int s = 0; s < sub; ++s) {
      const double l2 = lo + (hi - lo) * s / sub;
      const double h2 = lo + (hi - lo) * (s + 1) / sub;
      total += g15::integrate(f, l2, h2);
    }
    lo = hi;
    ++k;
  }

  double tail = 0.0;
  if (p < 2.0) {
    const double cp = std::tgamma(p + 1.0) * std::sin(M_PI * p / 2.0) / M_PI;
    // T = int_{w0}^inf |sin w|^q w^{-p-1} dw, piecewise to w = 500 then the
    // per-period mean of |sin|^q times the remaining polynomial mass.
    auto g = [&](double w) {
      return std::pow(std::fabs(std::sin(w)), q) * std::pow(w, -p - 1.0);
    };
    const double w0 = a * upto;
    double T = 0.0;
    double wl = w0;
    while (wl < 500.0) {
      const double wh = std::min(wl + 0.5, 500.0);
      T += g15::integrate(g, wl, wh);
      wl = wh;
    }
    double pbar = 0.0;
    const int grid = 2000;
    for (int i = 0; i < grid; ++i)
      pbar += std::pow(std::fabs(std::sin(M_PI * (i + 0.5) / grid)), q);
    pbar /= grid;
    T += pbar * std::pow(500.0, -p) / p;
    tail = cp * std::pow(a, p) * T;
  }
  return 2.0 * (total + tail);
}

}  // namespace testsup

#endif  // LPEMBED_TESTS_SUPPORT_HPP
