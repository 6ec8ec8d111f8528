/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <random>

#include "lpembed/common.hpp"
#include "lpembed/point_set.hpp"
#include "lpembed/range_embedding.hpp"
#include "lpembed/sine_embedding.hpp"
#include "lpembed/stable.hpp"

using namespace lpembed;
using namespace lpembed::sine;

namespace {

std::vector<double> random_vector(std::size_t m, std::mt19937_64& g, double scale = 1.0) {
  std::vector<double> v(m);
  for (auto& x : v) x = scale * (2.0 * uniform53(g()) - 1.0);
  return v;
}

double norm_q_pow(const std::vector<double>& a, const std::vector<double>& b, double q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += std::pow(std::fabs(a[i] - b[i]), q);
  return acc;
}

}  // namespace

TEST_CASE("coordinate embedding: zero vector, bound, dimension mismatch") {
  const auto emb = make_threshold_embedding(2.0, 1.0, 10.0, 4, 6, 99);
  const auto c = emb.coordinate(2);
  std::vector<double> zero(6, 0.0);
  CHECK(embed_coordinate(c, zero.data(), 6) ==
        doctest::Approx(c.amplitude * std::sin(c.phase)).epsilon(1e-14));

  std::mt19937_64 g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = random_vector(6, g, std::pow(10.0, trial % 7));
    CHECK(std::fabs(embed_coordinate(c, v.data(), 6)) <= c.amplitude + 1e-12);
  }
  CHECK_THROWS_AS(embed_coordinate(c, zero.data(), 5), param_error);
}

TEST_CASE("coordinate embedding: pair-difference identity") {
  // |F(v)-F(w)|^q = (s^q/P_q) |sin((1/s)<g,d>) cos(phi + (1/s)<g,v+w>)|^q
  const double p = 1.5, q = 1.2, s = 8.0;
  const auto emb = make_threshold_embedding(p, q, s, 3, 10, 123);
  const double pq = emb.cosine_moment_q();
  std::mt19937_64 g(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = emb.coordinate(trial % 3);
    const auto v = random_vector(10, g, 2.0);
    const auto w = random_vector(10, g, 2.0);
    const double lhs =
        std::pow(std::fabs(embed_coordinate(c, v.data(), 10) -
                           embed_coordinate(c, w.data(), 10)),
                 q);
    double dot_d = 0.0, dot_s = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      dot_d += c.row[i] * (v[i] - w[i]);
      dot_s += c.row[i] * (v[i] + w[i]);
    }
    const double rhs = std::pow(s, q) / pq *
                       std::pow(std::fabs(std::sin(dot_d / s) *
                                          std::cos(c.phase + dot_s / s)),
                                q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("coordinate embedding: phase 2pi periodicity") {
  auto emb = make_threshold_embedding(1.3, 1.1, 5.0, 1, 4, 7);
  auto c = emb.coordinate(0);
  auto shifted = c;
  shifted.phase += 2.0 * 3.14159265358979323846;
  std::mt19937_64 g(3);
  const auto v = random_vector(4, g);
  CHECK(embed_coordinate(c, v.data(), 4) ==
        doctest::Approx(embed_coordinate(shifted, v.data(), 4)).epsilon(1e-12));
}

TEST_CASE("threshold embedding: determinism and seed independence") {
  const auto a = make_threshold_embedding(1.5, 1.2, 10.0, 16, 8, 42);
  const auto b = make_threshold_embedding(1.5, 1.2, 10.0, 16, 8, 42);
  const auto c = make_threshold_embedding(1.5, 1.2, 10.0, 16, 8, 43);
  std::mt19937_64 g(1);
  const auto v = random_vector(8, g);
  CHECK(a.embed_point(v) == b.embed_point(v));

  // Different seeds should give essentially disjoint stable matrices.
  std::size_t differing = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    const auto ra = a.coordinate(i).row;
    const auto rc = c.coordinate(i).row;
    for (std::size_t j = 0; j < 8; ++j)
      if (ra[j] != rc[j]) ++differing;
  }
  CHECK(differing >= 127);  // >= 99% of 128 entries
}

TEST_CASE("threshold embedding: parameter domain") {
  CHECK_THROWS_AS(make_threshold_embedding(2.0, 1.0, 0.5, 4, 4, 0), param_error);
  CHECK_THROWS_AS(make_threshold_embedding(2.0, 2.5, 10.0, 4, 4, 0), param_error);
  CHECK_THROWS_AS(make_threshold_embedding(0.5, 0.5, 10.0, 4, 4, 0), param_error);
  CHECK_THROWS_AS(make_threshold_embedding(2.0, 1.0, 10.0, 0, 4, 0), param_error);
  const auto e = make_threshold_embedding(2.0, 1.0, 10.0, 4, 4, 0);
  std::vector<double> bad(3, 0.0), out(4);
  CHECK_THROWS_AS(e.embed_point(bad.data(), 3, out.data()), param_error);
}

TEST_CASE("embed_point: self-distance and obliviousness") {
  const auto e = make_threshold_embedding(1.5, 1.0, 6.0, 8, 5, 2024);
  std::mt19937_64 g(8);
  const auto v = random_vector(5, g);
  CHECK(norm_q_pow(e.embed_point(v), e.embed_point(v), 1.0) == 0.0);

  // Embedding points one at a time, in any order, or as disjoint batches with
  // the same frozen embedding gives identical images.
  const auto w = random_vector(5, g);
  const auto img_v1 = e.embed_point(v);
  const auto img_w1 = e.embed_point(w);
  const auto img_w2 = e.embed_point(w);
  const auto img_v2 = e.embed_point(v);
  CHECK(img_v1 == img_v2);
  CHECK(img_w1 == img_w2);
}

TEST_CASE("embed_point mean matches s^q H(t/s)") {
  const double p = 2.0, q = 1.0, s = 20.0;
  const std::size_t m = 16, k = 32, trials = 100;
  for (double t : {1.0, 5.0, 20.0}) {
    std::vector<double> v(m, 0.0), w(m, 0.0);
    w[0] = t;  // ||v - w||_2 = t
    double acc = 0.0;
    for (std::size_t seed = 0; seed < trials; ++seed) {
      const auto e = make_threshold_embedding(p, q, s, k, m, 9000 + seed);
      acc += norm_q_pow(e.embed_point(v), e.embed_point(w), q);
    }
    const double want = expected_transform(p, q, s, t);
    CHECK(acc / trials == doctest::Approx(want).epsilon(0.05));
  }
}

TEST_CASE("deterministic cap s^q / P_q") {
  const double p = 1.5, q = 1.2, s = 7.0;
  const auto e = make_threshold_embedding(p, q, s, 16, 8, 31337);
  const double cap = std::pow(s, q) / e.cosine_moment_q();
  std::mt19937_64 g(4);
  for (int trial = 0; trial < 2000; ++trial) {
    // Mix moderate and wildly scaled inputs; the bound is structural.
    const double scale = std::pow(10.0, trial % 9 - 2);
    const auto v = random_vector(8, g, scale);
    const auto w = random_vector(8, g, scale);
    CHECK(norm_q_pow(e.embed_point(v), e.embed_point(w), q) <= cap + 1e-9);
  }
}

TEST_CASE("expected transform: values and monotonicity") {
  CHECK(expected_transform(2, 2, 10, 0) == 0.0);
  CHECK(expected_transform(2, 2, 10, 10) ==
        doctest::Approx(100.0 * (1.0 - std::exp(-4.0)) / 2.0).epsilon(1e-10));
  double prev = 0.0;
  for (double t = 0.0; t <= 10.0; t += 0.5) {
    const double cur = expected_transform(1.5, 1.2, 10.0, t);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("bi-Lipschitz concentration on random point sets") {
  // Pairs with 1 <= t <= s should concentrate around s^q H(t/s) at the
  // dimension the hoeffding calculator prescribes; small-scale pairs stay
  // below s^q H(1/s) + eps. Counted over seeds, >= 90% of trials must hold.
  const double p = 2.0, q = 1.0, s = 20.0, eps = 0.3;
  const std::size_t n = 24, m = 12;
  const std::size_t k = range::required_dimension(64, eps, s, p, q,
                                                  range::DimMethod::min_of, 0.0125);

  std::size_t good_mid = 0, good_small = 0, trials = 10;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 g(500 + trial);
    std::vector<std::vector<double>> pts(n);
    for (auto& v : pts) v = random_vector(m, g, 2.2);  // pair distances ~ [1, 8]
    const auto e = make_threshold_embedding(p, q, s, k, m, 7000 + trial);
    std::vector<std::vector<double>> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = e.embed_point(pts[i]);

    bool ok_mid = true, ok_small = true;
    const double small_cap = expected_transform(p, q, s, 1.0) + eps;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double t = lp_distance(pts[i].data(), pts[j].data(), m, p);
        const double got = norm_q_pow(img[i], img[j], q);
        if (t >= 1.0 && t <= s) {
          const double want = expected_transform(p, q, s, t);
          if (got < (1 - eps) * want || got > (1 + eps) * want) ok_mid = false;
        } else if (t < 1.0) {
          if (got > small_cap) ok_small = false;
        }
      }
    good_mid += ok_mid;
    good_small += ok_small;
  }
  CHECK(good_mid >= 9);
  CHECK(good_small >= 9);
}

TEST_CASE("embed_point cost scales linearly in k") {
  // Timed check with generous slack: doubling k should not blow past the
  // linear trend by more than 2x.
  const std::size_t m = 64;
  std::mt19937_64 g(12);
  const auto v = random_vector(m, g);
  auto time_k = [&](std::size_t k) {
    const auto e = make_threshold_embedding(1.5, 1.2, 10.0, k, m, 1);
    std::vector<double> out(k);
    double best = 1e100;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      for (int it = 0; it < 20; ++it) e.embed_point(v.data(), m, out.data());
      best = std::min(
          best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count());
    }
    return best;
  };
  const double t100 = time_k(100);
  const double t400 = time_k(400);
  CHECK(t400 / t100 < 8.0);
}
