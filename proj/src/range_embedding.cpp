/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/range_embedding.hpp"

#include <cmath>
#include <iostream>

#include "lpembed/common.hpp"
#include "lpembed/stable.hpp"

namespace lpembed::range {

namespace {
void check_domain(double p, double q, double R, double eps) {
  if (!(p >= 1.0 && p <= 2.0 && q >= 1.0 && q <= p))
    throw param_error("range embedding: need 1 <= q <= p <= 2");
  if (!(R > 1.0)) throw param_error("range embedding: need R > 1");
  if (!(eps > 0.0 && eps < 0.5)) throw param_error("range embedding: need eps in (0, 1/2)");
}
}  // namespace

DimMethod parse_dim_method(const std::string& name) {
  if (name == "hoeffding") return DimMethod::hoeffding;
  if (name == "bennett") return DimMethod::bennett;
  if (name == "min") return DimMethod::min_of;
  throw param_error("unknown dimension method: " + name);
}

std::string to_string(DimMethod m) {
  switch (m) {
    case DimMethod::hoeffding: return "hoeffding";
    case DimMethod::bennett: return "bennett";
    default: return "min";
  }
}

double select_threshold(double p, double q, double R, double eps) {
  check_domain(p, q, R, eps);
  double s;
  if (q < p) {
    s = R / std::sqrt(eps) *
        std::pow(1.0 + (p - q) * std::pow(eps, -(q / 2.0 + 1.0)), 1.0 / (p - q));
  } else {
    s = std::max(std::pow(R, 1.0 / eps),
                 R / std::sqrt(eps) * std::exp(std::pow(eps, -(q / 2.0 + 1.0))));
  }
  if (s > 1e12)
    std::cerr << "warning: threshold s = " << s
              << " exceeds 1e12; this (eps, q) regime is impractical, consider a "
                 "larger eps\n";
  return s;
}

std::size_t required_dimension(std::size_t n, double eps, double s, double p,
                               double q, DimMethod method, double c_dim) {
  if (n < 2) throw param_error("required_dimension: need n >= 2");
  if (!(eps > 0.0 && eps < 0.5))
    throw param_error("required_dimension: need eps in (0, 1/2)");
  if (!(s > 1.0)) throw param_error("required_dimension: need s > 1");
  if (!(c_dim > 0.0)) throw param_error("required_dimension: need c_dim > 0");

  const double hoeffding = std::pow(s, 2.0 * q);
  double bracket;
  const bool bennett_ok = 2.0 * q > p;
  switch (method) {
    case DimMethod::hoeffding:
      bracket = hoeffding;
      break;
    case DimMethod::bennett:
      if (!bennett_ok)
        throw param_error(
            "required_dimension: the bennett branch needs 2q > p; use hoeffding");
      bracket = std::max(std::pow(s, 2.0 * q - p) / (2.0 * q - p),
                         eps * std::pow(s, q));
      break;
    default:
      bracket = hoeffding;
      if (bennett_ok)
        bracket = std::min(bracket, std::max(std::pow(s, 2.0 * q - p) / (2.0 * q - p),
                                             eps * std::pow(s, q)));
  }
  const double k = std::ceil(c_dim * std::log(static_cast<double>(n)) /
                             (eps * eps) * bracket);
  if (!(k >= 1.0)) return 1;
  if (k > 5e8) throw guard_error("required_dimension: k exceeds 5e8, instance impractical");
  return static_cast<std::size_t>(k);
}

RangeEmbedding make_range_embedding(const RangeParams& params, std::size_t m,
                                    std::uint64_t seed) {
  check_domain(params.p, params.q, params.R, params.eps);
  RangeEmbedding e;
  e.params_ = params;
  e.s_ = select_threshold(params.p, params.q, params.R, params.eps);
  const std::size_t k = required_dimension(params.n, params.eps, e.s_, params.p,
                                           params.q, params.method, params.c_dim);
  e.inner_ = sine::make_threshold_embedding(params.p, params.q, e.s_, k, m, seed);
  if (params.q < params.p) {
    e.out_scale_ = std::pow(stable::moment_q(params.p, params.q), -1.0 / params.q);
  } else {
    // At q = p the truncated-moment normalizer leaves a slowly varying
    // log-factor drift across [1, R] that does not vanish at practical eps.
    // Anchoring the scale on the transform curve at the geometric band
    // center sqrt(R) keeps the expected ratio centered at 1; it agrees with
    // the truncated-moment scale up to 1 + O(eps).
    const double mid = std::sqrt(params.R);
    const double curve = sine::expected_transform(params.p, params.q, e.s_, mid);
    e.out_scale_ = mid * std::pow(curve, -1.0 / params.q);
  }
  return e;
}

void RangeEmbedding::embed(const double* v, std::size_t dim, double* out) const {
  inner_.embed_point(v, dim, out);
  for (std::size_t i = 0; i < inner_.out_dim(); ++i) out[i] *= out_scale_;
}

std::vector<double> RangeEmbedding::embed(const std::vector<double>& v) const {
  std::vector<double> out(inner_.out_dim());
  embed(v.data(), v.size(), out.data());
  return out;
}

}  // namespace lpembed::range
