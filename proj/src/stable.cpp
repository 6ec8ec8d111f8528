/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/stable.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "lpembed/common.hpp"

namespace lpembed::stable {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_p(double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw param_error("stability index p must lie in [1,2]");
}

// Integrand e^{-t^p} is below 1e-13 past this point.
double exp_cutoff(double p) { return std::pow(30.0, 1.0 / p); }

using gauss15 = boost::math::quadrature::gauss<double, 15>;
using gk15 = boost::math::quadrature::gauss_kronrod<double, 15>;

}  // namespace

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

StableSampler::StableSampler(double p, std::uint64_t seed)
    : p_(p), seed_(seed), engine_(seed) {
  check_p(p);
}

double StableSampler::draw() {
  // CMS transform, symmetric case: V uniform on (-pi/2, pi/2), W ~ Exp(1).
  double u1 = uniform53(engine_());
  double u2 = uniform53(engine_());
  if (u1 < 1e-15) u1 = 1e-15;  // keep V off the cosine pole
  const double v = kPi * (u1 - 0.5);
  const double w = -std::log1p(-u2);  // u2 in [0,1) => w >= 0
  ++position_;
  if (p_ == 1.0) return std::tan(v);
  const double a = p_;
  const double x = std::sin(a * v) / std::pow(std::cos(v), 1.0 / a) *
                   std::pow(std::cos((1.0 - a) * v) / w, (1.0 - a) / a);
  return x;
}

std::vector<double> StableSampler::sample(std::size_t count) {
  if (count < 1) throw param_error("sample: count must be >= 1");
  std::vector<double> out(count);
  for (auto& x : out) x = draw();
  return out;
}

// ---------------------------------------------------------------------------
// Density
// ---------------------------------------------------------------------------

double density_tail(double p, double x) {
  check_p(p);
  const double ax = std::fabs(x);
  if (ax <= 0.0) throw param_error("density_tail: x must be nonzero");
  if (p == 2.0) return 0.0;  // Gaussian tail has no polynomial part
  double acc = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double logfact = 0.0;  // log j!
  for (int j = 1; j <= 12; ++j) {
    logfact += std::log(static_cast<double>(j));
    const double mag = std::exp(std::lgamma(p * j + 1.0) - logfact -
                                (p * j + 1.0) * std::log(ax));
    if (mag >= prev) break;  // asymptotic series: stop at the smallest term
    const double term = ((j % 2) ? 1.0 : -1.0) * mag * std::sin(j * kPi * p / 2.0);
    acc += term;
    prev = mag;
    if (mag < 1e-18) break;
  }
  return std::max(0.0, acc / kPi);
}

double density(double p, double x) {
  check_p(p);
  if (!std::isfinite(x)) throw param_error("density: x must be finite");
  const double ax = std::fabs(x);
  if (ax > 1e3) return density_tail(p, ax);

  const double cutoff = exp_cutoff(p);
  auto f = [p, ax](double t) { return std::cos(t * ax) * std::exp(-std::pow(t, p)); };

  const double first_zero = (ax > 0.0) ? kPi / (2.0 * ax)
                                       : std::numeric_limits<double>::infinity();
  if (first_zero >= cutoff) {
    // No sign change before the integrand dies: one adaptive pass suffices.
    return gk15::integrate(f, 0.0, cutoff, 10, 1e-12) / kPi;
  }

  // One panel per half-period of cos(tx); each is smooth and the gauss rule
  // resolves it to machine accuracy.
  KahanSum acc;
  double lo = 0.0;
  for (int k = 0;; ++k) {
    double hi = (k + 0.5) * kPi / ax;
    bool last = hi >= cutoff;
    if (last) hi = cutoff;
    acc.add(gauss15::integrate(f, lo, hi));
    if (last) break;
    lo = hi;
  }
  return acc.value() / kPi;
}

// ---------------------------------------------------------------------------
// Moment integrals
// ---------------------------------------------------------------------------

namespace {

// Boundary between direct quadrature of h and its tail expansion.
constexpr double kAsymFrom = 15.0;

// int_lo^hi u^power h(u) du with both endpoints in the expansion region
// (lo >= kAsymFrom); hi may be +inf when power < p.
double moment_tail_piece(double p, double power, double lo, double hi) {
  double acc = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double logfact = 0.0;
  for (int j = 1; j <= 12; ++j) {
    logfact += std::log(static_cast<double>(j));
    const double expo = power - p * j;  // integrand term ~ u^{expo - 1}
    double piece;
    if (std::isinf(hi)) {
      if (expo >= 0.0) throw param_error("moment integral diverges at infinity");
      piece = -std::pow(lo, expo) / expo;
    } else if (std::fabs(expo) < 1e-12) {
      piece = std::log(hi / lo);
    } else {
      piece = (std::pow(hi, expo) - std::pow(lo, expo)) / expo;
    }
    const double mag = std::exp(std::lgamma(p * j + 1.0) - logfact) * std::fabs(piece);
    if (mag >= prev) break;
    acc += ((j % 2) ? 1.0 : -1.0) * std::sin(j * kPi * p / 2.0) *
           std::exp(std::lgamma(p * j + 1.0) - logfact) * piece;
    prev = mag;
    if (mag < 1e-16 * (std::fabs(acc) + 1e-300)) break;
  }
  return acc / kPi;
}

}  // namespace

double moment_integral(double p, double power, double lo, double hi) {
  check_p(p);
  if (lo < 0.0 || hi < lo) throw param_error("moment_integral: bad interval");
  if (std::isinf(hi) && power >= p)
    throw param_error(
        "moment_integral: u^q h(u) has a heavy tail ~ u^{q-p-1}; the integral "
        "diverges for q >= p");
  double total = 0.0;
  const double qlo = std::min(hi, kAsymFrom);
  if (lo < qlo) {
    auto f = [p, power](double u) {
      return (u <= 0.0 && power > 0.0) ? 0.0 : std::pow(u, power) * density(p, u);
    };
    total += gk15::integrate(f, lo, qlo, 12, 1e-10);
  }
  if (hi > kAsymFrom) total += moment_tail_piece(p, power, std::max(lo, kAsymFrom), hi);
  return total;
}

double abs_moment(double p, double q) {
  check_p(p);
  if (!(q > 0.0)) throw param_error("abs_moment: q must be positive");
  if (q >= p)
    throw param_error(
        "abs_moment: E|g|^q diverges for q >= p (heavy tail h(u) ~ u^{-p-1})");
  return 2.0 * moment_integral(p, q, 0.0, std::numeric_limits<double>::infinity());
}

double moment_q(double p, double q) { return abs_moment(p, q); }

double moment_qa(double p, double a, double eps) {
  check_p(p);
  if (!(a > 0.0 && a < 1.0)) throw param_error("moment_qa: need 0 < a < 1");
  if (!(eps < 1.0 && eps > a * a))
    throw param_error("moment_qa: need a^2 < eps < 1");
  return 0.5 * moment_integral(p, p, 0.0, std::sqrt(eps) / a);
}

// ---------------------------------------------------------------------------
// Transform H and angle moments
// ---------------------------------------------------------------------------

double cosine_moment(double q) {
  if (!(q >= 1.0)) throw param_error("cosine_moment: q must be >= 1");
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double integral =
      integrator.integrate([q](double t) { return std::pow(std::cos(t), q); }, 0.0,
                           kPi / 2.0);
  return 2.0 / kPi * integral;
}

// H(a) = E|sin(ag)|^q via the cosine expansion of |sin|^q:
//   |sin x|^q = b_0 + sum_k b_k cos(2kx),   b_k = -beta_k < 0 for k >= 1,
// which against E[cos(tg)] = e^{-|t|^p} gives
//   H(a) = sum_k beta_k (1 - e^{-(2ka)^p}),   sum_k beta_k = b_0.
// Every term is positive, so the sum is cancellation-free; the truncated
// tail is b_0 - sum_{k<=K} beta_k up to a factor e^{-(2Ka)^p} <= 1e-13.
double transform_h(double p, double q, double a) {
  check_p(p);
  if (!(q >= 1.0 && q <= p)) throw param_error("transform_h: need 1 <= q <= p");
  if (!(a >= 0.0)) throw param_error("transform_h: need a >= 0");
  if (a == 0.0) return 0.0;

  const double b0 =
      std::pow(2.0, -q) * std::tgamma(q + 1.0) / std::pow(std::tgamma(q / 2.0 + 1.0), 2);

  if (a < 1e-6) {
    // Far below every scale of interest; the small-argument forms are exact
    // to well past the advertised tolerance here.
    if (q < p) return abs_moment(p, q) * std::pow(a, q);
    return 2.0 * std::pow(a, p) * moment_integral(p, p, 0.0, 1.0 / a);
  }

  const double kmax_f = std::ceil(std::pow(30.0, 1.0 / p) / (2.0 * a));
  const std::size_t kmax =
      static_cast<std::size_t>(std::max(8.0, std::min(kmax_f, 6.0e7)));

  double beta = std::pow(2.0, 1.0 - q) * std::tgamma(q + 1.0) /
                (std::tgamma(q / 2.0 + 2.0) * std::tgamma(q / 2.0));
  KahanSum sum_h;
  KahanSum sum_beta;
  const double two_a = 2.0 * a;
  for (std::size_t k = 1; k <= kmax; ++k) {
    const double t = two_a * static_cast<double>(k);
    double arg;
    if (p == 1.0)
      arg = t;
    else if (p == 2.0)
      arg = t * t;
    else
      arg = std::pow(t, p);
    sum_h.add(beta * (-std::expm1(-arg)));
    sum_beta.add(beta);
    beta *= (static_cast<double>(k) - q / 2.0) / (static_cast<double>(k) + 1.0 + q / 2.0);
    if (beta <= 0.0) break;  // q = 2 terminates exactly after k = 1
  }
  const double tail = std::max(0.0, b0 - sum_beta.value());
  return std::min(b0, sum_h.value() + tail);
}

EnvelopeFit fit_density_envelope(double p) {
  check_p(p);
  // For p = 2 the polynomial envelope only makes sense while the Gaussian
  // tail is still representable.
  const double xmax = (p >= 2.0) ? 8.0 : 100.0;
  EnvelopeFit fit;
  fit.lo = std::numeric_limits<double>::infinity();
  fit.hi = 0.0;
  const int steps = 48;
  for (int i = 0; i <= steps; ++i) {
    const double x = (i == 0) ? 0.0 : std::pow(10.0, -2.0 + (std::log10(xmax) + 2.0) * i / steps);
    const double r = density(p, x) * (1.0 + std::pow(x, p + 1.0));
    fit.lo = std::min(fit.lo, r);
    fit.hi = std::max(fit.hi, r);
  }
  return fit;
}

TransformConstants make_transform_constants(double p, double q) {
  check_p(p);
  if (!(q >= 1.0 && q <= p))
    throw param_error("transform constants: need 1 <= q <= p <= 2");
  TransformConstants tc;
  tc.p = p;
  tc.q = q;
  tc.pq = cosine_moment(q);
  tc.q_moment = (q < p) ? abs_moment(p, q) : std::numeric_limits<double>::infinity();
  tc.envelope = fit_density_envelope(p);
  return tc;
}

}  // namespace lpembed::stable
