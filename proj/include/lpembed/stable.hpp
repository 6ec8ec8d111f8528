/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_STABLE_HPP
#define LPEMBED_STABLE_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace lpembed::stable {

// ---------------------------------------------------------------------------
// Symmetric p-stable machinery, 1 <= p <= 2, standard normalization: the
// characteristic function is exp(-|t|^p) throughout. Nothing in this module
// applies the E|g|^q = 1 normalization; embeddings and oracles share this one
// convention.
// ---------------------------------------------------------------------------

/// Reproducible stream of i.i.d. symmetric p-stable variates
/// (Chambers-Mallows-Stuck transform of a uniform angle and an exponential).
class StableSampler {
 public:
  StableSampler(double p, std::uint64_t seed);

  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

  /// One variate; advances the stream position by 1.
  double draw();

  /// count i.i.d. variates.
  std::vector<double> sample(std::size_t count);

 private:
  double p_;
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
};

/// Density h(x) of the standard symmetric p-stable law, evaluated by panel
/// quadrature of (1/pi) * int_0^inf cos(tx) e^{-t^p} dt with panels split at
/// the zeros of cos(tx). Absolute accuracy ~1e-10; beyond |x| > 1e3 the
/// polynomial tail expansion is returned instead.
double density(double p, double x);

/// Leading terms of the x -> inf expansion of the density. Exact for the
/// Cauchy case; identically zero for p = 2.
double density_tail(double p, double x);

/// E|g|^q = 2 int_0^inf u^q h(u) du for 0 < q < p (diverges at q = p).
double abs_moment(double p, double q);

/// int_lo^hi u^power h(u) du. Quadrature below u = 15, analytic tail terms
/// above; requires power < p when hi is infinite.
double moment_integral(double p, double power, double lo, double hi);

/// H(a) = E|sin(a g)|^q for the p-stable g, 1 <= q <= p <= 2, a >= 0.
/// Equals 2 int_0^inf |sin(au)|^q h(u) du; relative accuracy <= 1e-4
/// (in practice far better).
double transform_h(double p, double q, double a);

/// P_q = E|cos theta|^q over a uniform angle; lies in [1/2, 2/pi] for
/// 1 <= q <= 2.
double cosine_moment(double q);

/// Q = 2 int_0^inf u^q h(u) du (same as abs_moment; rejects q >= p).
double moment_q(double p, double q);

/// Q_a = (1/2) int_0^{sqrt(eps)/a} u^p h(u) du for 0 < a < 1, a^2 < eps < 1.
double moment_qa(double p, double a, double eps);

/// Fitted envelope constants (c, c') with
/// c/(1+x^{p+1}) <= h(x) <= c'/(1+x^{p+1}) over a log grid. Diagnostic only;
/// the grid stops early for p = 2 where the Gaussian tail underflows.
struct EnvelopeFit {
  double lo = 0.0;
  double hi = 0.0;
};
EnvelopeFit fit_density_envelope(double p);

/// Bundled constants for a (p, q) pair.
struct TransformConstants {
  double p = 2.0;
  double q = 2.0;
  double pq = 0.0;       // cosine moment P_q
  double q_moment = 0.0; // Q; +inf when q = p
  EnvelopeFit envelope;  // diagnostic density envelope
};
TransformConstants make_transform_constants(double p, double q);

}  // namespace lpembed::stable

#endif  // LPEMBED_STABLE_HPP
