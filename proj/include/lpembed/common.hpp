/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_COMMON_HPP
#define LPEMBED_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpembed {

/// Parameter-domain violation (CLI exit code 2).
class param_error : public std::invalid_argument {
 public:
  explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Resource/size guard violation (CLI exit code 3).
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Deterministic RNG utilities. All randomness in the library flows through
// mt19937_64 streams seeded here, so identical seeds give identical output
// on every run regardless of platform std::distribution quirks.
// ---------------------------------------------------------------------------

/// splitmix64 step; used to derive independent sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Sub-seed for a named stream of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x2545f4914f6cdd1dULL * (stream + 1));
  return splitmix64(s);
}

/// 53-bit uniform in [0,1) from a raw 64-bit word.
inline double uniform53(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// Compensated (Kahan) summation. The stable projection rows are heavy-tailed,
// so naive accumulation of <g, v> can lose digits that the phase argument
// cannot afford.
// ---------------------------------------------------------------------------

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

/// Compensated dot product of two equal-length ranges.
double kahan_dot(const double* a, const double* b, std::size_t n);

// ---------------------------------------------------------------------------
// Minimal deterministic parallel_for. Work is split into fixed index chunks
// written to caller-owned slots, so results do not depend on scheduling.
// ---------------------------------------------------------------------------

/// Global worker count used by parallel loops (set from the CLI --threads).
int worker_threads();
void set_worker_threads(int n);

/// Runs fn(i) for i in [0, n). With 1 worker this is a plain loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lpembed

#endif  // LPEMBED_COMMON_HPP
