/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#ifndef LPEMBED_POINT_SET_HPP
#define LPEMBED_POINT_SET_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lpembed {

/// l_p distance between two dim-length vectors, 1 <= p <= 2.
double lp_distance(const double* a, const double* b, std::size_t dim, double p);

/// An ordered set of points in l_p^dim, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t n, std::size_t dim, double p)
      : n_(n), dim_(dim), p_(p), xs_(n * dim, 0.0) {}
  PointSet(std::vector<double> xs, std::size_t dim, double p);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  double p() const { return p_; }
  void set_p(double p);

  const double* point(std::size_t i) const { return xs_.data() + i * dim_; }
  double* point(std::size_t i) { return xs_.data() + i * dim_; }
  const std::vector<double>& data() const { return xs_; }

  double dist(std::size_t i, std::size_t j) const {
    return lp_distance(point(i), point(j), dim_, p_);
  }

  /// Smallest nonzero pairwise distance; 0 when fewer than two points.
  double min_distance() const;
  double diameter() const;

  /// Subset copy preserving row order of `idx`.
  PointSet subset(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  double p_ = 2.0;
  std::vector<double> xs_;
};

/// Dense pairwise-distance cache for small instances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const PointSet& ps);
  double operator()(std::size_t i, std::size_t j) const {
    return d_[i * n_ + j];
  }
  std::size_t size() const { return n_; }
  double max() const;

 private:
  std::size_t n_;
  std::vector<double> d_;
};

// Plain-text numeric matrices, one point per row, whitespace or comma
// separated. Writers use %.17g so round-trips and reruns are byte-stable.
PointSet load_points(const std::string& path, double p);
PointSet read_points(std::istream& in, double p);
void save_matrix(const std::string& path, const std::vector<double>& xs,
                 std::size_t rows, std::size_t cols);
void write_matrix(std::ostream& out, const std::vector<double>& xs,
                  std::size_t rows, std::size_t cols);

}  // namespace lpembed

#endif  // LPEMBED_POINT_SET_HPP
