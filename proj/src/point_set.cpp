/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */

#include "lpembed/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "lpembed/common.hpp"

namespace lpembed {

double lp_distance(const double* a, const double* b, std::size_t dim, double p) {
  if (p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) s += std::fabs(a[i] - b[i]);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += std::pow(std::fabs(a[i] - b[i]), p);
  return std::pow(s, 1.0 / p);
}

PointSet::PointSet(std::vector<double> xs, std::size_t dim, double p)
    : dim_(dim), p_(p), xs_(std::move(xs)) {
  if (dim == 0 || xs_.size() % dim != 0)
    throw param_error("PointSet: data size is not a multiple of dim");
  n_ = xs_.size() / dim;
  set_p(p);
}

void PointSet::set_p(double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw param_error("PointSet: p must lie in [1,2]");
  p_ = p;
}

double PointSet::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = dist(i, j);
      if (d > 0.0 && d < best) best = d;
    }
  return std::isfinite(best) ? best : 0.0;
}

double PointSet::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) best = std::max(best, dist(i, j));
  return best;
}

PointSet PointSet::subset(const std::vector<std::size_t>& idx) const {
  PointSet out(idx.size(), dim_, p_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    std::copy(point(idx[r]), point(idx[r]) + dim_, out.point(r));
  return out;
}

DistanceMatrix::DistanceMatrix(const PointSet& ps) : n_(ps.size()), d_(n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      d_[i * n_ + j] = d_[j * n_ + i] = ps.dist(i, j);
}

double DistanceMatrix::max() const {
  return d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

PointSet read_points(std::istream& in, double p) {
  std::vector<double> xs;
  std::size_t cols = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& c : line)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream row(line);
    std::vector<double> vals;
    double v;
    while (row >> v) vals.push_back(v);
    if (vals.empty()) continue;  // blank or comment-free empty line
    if (cols == 0) cols = vals.size();
    if (vals.size() != cols)
      throw param_error("point file: ragged row at line " + std::to_string(lineno));
    xs.insert(xs.end(), vals.begin(), vals.end());
  }
  if (xs.empty()) throw param_error("point file: no rows");
  return PointSet(std::move(xs), cols, p);
}

PointSet load_points(const std::string& path, double p) {
  std::ifstream in(path);
  if (!in) throw param_error("cannot open point file: " + path);
  return read_points(in, p);
}

void write_matrix(std::ostream& out, const std::vector<double>& xs,
                  std::size_t rows, std::size_t cols) {
  char buf[40];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", xs[r * cols + c]);
      if (c) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void save_matrix(const std::string& path, const std::vector<double>& xs,
                 std::size_t rows, std::size_t cols) {
  std::ofstream out(path);
  if (!out) throw param_error("cannot open output file: " + path);
  write_matrix(out, xs, rows, cols);
}

}  // namespace lpembed
