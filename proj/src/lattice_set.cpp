#include "schub/lattice_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schub {

LatticeSet::LatticeSet(int dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  for (const Point& x : points_) {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("LatticeSet: dimension mismatch");
    for (int v : x)
      if (v < 0) throw std::invalid_argument("LatticeSet: negative coordinate");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

LatticeSet LatticeSet::support(const SparsePoly& f) {
  std::vector<Point> pts;
  pts.reserve(f.num_terms());
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return LatticeSet(f.dim(), std::move(pts));
}

bool LatticeSet::contains(const Point& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

void LatticeSet::insert(const Point& x) {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("LatticeSet: dimension mismatch");
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) points_.insert(it, x);
}

Point LatticeSet::coordinate_min() const {
  if (empty()) throw std::invalid_argument("LatticeSet: empty");
  Point m = points_[0];
  for (const Point& x : points_)
    for (int k = 0; k < dim_; ++k) m[k] = std::min(m[k], x[k]);
  return m;
}

Point LatticeSet::coordinate_max() const {
  if (empty()) throw std::invalid_argument("LatticeSet: empty");
  Point m = points_[0];
  for (const Point& x : points_)
    for (int k = 0; k < dim_; ++k) m[k] = std::max(m[k], x[k]);
  return m;
}

std::optional<int> LatticeSet::constant_sum() const {
  if (empty()) return std::nullopt;
  int s0 = std::accumulate(points_[0].begin(), points_[0].end(), 0);
  for (const Point& x : points_)
    if (std::accumulate(x.begin(), x.end(), 0) != s0) return std::nullopt;
  return s0;
}

std::pair<Point, Point> LatticeSet::nonconstant_sum_witness() const {
  int s0 = std::accumulate(points_[0].begin(), points_[0].end(), 0);
  for (const Point& x : points_)
    if (std::accumulate(x.begin(), x.end(), 0) != s0) return {points_[0], x};
  throw std::logic_error("nonconstant_sum_witness: sums are constant");
}

LatticeSet LatticeSet::minkowski_sum(const LatticeSet& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<Point> pts;
  pts.reserve(size() * other.size());
  for (const Point& x : points_)
    for (const Point& y : other.points_) {
      Point z(dim_);
      for (int k = 0; k < dim_; ++k) z[k] = x[k] + y[k];
      pts.push_back(std::move(z));
    }
  return LatticeSet(dim_, std::move(pts));
}

}  // namespace schub
