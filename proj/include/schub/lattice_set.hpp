#ifndef SCHUB_LATTICE_SET_HPP
#define SCHUB_LATTICE_SET_HPP

#include <optional>
#include <vector>

#include "schub/sparse_poly.hpp"

namespace schub {

using Point = std::vector<int>;

// Finite set of nonnegative integer vectors of a fixed dimension,
// kept sorted (lex) and duplicate-free.
class LatticeSet {
public:
  explicit LatticeSet(int dim) : dim_(dim) {}
  LatticeSet(int dim, std::vector<Point> points);

  static LatticeSet support(const SparsePoly& f);

  int dim() const { return dim_; }
  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](size_t k) const { return points_[k]; }

  bool contains(const Point& x) const;
  void insert(const Point& x);

  // Componentwise bounds over the set.
  Point coordinate_min() const;
  Point coordinate_max() const;

  // The common coordinate sum, or nullopt if the sums differ.  The
  // witness pair (when not constant) is the first two points of
  // differing sums in lex order.
  std::optional<int> constant_sum() const;
  std::pair<Point, Point> nonconstant_sum_witness() const;

  // {x + y : x in *this, y in other}.
  LatticeSet minkowski_sum(const LatticeSet& other) const;

  bool operator==(const LatticeSet& o) const {
    return dim_ == o.dim_ && points_ == o.points_;
  }

private:
  int dim_;
  std::vector<Point> points_;
};

}  // namespace schub

#endif
