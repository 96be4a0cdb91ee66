#ifndef SCHUB_RATIONAL_SIMPLEX_HPP
#define SCHUB_RATIONAL_SIMPLEX_HPP

#include <gmpxx.h>

#include <vector>

#include "schub/lattice_set.hpp"

namespace schub {

using Rational = mpq_class;

// Outcome of an exact convex-hull membership test for a query point z
// against a finite generating set.  Exactly one certificate is filled:
//
//  inside:  weights lambda >= 0 with sum 1 and sum lambda_k v_k = z
//           (indices into the generating set);
//  outside: a functional y and threshold b with  y . v >= b  for every
//           generator v but  y . z < b.
//
// Certificates are re-verified against the inputs before being
// returned; a verification failure throws std::logic_error.
struct HullMembership {
  bool inside = false;
  std::vector<std::pair<size_t, Rational>> combination;
  std::vector<Rational> separating_functional;
  Rational separating_threshold = 0;
};

// Decides z in conv(points) by a phase-1 simplex (Bland's rule) over
// exact rationals.
HullMembership hull_membership_lp(const std::vector<Point>& points, const Point& z);

}  // namespace schub

#endif
