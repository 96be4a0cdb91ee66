#include "schub/rational_simplex.hpp"

#include <stdexcept>

namespace schub {

namespace {

void verify_certificate(const HullMembership& hm, const std::vector<Point>& points,
                        const Point& z) {
  const int dim = static_cast<int>(z.size());
  if (hm.inside) {
    std::vector<Rational> acc(dim, 0);
    Rational total = 0;
    for (const auto& [k, w] : hm.combination) {
      if (w < 0) throw std::logic_error("hull membership: negative weight");
      for (int r = 0; r < dim; ++r) acc[r] += w * points[k][r];
      total += w;
    }
    if (total != 1) throw std::logic_error("hull membership: weights do not sum to 1");
    for (int r = 0; r < dim; ++r)
      if (acc[r] != z[r]) throw std::logic_error("hull membership: combination mismatch");
  } else {
    for (const Point& v : points) {
      Rational dot = 0;
      for (int r = 0; r < dim; ++r) dot += hm.separating_functional[r] * v[r];
      if (dot < hm.separating_threshold)
        throw std::logic_error("hull membership: separator cuts a generator");
    }
    Rational dot = 0;
    for (int r = 0; r < dim; ++r) dot += hm.separating_functional[r] * z[r];
    if (!(dot < hm.separating_threshold))
      throw std::logic_error("hull membership: separator does not cut the query");
  }
}

}  // namespace

HullMembership hull_membership_lp(const std::vector<Point>& points, const Point& z) {
  const int dim = static_cast<int>(z.size());
  for (const Point& v : points)
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("hull_membership_lp: dimension mismatch");

  // Feasibility of  A lambda = b, lambda >= 0  where the columns of A are
  // the generators with an appended 1 (convexity row).  Phase-1 simplex:
  // minimize the sum of artificial variables from the all-artificial
  // basis.  All entries of A and b are nonnegative, so no sign flips are
  // needed.
  const int m = dim + 1;
  const int n = static_cast<int>(points.size());
  const int total = n + m;  // lambda columns, then artificials

  // tableau rows 0..m-1: [A | I | b]; row m: reduced costs | -objective.
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(total + 1, 0));
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < dim; ++r) t[r][c] = points[c][r];
    t[dim][c] = 1;
  }
  for (int r = 0; r < m; ++r) t[r][n + r] = 1;
  for (int r = 0; r < dim; ++r) t[r][total] = z[r];
  t[dim][total] = 1;

  // Reduced costs for the artificial basis: cbar_j = -sum_r A[r][j] on the
  // lambda columns, 0 on artificials; objective starts at sum_r b_r.
  for (int c = 0; c <= total; ++c) {
    Rational s = 0;
    for (int r = 0; r < m; ++r) s += t[r][c];
    t[m][c] = (c < n) ? -s : 0;
    if (c == total) t[m][c] = -s;  // -objective
  }

  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;

  for (;;) {
    // Bland: entering column = smallest index with negative reduced cost.
    int enter = -1;
    for (int c = 0; c < total; ++c)
      if (t[m][c] < 0) {
        enter = c;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][total] / t[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave < 0)
      throw std::logic_error("hull_membership_lp: unbounded phase-1 objective");

    // Pivot on (leave, enter).
    Rational piv = t[leave][enter];
    for (int c = 0; c <= total; ++c) t[leave][c] /= piv;
    for (int r = 0; r <= m; ++r) {
      if (r == leave) continue;
      Rational factor = t[r][enter];
      if (factor == 0) continue;
      for (int c = 0; c <= total; ++c) t[r][c] -= factor * t[leave][c];
    }
    basis[leave] = enter;
  }

  HullMembership hm;
  Rational objective = -t[m][total];
  if (objective == 0) {
    hm.inside = true;
    for (int r = 0; r < m; ++r)
      if (basis[r] < n && t[r][total] != 0)
        hm.combination.emplace_back(static_cast<size_t>(basis[r]), t[r][total]);
  } else {
    // Simplex multipliers from the reduced costs of the artificial
    // columns: cbar_{n+i} = 1 - y_i.  Optimality gives y . A_j <= 0 for
    // every lambda column and y . b = objective > 0, a Farkas proof of
    // infeasibility.  Writing y = (u, u0), the separating form below is
    // (-u) . v >= u0 for generators and (-u) . z < u0.
    hm.inside = false;
    std::vector<Rational> y(m);
    for (int r = 0; r < m; ++r) y[r] = Rational(1) - t[m][n + r];
    hm.separating_functional.resize(dim);
    for (int r = 0; r < dim; ++r) hm.separating_functional[r] = -y[r];
    hm.separating_threshold = y[dim];
  }
  verify_certificate(hm, points, z);
  return hm;
}

}  // namespace schub
