#ifndef SCHUB_SCHUBERT_POLY_HPP
#define SCHUB_SCHUBERT_POLY_HPP

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "schub/permutation.hpp"
#include "schub/sparse_poly.hpp"

namespace schub {

// prod_{i+j <= p} (t_i - s_j), the double Schubert polynomial of the
// longest permutation.
SparsePoly longest_schubert(int p);

// Double Schubert polynomial of pi, computed by replaying the divided
// differences along the canonical descent path from the longest
// permutation.  Homogeneous of total degree length(pi).
SparsePoly double_schubert(const Permutation& pi);

// Same, but along a caller-chosen path: at each step `pick` receives the
// admissible indices (in increasing order) and returns one of them.
// Used to test path independence.
SparsePoly double_schubert_along(
    const Permutation& pi,
    const std::function<int(const std::vector<int>&)>& pick);

// double_schubert with all s variables set to zero.
SparsePoly ordinary_schubert(const Permutation& pi);

// A pipe dream for S_p: a set of cross cells inside the staircase
// {(i,j) : i >= 1, j >= 1, i+j <= p}.
struct PipeDream {
  int p = 0;
  std::vector<std::pair<int, int>> crosses;  // sorted: row asc, col asc

  bool operator==(const PipeDream& o) const { return p == o.p && crosses == o.crosses; }
  bool operator<(const PipeDream& o) const { return crosses < o.crosses; }
};

// Staircase cells in reading order: rows top to bottom, right to left
// within each row.  A cross at (i,j) stands for the generator s_{i+j-1}.
std::vector<std::pair<int, int>> staircase_reading_order(int p);

// All reduced pipe dreams for pi: subsets D of the staircase with
// |D| = length(pi) whose reading word, accumulated by left
// multiplication, is a reduced word for pi.  Enumerated by backtracking
// over the reading order, pruning as soon as a prefix stops being
// reduced.
std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& pi);

// Weight of one pipe dream: prod_{(i,j) in D} (t_i - s_j).
SparsePoly pipe_dream_weight(const PipeDream& d);

// Sum of the weights over all reduced pipe dreams for pi.  Independent
// route to double_schubert.
SparsePoly pipe_dream_polynomial(const Permutation& pi);

// Memoized double Schubert polynomials for a whole S_p run.  Every
// permutation other than the longest one is derived from its canonical
// parent s_i pi (smallest i that raises the length) by one divided
// difference.
class SchubertTable {
public:
  explicit SchubertTable(int p) : p_(p) {}

  const SparsePoly& get(const Permutation& pi);

private:
  int p_;
  std::map<std::vector<int>, SparsePoly> cache_;
};

}  // namespace schub

#endif
