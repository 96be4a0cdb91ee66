#ifndef SCHUB_PERMUTATION_HPP
#define SCHUB_PERMUTATION_HPP

#include <string>
#include <vector>

namespace schub {

// A permutation of [p] in one-line notation, pi(i) = word[i-1].
// Immutable; the Coxeter length (= inversion count) is cached at
// construction.
class Permutation {
public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int p);

  // (p, p-1, ..., 2, 1), the unique permutation of maximal length
  // p(p-1)/2.
  static Permutation longest(int p);

  // Accepts comma-separated one-line notation ("2,3,1") and, for
  // p <= 9, compact digit strings ("231").  Throws std::invalid_argument.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }
  int length() const { return length_; }

  // 1-based application: operator()(i) = pi(i).
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  // s_i * pi, the one-line word with the values i and i+1 exchanged.
  // Requires 1 <= i <= p-1.
  Permutation left_multiply_transposition(int i) const;

  Permutation inverse() const;
  Permutation compose(const Permutation& other) const;  // (*this)(other(i))

  // rank(pi_{m x n}) = number of unit entries of the permutation matrix
  // in the top-left m x n corner, for 0 <= m,n <= p.  The permutation
  // matrix has its unit entries at (pi(j), j); this is the convention
  // under which the determinantal ideal of pi matches the double
  // Schubert polynomial of pi computed by the left recursion.
  std::vector<std::vector<int>> rank_matrix() const;

  // Indices (i_1,...,i_k), k = length(longest) - length(*this), such
  // that replaying sigma <- s_{i_m} sigma from sigma = longest(p) drops
  // the length by one at every step and ends at *this.  At each step the
  // smallest admissible index is chosen, so the path is canonical.
  std::vector<int> descent_path() const;

  bool operator==(const Permutation& other) const { return word_ == other.word_; }
  bool operator<(const Permutation& other) const { return word_ < other.word_; }

  std::string to_string() const;  // comma-separated one-line notation

private:
  std::vector<int> word_;
  int length_;
};

// All permutations of [p] in lexicographic order of one-line words.
std::vector<Permutation> symmetric_group(int p);

// Position of pi in the lexicographic enumeration of S_p (0-based).
long long lex_rank(const Permutation& pi);

long long factorial(int p);

}  // namespace schub

#endif
