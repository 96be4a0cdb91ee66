#ifndef SCHUB_SPARSE_POLY_HPP
#define SCHUB_SPARSE_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schub {

using Coeff = mpz_class;

// Exponent vector of a monomial; fixed ambient dimension within one
// computation.  Entries are nonnegative.
using Exponent = std::vector<int>;

// Sparse multivariate polynomial with exact integer coefficients.
// Canonical form: no stored coefficient is zero; terms are kept in
// lexicographic order of the exponent vector, which is also the
// serialization order.
class SparsePoly {
public:
  explicit SparsePoly(int dim) : dim_(dim) {}

  static SparsePoly zero(int dim) { return SparsePoly(dim); }
  static SparsePoly constant(int dim, Coeff c);
  static SparsePoly monomial(Exponent e, Coeff c);
  static SparsePoly variable(int index, int dim);  // 0-based index

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Exponent, Coeff>& terms() const { return terms_; }

  Coeff coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Coeff& c);  // merges, drops zeros

  SparsePoly operator+(const SparsePoly& g) const;
  SparsePoly operator-(const SparsePoly& g) const;
  SparsePoly operator*(const SparsePoly& g) const;
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& g) const {
    return dim_ == g.dim_ && terms_ == g.terms_;
  }

  // Total degree of every term if homogeneous, std::nullopt otherwise.
  // The zero polynomial counts as homogeneous of degree 0.
  std::optional<int> homogeneous_degree() const;

  Coeff sum_of_coefficients() const;
  Coeff sum_of_abs_coefficients() const;
  bool all_coefficients_positive() const;
  bool all_coefficients_nonnegative() const;

  // Rendering with caller-supplied variable names, e.g.
  // "t1^2 - t1*s1 - t1*s2 + s1*s2".
  std::string to_string(const std::vector<std::string>& names) const;

private:
  int dim_;
  std::map<Exponent, Coeff> terms_;
};

// Exact division, nullopt when d does not divide f.  Single-divisor
// multivariate division along the lex term order.
std::optional<SparsePoly> try_divide(const SparsePoly& f, const SparsePoly& d);

// --- Operations specific to the t/s variable split -------------------
//
// Polynomials over 2p variables: coordinates 0..p-1 are t_1..t_p and
// coordinates p..2p-1 are s_1..s_p.

// Exchanges t_i and t_{i+1} in every term (1 <= i <= p-1); s untouched.
SparsePoly swap_t(const SparsePoly& f, int i);

// (f - swap_t(f, i)) / (t_i - t_{i+1}).  The numerator is antisymmetric
// in t_i, t_{i+1}, so the division is exact; it is carried out as
// synthetic division along t_i with t_{i+1} as the root, and a nonzero
// remainder throws std::logic_error.
SparsePoly divided_difference(const SparsePoly& f, int i);

// Drops every term with a positive s-exponent.
SparsePoly substitute_s_zero(const SparsePoly& f);

// f(t, -s): multiplies each coefficient by (-1)^(total s-degree).
SparsePoly negate_s(const SparsePoly& f);

std::vector<std::string> ts_variable_names(int p);

std::string to_string_ts(const SparsePoly& f);

}  // namespace schub

#endif
