#include "schub/sparse_poly.hpp"

#include <stdexcept>

namespace schub {

SparsePoly SparsePoly::constant(int dim, Coeff c) {
  SparsePoly f(dim);
  f.add_term(Exponent(dim, 0), c);
  return f;
}

SparsePoly SparsePoly::monomial(Exponent e, Coeff c) {
  SparsePoly f(static_cast<int>(e.size()));
  f.add_term(std::move(e), c);
  return f;
}

SparsePoly SparsePoly::variable(int index, int dim) {
  if (index < 0 || index >= dim) throw std::out_of_range("variable index");
  Exponent e(dim, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Coeff SparsePoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Coeff& c) {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("add_term: dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& g) const {
  if (dim_ != g.dim_) throw std::invalid_argument("add: dimension mismatch");
  SparsePoly out = *this;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& g) const {
  if (dim_ != g.dim_) throw std::invalid_argument("sub: dimension mismatch");
  SparsePoly out = *this;
  for (const auto& [e, c] : g.terms_) out.add_term(e, -c);
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& g) const {
  if (dim_ != g.dim_) throw std::invalid_argument("mul: dimension mismatch");
  SparsePoly out(dim_);
  Exponent e(dim_);
  for (const auto& [ef, cf] : terms_)
    for (const auto& [eg, cg] : g.terms_) {
      for (int k = 0; k < dim_; ++k) e[k] = ef[k] + eg[k];
      out.add_term(e, cf * cg);
    }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  int deg = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return std::nullopt;
    }
  }
  return deg;
}

Coeff SparsePoly::sum_of_coefficients() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Coeff SparsePoly::sum_of_abs_coefficients() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

bool SparsePoly::all_coefficients_positive() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

bool SparsePoly::all_coefficients_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string factors;
    for (int k = 0; k < dim_; ++k) {
      if (e[k] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names.at(k);
      if (e[k] > 1) factors += "^" + std::to_string(e[k]);
    }
    if (factors.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

std::optional<SparsePoly> try_divide(const SparsePoly& f, const SparsePoly& d) {
  if (f.dim() != d.dim()) throw std::invalid_argument("try_divide: dimension mismatch");
  if (d.is_zero()) throw std::invalid_argument("try_divide: division by zero");
  const auto dlead = *d.terms().rbegin();  // lex-largest term of d
  SparsePoly rem = f;
  SparsePoly quot(f.dim());
  Exponent shift(f.dim());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    bool divisible = true;
    for (int k = 0; k < f.dim(); ++k) {
      if (re[k] < dlead.first[k]) {
        divisible = false;
        break;
      }
      shift[k] = re[k] - dlead.first[k];
    }
    if (!divisible) return std::nullopt;
    Coeff q = rc / dlead.second;
    if (q * dlead.second != rc) return std::nullopt;
    SparsePoly piece = SparsePoly::monomial(shift, q);
    quot = quot + piece;
    rem = rem - piece * d;
  }
  return quot;
}

namespace {

int ts_half_dim(const SparsePoly& f, const char* who) {
  if (f.dim() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": odd ambient dimension");
  return f.dim() / 2;
}

// Multiplies every term of f by the variable with the given 0-based index.
SparsePoly shift_variable(const SparsePoly& f, int index) {
  SparsePoly out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    Exponent e2 = e;
    ++e2[index];
    out.add_term(e2, c);
  }
  return out;
}

}  // namespace

SparsePoly swap_t(const SparsePoly& f, int i) {
  const int p = ts_half_dim(f, "swap_t");
  if (i < 1 || i > p - 1) throw std::out_of_range("swap_t: index");
  SparsePoly out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    Exponent e2 = e;
    std::swap(e2[i - 1], e2[i]);
    out.add_term(e2, c);
  }
  return out;
}

SparsePoly divided_difference(const SparsePoly& f, int i) {
  const int p = ts_half_dim(f, "divided_difference");
  if (i < 1 || i > p - 1) throw std::out_of_range("divided_difference: index");
  const int u = i - 1;  // t_i
  const int v = i;      // t_{i+1}
  SparsePoly numer = f - swap_t(f, i);
  if (numer.is_zero()) return SparsePoly::zero(f.dim());

  // Bucket the numerator by the exponent of t_i.
  int top = 0;
  for (const auto& [e, c] : numer.terms()) top = std::max(top, e[u]);
  std::vector<SparsePoly> bucket(top + 1, SparsePoly(f.dim()));
  for (const auto& [e, c] : numer.terms()) {
    Exponent e2 = e;
    const int a = e2[u];
    e2[u] = 0;
    bucket[a].add_term(e2, c);
  }

  // Synthetic division by (t_i - t_{i+1}), i.e. by the root t_{i+1}:
  //   q_{D-1} = C_D,  q_{a-1} = C_a + t_{i+1} * q_a,  r = C_0 + t_{i+1} * q_0.
  SparsePoly out(f.dim());
  SparsePoly carry = bucket[top];
  for (int a = top - 1; a >= 0; --a) {
    for (const auto& [e, c] : carry.terms()) {
      Exponent e2 = e;
      e2[u] = a;
      out.add_term(e2, c);
    }
    carry = bucket[a] + shift_variable(carry, v);
  }
  if (!carry.is_zero())
    throw std::logic_error("divided_difference: nonzero remainder (internal error)");
  return out;
}

SparsePoly substitute_s_zero(const SparsePoly& f) {
  const int p = ts_half_dim(f, "substitute_s_zero");
  SparsePoly out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    bool s_free = true;
    for (int k = p; k < 2 * p; ++k)
      if (e[k] > 0) {
        s_free = false;
        break;
      }
    if (s_free) out.add_term(e, c);
  }
  return out;
}

SparsePoly negate_s(const SparsePoly& f) {
  const int p = ts_half_dim(f, "negate_s");
  SparsePoly out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    int sdeg = 0;
    for (int k = p; k < 2 * p; ++k) sdeg += e[k];
    out.add_term(e, sdeg % 2 == 0 ? c : -c);
  }
  return out;
}

std::vector<std::string> ts_variable_names(int p) {
  std::vector<std::string> names;
  names.reserve(2 * p);
  for (int i = 1; i <= p; ++i) names.push_back("t" + std::to_string(i));
  for (int j = 1; j <= p; ++j) names.push_back("s" + std::to_string(j));
  return names;
}

std::string to_string_ts(const SparsePoly& f) {
  return f.to_string(ts_variable_names(f.dim() / 2));
}

}  // namespace schub
