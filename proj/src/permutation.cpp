#include "schub/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schub {

namespace {

int inversion_count(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int p = static_cast<int>(word_.size());
  if (p == 0) throw std::invalid_argument("permutation: empty word");
  std::vector<char> seen(p + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > p) throw std::invalid_argument("permutation: value out of range");
    if (seen[v]) throw std::invalid_argument("permutation: repeated value");
    seen[v] = 1;
  }
  length_ = inversion_count(word_);
}

Permutation Permutation::identity(int p) {
  if (p < 1) throw std::invalid_argument("permutation: p must be positive");
  std::vector<int> w(p);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int p) {
  if (p < 1) throw std::invalid_argument("permutation: p must be positive");
  std::vector<int> w(p);
  for (int i = 0; i < p; ++i) w[i] = p - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("permutation: empty string");
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("permutation: bad entry '" + tok + "'");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw std::invalid_argument("permutation: bad entry '" + tok + "'");
      w.push_back(v);
    }
  } else {
    // Compact digit form, unambiguous only up to p = 9.
    if (text.size() > 9)
      throw std::invalid_argument("permutation: compact form limited to p <= 9; use commas");
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("permutation: bad digit");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::left_multiply_transposition(int i) const {
  const int p = size();
  if (i < 1 || i > p - 1) throw std::out_of_range("left_multiply_transposition: index");
  std::vector<int> w = word_;
  for (int& v : w) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (size_t j = 0; j < word_.size(); ++j) w[word_[j] - 1] = static_cast<int>(j) + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(word_.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = word_[other.word_[i] - 1];
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::rank_matrix() const {
  const int p = size();
  std::vector<std::vector<int>> r(p + 1, std::vector<int>(p + 1, 0));
  // Unit entries at (pi(j), j); r[m][n] counts those with pi(j) <= m, j <= n.
  for (int m = 1; m <= p; ++m)
    for (int n = 1; n <= p; ++n) {
      r[m][n] = r[m][n - 1] + (word_[n - 1] <= m ? 1 : 0);
    }
  return r;
}

std::vector<int> Permutation::descent_path() const {
  const int p = size();
  std::vector<int> path;
  Permutation sigma = Permutation::longest(p);
  // We need pi = s_{i_k} ... s_{i_1} sigma_0 with every step dropping the
  // length.  Writing w = pi o sigma^{-1}, an index i is admissible exactly
  // when it is a descent of w (then both w s_i and s_i sigma lose length).
  while (!(sigma == *this)) {
    Permutation w = compose(sigma.inverse());
    int chosen = 0;
    for (int i = 1; i <= p - 1; ++i) {
      if (w(i) > w(i + 1)) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) throw std::logic_error("descent_path: no admissible index");
    Permutation next = sigma.left_multiply_transposition(chosen);
    if (next.length() != sigma.length() - 1)
      throw std::logic_error("descent_path: length did not drop");
    path.push_back(chosen);
    sigma = std::move(next);
  }
  return path;
}

std::string Permutation::to_string() const {
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::vector<Permutation> symmetric_group(int p) {
  std::vector<int> w(p);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

long long lex_rank(const Permutation& pi) {
  const int p = pi.size();
  long long rank = 0;
  long long fact = factorial(p - 1);
  std::vector<char> used(p + 1, 0);
  for (int i = 1; i <= p; ++i) {
    int smaller = 0;
    for (int v = 1; v < pi(i); ++v)
      if (!used[v]) ++smaller;
    rank += smaller * fact;
    used[pi(i)] = 1;
    if (i < p) fact /= (p - i);
  }
  return rank;
}

long long factorial(int p) {
  long long f = 1;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

}  // namespace schub
