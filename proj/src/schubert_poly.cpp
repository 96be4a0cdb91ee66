#include "schub/schubert_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

SparsePoly longest_schubert(int p) {
  const int dim = 2 * p;
  SparsePoly f = SparsePoly::constant(dim, 1);
  for (int i = 1; i <= p - 1; ++i)
    for (int j = 1; i + j <= p; ++j) {
      SparsePoly factor =
          SparsePoly::variable(i - 1, dim) - SparsePoly::variable(p + j - 1, dim);
      f = f * factor;
    }
  return f;
}

SparsePoly double_schubert(const Permutation& pi) {
  SparsePoly f = longest_schubert(pi.size());
  for (int i : pi.descent_path()) f = divided_difference(f, i);
  return f;
}

SparsePoly double_schubert_along(
    const Permutation& pi,
    const std::function<int(const std::vector<int>&)>& pick) {
  const int p = pi.size();
  Permutation sigma = Permutation::longest(p);
  SparsePoly f = longest_schubert(p);
  while (!(sigma == pi)) {
    Permutation w = pi.compose(sigma.inverse());
    std::vector<int> admissible;
    for (int i = 1; i <= p - 1; ++i)
      if (w(i) > w(i + 1)) admissible.push_back(i);
    if (admissible.empty()) throw std::logic_error("no admissible index");
    const int i = pick(admissible);
    sigma = sigma.left_multiply_transposition(i);
    f = divided_difference(f, i);
  }
  return f;
}

SparsePoly ordinary_schubert(const Permutation& pi) {
  return substitute_s_zero(double_schubert(pi));
}

std::vector<std::pair<int, int>> staircase_reading_order(int p) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= p - 1; ++i)
    for (int j = p - i; j >= 1; --j) cells.emplace_back(i, j);
  return cells;
}

namespace {

struct DreamSearch {
  const std::vector<std::pair<int, int>>& cells;
  const std::vector<int>& target;
  size_t want = 0;
  std::vector<std::pair<int, int>> chosen;
  std::vector<PipeDream>* out = nullptr;
  int p = 0;

  // word: the permutation accumulated so far (values array), len: its length.
  void run(size_t pos, std::vector<int>& word, int len) {
    if (chosen.size() == want) {
      if (word == target) {
        PipeDream d;
        d.p = p;
        d.crosses = chosen;
        std::sort(d.crosses.begin(), d.crosses.end());
        out->push_back(std::move(d));
      }
      return;
    }
    if (cells.size() - pos < want - chosen.size()) return;
    // Skip cell at pos.
    run(pos + 1, word, len);
    // Take it: left-multiply by s_{i+j-1}, prune unless the length grows.
    const auto [i, j] = cells[pos];
    const int g = i + j - 1;
    // Swapping the values g, g+1 raises the length iff g appears before
    // g+1 in the word.
    int pos_g = -1, pos_g1 = -1;
    for (int k = 0; k < p; ++k) {
      if (word[k] == g) pos_g = k;
      if (word[k] == g + 1) pos_g1 = k;
    }
    if (pos_g < pos_g1) {
      std::swap(word[pos_g], word[pos_g1]);
      chosen.push_back(cells[pos]);
      run(pos + 1, word, len + 1);
      chosen.pop_back();
      std::swap(word[pos_g], word[pos_g1]);
    }
  }
};

}  // namespace

std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& pi) {
  const int p = pi.size();
  const auto cells = staircase_reading_order(p);
  std::vector<PipeDream> out;
  DreamSearch s{cells, pi.word()};
  s.want = static_cast<size_t>(pi.length());
  s.out = &out;
  s.p = p;
  std::vector<int> word(p);
  for (int k = 0; k < p; ++k) word[k] = k + 1;
  s.run(0, word, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SparsePoly pipe_dream_weight(const PipeDream& d) {
  const int dim = 2 * d.p;
  SparsePoly f = SparsePoly::constant(dim, 1);
  for (const auto& [i, j] : d.crosses)
    f = f * (SparsePoly::variable(i - 1, dim) - SparsePoly::variable(d.p + j - 1, dim));
  return f;
}

SparsePoly pipe_dream_polynomial(const Permutation& pi) {
  SparsePoly f(2 * pi.size());
  for (const PipeDream& d : enumerate_pipe_dreams(pi)) f = f + pipe_dream_weight(d);
  return f;
}

const SparsePoly& SchubertTable::get(const Permutation& pi) {
  if (pi.size() != p_) throw std::invalid_argument("SchubertTable: wrong group size");
  auto it = cache_.find(pi.word());
  if (it != cache_.end()) return it->second;
  SparsePoly f(2 * p_);
  if (pi.length() == p_ * (p_ - 1) / 2) {
    f = longest_schubert(p_);
  } else {
    int raise = 0;
    for (int i = 1; i <= p_ - 1; ++i) {
      Permutation up = pi.left_multiply_transposition(i);
      if (up.length() == pi.length() + 1) {
        raise = i;
        break;
      }
    }
    if (raise == 0) throw std::logic_error("SchubertTable: no raising index");
    f = divided_difference(get(pi.left_multiply_transposition(raise)), raise);
  }
  return cache_.emplace(pi.word(), std::move(f)).first->second;
}

}  // namespace schub
