#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevpoly/cartan.hpp"

namespace chevpoly {

// A word in the simple reflections. letters[p-1] is the letter at position p,
// where position 1 is the RIGHTMOST factor of s_{r_l}...s_{r_1} and therefore
// the first reflection applied to a vector on the right.
struct WeylWord {
  std::vector<int> letters;  // 1-based reflection indices, position order

  std::size_t length() const { return letters.size(); }

  // Letters as printed left-to-right, i.e. positions l, l-1, ..., 1.
  std::vector<int> left_to_right() const {
    return {letters.rbegin(), letters.rend()};
  }

  static WeylWord from_left_to_right(const std::vector<int>& lr) {
    WeylWord w;
    w.letters.assign(lr.rbegin(), lr.rend());
    return w;
  }

  // Parses "3 2 1 2 3" exactly as printed; the last token is position 1.
  static WeylWord parse(const std::string& s) {
    std::istringstream in(s);
    std::vector<int> lr;
    int x;
    while (in >> x) lr.push_back(x);
    return from_left_to_right(lr);
  }

  std::string str() const {
    std::string out;
    auto lr = left_to_right();
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(lr[i]);
    }
    return out;
  }

  bool operator==(const WeylWord& o) const { return letters == o.letters; }
  bool operator<(const WeylWord& o) const { return letters < o.letters; }
};

// w(lambda) for w given by a word: position 1 acts first.
inline Weight apply_word(const RootDatum& d, const WeylWord& w, Weight lambda) {
  for (int i : w.letters) lambda = apply_reflection(d, i, lambda);
  return lambda;
}

// A word is reduced iff each added letter (reading positions 1,2,...) sends a
// positive root negative for the first time: s_i w > w iff w^{-1}(alpha_i) > 0.
inline bool is_reduced(const RootDatum& d, const WeylWord& w) {
  for (int i : w.letters)
    if (i < 1 || i > d.rank()) throw std::invalid_argument("letter out of range");
  std::size_t l = w.length();
  for (std::size_t t = 0; t < l; ++t) {
    // beta = (s_{r_t} ... s_{r_1})^{-1} (alpha_{r_{t+1}})  [prefix of length t]
    std::vector<Int> beta(d.rank(), Int(0));
    beta[w.letters[t] - 1] = 1;
    for (std::size_t s = t; s-- > 0;) {
      int i = w.letters[s] - 1;
      Int k = 0;
      for (int j = 0; j < d.rank(); ++j) k += Int(d.cartan[i][j]) * beta[j];
      beta[i] -= k;
    }
    bool positive = true;
    for (const Int& c : beta)
      if (c < 0) positive = false;
    if (!positive) return false;
  }
  return true;
}

// Greedy antidominant walk from lambda = sum_{i in I} fw_i: repeatedly apply
// the smallest s_i with <mu, alpha_i^vee> > 0. The recorded sequence, first
// reflection at position 1, is a reduced word for w^P.
inline WeylWord minimal_coset_word(const RootDatum& d, const std::vector<int>& I) {
  if (I.empty()) throw std::invalid_argument("parabolic index set must be nonempty");
  Weight mu(d.rank(), Int(0));
  for (int i : I) {
    if (i < 1 || i > d.rank()) throw std::invalid_argument("parabolic index out of range");
    mu[i - 1] = 1;
  }
  WeylWord w;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= d.rank(); ++i)
      if (mu[i - 1] > 0) {
        pick = i;
        break;
      }
    if (!pick) break;
    mu = apply_reflection(d, pick, mu);
    w.letters.push_back(pick);
  }
  return w;
}

inline int coset_length(const RootDatum& d, const std::vector<int>& I) {
  std::vector<bool> inI(d.rank() + 1, false);
  for (int i : I) inI[i] = true;
  int parabolic = 0;
  for (const Root& r : d.positive_roots) {
    bool inside = true;
    for (int j = 0; j < d.rank(); ++j)
      if (r.simple[j] != 0 && inI[j + 1]) inside = false;
    if (inside) ++parabolic;
  }
  return (int)d.positive_roots.size() - parabolic;
}

// All reduced words equal to w as group elements, up to cap. DFS peels left
// descents; elements are tracked by their image of rho, which separates
// Weyl group elements.
inline std::vector<WeylWord> reduced_words(const RootDatum& d, const WeylWord& w,
                                           std::size_t cap = 10000) {
  if (!is_reduced(d, w)) throw std::invalid_argument("input word is not reduced");
  std::vector<WeylWord> out;
  Weight target = apply_word(d, w, d.rho);
  std::vector<int> stack_lr;  // letters collected left-to-right
  auto dfs = [&](auto&& self, const Weight& lam) -> void {
    if (out.size() >= cap) return;
    if (lam == d.rho) {
      out.push_back(WeylWord::from_left_to_right(stack_lr));
      return;
    }
    for (int i = 1; i <= d.rank(); ++i) {
      if (lam[i - 1] < 0) {  // left descent: <w rho, alpha_i^vee> < 0
        stack_lr.push_back(i);
        self(self, apply_reflection(d, i, lam));
        stack_lr.pop_back();
        if (out.size() >= cap) return;
      }
    }
  };
  dfs(dfs, target);
  return out;
}

// Reduced word for the longest element w_0.
inline WeylWord longest_word(const RootDatum& d) {
  std::vector<int> all(d.rank());
  for (int i = 0; i < d.rank(); ++i) all[i] = i + 1;
  return minimal_coset_word(d, all);
}

// sigma_0 with fw_{sigma_0(i)} = -w_0 fw_i; returned 1-based.
inline std::vector<int> w0_fundamental_permutation(const RootDatum& d) {
  WeylWord w0 = longest_word(d);
  std::vector<int> sigma(d.rank() + 1, 0);
  for (int i = 1; i <= d.rank(); ++i) {
    Weight fw(d.rank(), Int(0));
    fw[i - 1] = 1;
    Weight img = apply_word(d, w0, fw);
    int j = 0;
    for (int k = 0; k < d.rank(); ++k) {
      if (img[k] == -1 && j == 0)
        j = k + 1;
      else if (img[k] != 0)
        throw std::logic_error("-w0 does not permute fundamental weights");
    }
    sigma[i] = j;
  }
  return sigma;
}

// Table of minuscule fundamental weights: <fw_k, beta^vee> in {-1,0,1}.
inline bool is_minuscule(const RootDatum& d, int k) {
  Weight fw(d.rank(), Int(0));
  fw[k - 1] = 1;
  for (const Root& r : d.positive_roots) {
    Int p = d.pair_coroot(fw, r.cosimple);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

}  // namespace chevpoly
