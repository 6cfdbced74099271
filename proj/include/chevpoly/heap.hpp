#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chevpoly/weyl.hpp"

namespace chevpoly {

// Labeled poset of a reduced word. Element p (0-based; API position p+1) is
// the letter at word position p+1, so element 0 is the rightmost letter and
// sits at the top of the heap when comparable. Generating relation:
// p_i > p_j for i < j when the Cartan entry a_{r_i r_j} is nonzero (equal
// labels included), then transitively closed.
struct Heap {
  int size = 0;
  std::vector<int> labels;            // 1-based reflection index per element
  std::vector<std::uint64_t> below;   // below[p] = elements strictly under p
  std::vector<std::uint64_t> above;   // above[p] = elements strictly over p
  std::vector<std::pair<int, int>> covers;  // (upper, lower), 0-based

  bool less(int a, int b) const { return (above[a] >> b) & 1; }  // a < b

  std::uint64_t full_mask() const {
    return size == 64 ? ~0ull : ((1ull << size) - 1);
  }

  // Filter test: upward closed.
  bool is_filter(std::uint64_t s) const {
    for (int p = 0; p < size; ++p)
      if ((s >> p) & 1) {
        if ((above[p] & ~s) != 0) return false;
      }
    return true;
  }

  int height(int p) const {  // longest chain strictly below p
    int h = 0;
    for (int q = 0; q < size; ++q)
      if ((below[p] >> q) & 1) h = std::max(h, height(q) + 1);
    return h;
  }
};

namespace detail {

inline Heap heap_from_label_sequence(const RootDatum& d, const std::vector<int>& labels) {
  int l = (int)labels.size();
  if (l > 64) throw std::invalid_argument("heap size above 64 unsupported");
  Heap h;
  h.size = l;
  h.labels = labels;
  std::vector<std::vector<bool>> gt(l, std::vector<bool>(l, false));  // gt[i][j]: p_i > p_j
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (d.cartan[labels[i] - 1][labels[j] - 1] != 0) gt[i][j] = true;
  // transitive closure; all relations point from smaller to larger index
  for (int k = 0; k < l; ++k)
    for (int i = 0; i < k; ++i)
      if (gt[i][k])
        for (int j = k + 1; j < l; ++j)
          if (gt[k][j]) gt[i][j] = true;
  h.below.assign(l, 0);
  h.above.assign(l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j && i < j && gt[i][j]) {
        h.below[i] |= 1ull << j;
        h.above[j] |= 1ull << i;
      }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (gt[i][j]) {
        bool cover = true;
        for (int k = i + 1; k < j && cover; ++k)
          if (gt[i][k] && gt[k][j]) cover = false;
        if (cover) h.covers.push_back({i, j});
      }
  return h;
}

}  // namespace detail

inline Heap heap_of_word(const RootDatum& d, const WeylWord& w) {
  if (!is_reduced(d, w)) throw std::invalid_argument("heap requires a reduced word");
  return detail::heap_from_label_sequence(d, w.letters);
}

// All upward-closed subsets, sorted by indicator vector (element 0 first).
inline std::vector<std::uint64_t> filters(const Heap& h) {
  std::vector<std::uint64_t> out;
  out.push_back(0);
  // grow filters by adding maximal elements of the complement
  std::vector<std::uint64_t> frontier = {0};
  std::map<std::uint64_t, bool> seen;
  seen[0] = true;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : frontier) {
      for (int p = 0; p < h.size; ++p) {
        if ((f >> p) & 1) continue;
        if ((h.above[p] & ~f) != 0) continue;  // some element over p missing
        std::uint64_t g = f | (1ull << p);
        if (!seen[g]) {
          seen[g] = true;
          out.push_back(g);
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](std::uint64_t a, std::uint64_t b) {
    for (int p = 0; p < h.size; ++p) {
      bool ba = (a >> p) & 1, bb = (b >> p) & 1;
      if (ba != bb) return !ba;
    }
    return false;
  });
  return out;
}

inline std::vector<int> filter_indices(const Heap& h, std::uint64_t f) {
  std::vector<int> v;
  for (int p = 0; p < h.size; ++p)
    if ((f >> p) & 1) v.push_back(p + 1);
  return v;
}

// Exact count via DP over order ideals: LE(ideal) = sum over its maximal
// elements of LE(ideal minus that element).
inline Int count_linear_extensions(const Heap& h) {
  std::unordered_map<std::uint64_t, Int> memo;
  auto rec = [&](auto&& self, std::uint64_t ideal) -> Int {
    if (ideal == 0) return 1;
    auto it = memo.find(ideal);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (int p = 0; p < h.size; ++p) {
      if (!((ideal >> p) & 1)) continue;
      // p is maximal in the ideal iff nothing above p lies inside it
      if ((h.above[p] & ideal) == 0) total += self(self, ideal & ~(1ull << p));
    }
    memo[ideal] = total;
    return total;
  };
  // an "ideal" here is any downward-closed subset; start from everything
  return rec(rec, h.full_mask());
}

// Number of order-preserving maps h -> [m+1], via multichains of filters.
inline Int poset_morphism_count(const Heap& h, int m) {
  if (m < 1) throw std::invalid_argument("dilation must be >= 1");
  auto fs = filters(h);
  std::size_t n = fs.size();
  // count[t][i] = number of chains F_1 >= F_2 >= ... >= F_t with F_t = fs[i]
  std::vector<Int> cur(n, Int(1));
  for (int t = 2; t <= m; ++t) {
    std::vector<Int> next(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((fs[i] & fs[j]) == fs[i]) next[i] += cur[j];  // fs[i] subset of fs[j]
    cur = std::move(next);
  }
  Int total = 0;
  for (const Int& c : cur) total += c;
  return total;
}

// Labeled poset isomorphism by backtracking with (height, label) signatures.
inline bool heaps_isomorphic(const Heap& a, const Heap& b) {
  if (a.size != b.size) return false;
  int n = a.size;
  auto sig = [](const Heap& h, int p) {
    return std::tuple<int, int, int, int>(h.labels[p], h.height(p),
                                          __builtin_popcountll(h.below[p]),
                                          __builtin_popcountll(h.above[p]));
  };
  std::vector<int> match(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int p) -> bool {
    if (p == n) return true;
    for (int q = 0; q < n; ++q) {
      if (used[q] || sig(a, p) != sig(b, q)) continue;
      bool ok = true;
      for (int r = 0; r < p && ok; ++r) {
        bool lt1 = a.less(r, p), gt1 = a.less(p, r);
        bool lt2 = b.less(match[r], q), gt2 = b.less(q, match[r]);
        if (lt1 != lt2 || gt1 != gt2) ok = false;
      }
      if (!ok) continue;
      match[p] = q;
      used[q] = true;
      if (self(self, p + 1)) return true;
      used[q] = false;
      match[p] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Weighted heaps of f-monomials and their labeled weighted embeddings.

struct WeightedHeap {
  Heap heap;
  std::vector<int> wt;  // >= 1 per element
};

// fword entries in application order: entry 0 is the rightmost factor
// f_{i_1}^{d_1} and acts first. Zero exponents are dropped; adjacent equal
// indices are rejected.
inline WeightedHeap weighted_heap_of_fword(const RootDatum& d,
                                           const std::vector<std::pair<int, int>>& fword) {
  std::vector<int> labels;
  std::vector<int> wts;
  int last = -1;
  for (auto [gen, exp] : fword) {
    if (gen == last) throw std::invalid_argument("adjacent equal generator indices");
    last = gen;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) continue;
    labels.push_back(gen);
    wts.push_back(exp);
  }
  WeightedHeap wh;
  wh.heap = detail::heap_from_label_sequence(d, labels);
  wh.wt = wts;
  return wh;
}

// A labeled weighted embedding recorded by its image multiplicities: how many
// copies of the expanded poset land on each target element. Copies of one
// weighted element may share a target, so multiplicities can exceed 1.
struct LabeledEmbedding {
  std::vector<int> mult;                     // per target element
  std::vector<std::vector<int>> image;       // per source element: sorted targets (with repeats)
};

// Enumerates label-preserving maps from the expanded poset wt*H into the
// target heap that are strictly order-preserving across comparable pairs,
// one embedding per multiset image. Deterministic order.
inline std::vector<LabeledEmbedding> weighted_embeddings(const WeightedHeap& wh,
                                                         const Heap& target) {
  int n = wh.heap.size;
  std::vector<LabeledEmbedding> out;
  // process source elements by decreasing height, ties by element index
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> ht(n);
  for (int i = 0; i < n; ++i) ht[i] = wh.heap.height(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ht[a] != ht[b]) return ht[a] > ht[b];
    return a < b;
  });
  std::vector<std::vector<int>> chosen(n);  // per source element, sorted targets
  LabeledEmbedding cur;
  cur.mult.assign(target.size, 0);

  auto rec = [&](auto&& self, int step) -> void {
    if (step == n) {
      LabeledEmbedding e = cur;
      e.image.resize(n);
      for (int i = 0; i < n; ++i) e.image[i] = chosen[i];
      out.push_back(std::move(e));
      return;
    }
    int p = order[step];
    // admissible targets: label match plus order constraints against the
    // elements already placed
    std::vector<int> cand;
    for (int q = 0; q < target.size; ++q) {
      if (target.labels[q] != wh.heap.labels[p]) continue;
      bool ok = true;
      for (int s = 0; s < step && ok; ++s) {
        int r = order[s];
        if (wh.heap.less(p, r)) {  // p < r: q must be strictly under every image of r
          for (int x : chosen[r])
            if (!target.less(q, x)) ok = false;
        } else if (wh.heap.less(r, p)) {
          for (int x : chosen[r])
            if (!target.less(x, q)) ok = false;
        }
      }
      if (ok) cand.push_back(q);
    }
    int w = wh.wt[p];
    if ((int)cand.size() == 0 && w > 0) return;
    // multisets of size w over cand, nondecreasing
    std::vector<int> pick;
    auto multisets = [&](auto&& ms, int from) -> void {
      if ((int)pick.size() == w) {
        chosen[p] = pick;
        for (int x : pick) cur.mult[x]++;
        self(self, step + 1);
        for (int x : pick) cur.mult[x]--;
        chosen[p].clear();
        return;
      }
      for (std::size_t c = from; c < cand.size(); ++c) {
        pick.push_back(cand[c]);
        ms(ms, (int)c);
        pick.pop_back();
      }
    };
    multisets(multisets, 0);
  };
  rec(rec, 0);
  return out;
}

// Canonical application-order reading of a weighted heap: repeatedly extract
// the smallest-labeled maximal element. Two f-monomials give equal operators
// exactly when their canonical readings agree.
inline std::vector<std::pair<int, int>> canonical_fword(const WeightedHeap& wh) {
  int n = wh.heap.size;
  std::vector<bool> done(n, false);
  std::vector<std::pair<int, int>> seq;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int p = 0; p < n; ++p) {
      if (done[p]) continue;
      bool maximal = true;
      for (int q = 0; q < n && maximal; ++q)
        if (!done[q] && wh.heap.less(p, q)) maximal = false;
      if (!maximal) continue;
      if (best == -1 || wh.heap.labels[p] < wh.heap.labels[best]) best = p;
    }
    done[best] = true;
    seq.push_back({wh.heap.labels[best], wh.wt[best]});
  }
  return seq;
}

}  // namespace chevpoly
