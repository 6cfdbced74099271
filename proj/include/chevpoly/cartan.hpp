#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevpoly/rational.hpp"

namespace chevpoly {

struct CartanType {
  char family = 'A';
  int rank = 1;

  static CartanType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Cartan type: " + s);
    CartanType t;
    t.family = s[0];
    t.rank = std::stoi(s.substr(1));
    t.validate();
    return t;
  }

  void validate() const {
    auto bad = [&] { throw std::invalid_argument("invalid rank for family " + str()); };
    switch (family) {
      case 'A':
        if (rank < 1) bad();
        break;
      case 'B':
      case 'C':
        if (rank < 2) bad();
        break;
      case 'D':
        if (rank < 3) bad();
        break;
      case 'E':
        if (rank < 6 || rank > 8) bad();
        break;
      case 'F':
        if (rank != 4) bad();
        break;
      case 'G':
        if (rank != 2) bad();
        break;
      default:
        throw std::invalid_argument("unknown family in Cartan type");
    }
  }

  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

// Weight in fundamental-weight coordinates.
using Weight = std::vector<Int>;

struct Root {
  std::vector<Int> simple;   // coordinates in the simple roots
  std::vector<Int> cosimple; // coroot coordinates in the simple coroots
};

// Cartan matrix entry convention: a[i][j] = <alpha_j, alpha_i^vee>.
inline std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 1-based
  auto set = [&](int i, int j, int v) { a[i - 1][j - 1] = v; };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i - 1, i);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) link(i - 1, i);
      set(n - 1, n, -1), set(n, n - 1, -2);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) link(i - 1, i);
      set(n - 1, n, -2), set(n, n - 1, -1);
      break;
    case 'D':
      for (int i = 1; i + 2 < n; ++i) link(i - 1, i);
      if (n >= 3) {
        link(n - 3, n - 2);
        link(n - 3, n - 1);
      }
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 4; i < n; ++i) link(i - 1, i);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      set(2, 3, -1), set(3, 2, -2);
      break;
    case 'G':
      set(1, 2, -3), set(2, 1, -1);
      break;
  }
  return a;
}

struct RootDatum {
  CartanType type;
  std::vector<std::vector<int>> cartan;  // a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Root> positive_roots;
  Weight rho;

  int rank() const { return type.rank; }

  // <lambda, alpha_i^vee> for lambda in fundamental-weight coordinates (0-based i).
  Int pair_simple_coroot(const Weight& lambda, int i) const { return lambda[i]; }

  // <lambda, beta^vee> for a coroot given in simple-coroot coordinates.
  Int pair_coroot(const Weight& lambda, const std::vector<Int>& cosimple) const {
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s += cosimple[j] * lambda[j];
    return s;
  }

  // alpha_j in fundamental-weight coordinates: column j of the Cartan matrix.
  Weight simple_root_fw(int j) const {
    Weight w(rank());
    for (int i = 0; i < rank(); ++i) w[i] = cartan[i][j];
    return w;
  }

  Weight root_fw(const std::vector<Int>& simple) const {
    Weight w(rank(), Int(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) w[i] += Int(cartan[i][j]) * simple[j];
    return w;
  }
};

inline int classical_positive_root_count(const CartanType& t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

inline RootDatum build_root_datum(const CartanType& type) {
  type.validate();
  RootDatum d;
  d.type = type;
  d.cartan = cartan_matrix(type);
  int n = type.rank;

  // Generate the full root system as the reflection closure of the simple
  // roots, tracking coroot coordinates alongside.
  std::set<std::vector<Int>> seen;
  std::vector<Root> pool;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.simple.assign(n, Int(0));
    r.cosimple.assign(n, Int(0));
    r.simple[i] = 1;
    r.cosimple[i] = 1;
    pool.push_back(r);
    seen.insert(r.simple);
  }
  for (std::size_t head = 0; head < pool.size(); ++head) {
    Root cur = pool[head];
    for (int i = 0; i < n; ++i) {
      // s_i on root coordinates: beta - <beta, alpha_i^vee> alpha_i
      Int k = 0;
      for (int j = 0; j < n; ++j) k += Int(d.cartan[i][j]) * cur.simple[j];
      Root img = cur;
      img.simple[i] -= k;
      // s_i on coroot coordinates: beta^vee - <alpha_i, beta^vee> alpha_i^vee
      Int kc = 0;
      for (int j = 0; j < n; ++j) kc += Int(d.cartan[j][i]) * cur.cosimple[j];
      img.cosimple[i] -= kc;
      if (seen.insert(img.simple).second) pool.push_back(img);
    }
  }
  for (const Root& r : pool) {
    bool pos = true;
    for (const Int& c : r.simple)
      if (c < 0) pos = false;
    if (pos) d.positive_roots.push_back(r);
  }
  std::sort(d.positive_roots.begin(), d.positive_roots.end(),
            [](const Root& a, const Root& b) { return a.simple < b.simple; });
  if ((int)d.positive_roots.size() != classical_positive_root_count(type))
    throw std::logic_error("positive root count mismatch for " + type.str());

  d.rho.assign(n, Int(1));
  return d;
}

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, 1-based index.
inline Weight apply_reflection(const RootDatum& d, int i, const Weight& lambda) {
  if (i < 1 || i > d.rank()) throw std::invalid_argument("reflection index out of range");
  Int k = lambda[i - 1];
  Weight r = lambda;
  for (int row = 0; row < d.rank(); ++row) r[row] -= k * Int(d.cartan[row][i - 1]);
  return r;
}

inline Int height(const std::vector<Int>& simple_coords) {
  Int s = 0;
  for (const Int& c : simple_coords) s += c;
  return s;
}

inline bool is_dominant(const Weight& w) {
  for (const Int& c : w)
    if (c < 0) return false;
  return true;
}

// Weyl dimension formula: prod <lambda+rho, a^vee> / <rho, a^vee>.
inline Int weyl_dimension(const RootDatum& d, const Weight& lambda) {
  Rat dim = 1;
  Weight lr = lambda;
  for (int i = 0; i < d.rank(); ++i) lr[i] += 1;
  for (const Root& a : d.positive_roots)
    dim *= Rat(d.pair_coroot(lr, a.cosimple), d.pair_coroot(d.rho, a.cosimple));
  return to_int(dim);
}

}  // namespace chevpoly
