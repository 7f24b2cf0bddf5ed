#pragma once

// Seeded generators and brute-force oracles shared by the unit tests.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abcodes/automorphism.hpp"
#include "abcodes/galgebra.hpp"

namespace testing {

using namespace abcodes;

inline u64 seed() {
  if (const char* s = std::getenv("ABCODES_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

class Gen {
 public:
  explicit Gen(u64 salt = 0) : rng_(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  u64 below(u64 n) { return std::uniform_int_distribution<u64>(0, n - 1)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  Field field(const std::vector<u64>& orders = {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 49, 64, 81, 125, 256}) {
    return field_of_order(pick(orders));
  }

  // Invariant factors drawn from small prime powers, order at most max_order.
  AbelianGroup group(u64 max_order = 200, const std::vector<u64>& parts = {2, 3, 4, 5, 7, 8, 9, 25, 27}) {
    std::vector<u64> factors;
    u64 order = 1;
    const u64 rank = 1 + below(3);
    for (u64 i = 0; i < rank; ++i) {
      const u64 d = pick(parts);
      if (order * d > max_order) continue;
      factors.push_back(d);
      order *= d;
    }
    if (factors.empty()) factors.push_back(3);
    return make_group(factors);
  }

  AlgebraElement element(const AbelianGroup& g, const Field& f, double density = 0.5) {
    std::vector<Field::Elem> c(g.order(), 0);
    for (auto& x : c) {
      if (std::uniform_real_distribution<double>(0, 1)(rng_) < density) x = static_cast<Field::Elem>(below(f.order()));
    }
    return AlgebraElement(g, f, c);
  }

 private:
  std::mt19937_64 rng_;
};

// Every subgroup of a group of rank at most 3, by closing all sets of at most
// three generators.
inline std::vector<std::vector<ElementIndex>> all_subgroups(const AbelianGroup& g) {
  const u64 n = g.order();
  auto close = [&](std::vector<ElementIndex> gens) {
    std::set<ElementIndex> s{g.identity()};
    std::vector<ElementIndex> frontier{g.identity()};
    while (!frontier.empty()) {
      const ElementIndex x = frontier.back();
      frontier.pop_back();
      for (ElementIndex y : gens) {
        const ElementIndex z = g.add(x, y);
        if (s.insert(z).second) frontier.push_back(z);
      }
    }
    return std::vector<ElementIndex>(s.begin(), s.end());
  };
  std::set<std::vector<ElementIndex>> out;
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = a; b < n; ++b) {
      if (g.rank() < 2 && b != a) break;
      for (ElementIndex c = b; c < n; ++c) {
        if (g.rank() < 3 && c != b) break;
        out.insert(close({a, b, c}));
      }
    }
  }
  return {out.begin(), out.end()};
}

// Smallest k > 0 with k g in the subgroup given as a sorted element list.
inline u64 coset_order(const AbelianGroup& g, const std::vector<ElementIndex>& h, ElementIndex x) {
  u64 k = 1;
  for (ElementIndex y = x; !std::binary_search(h.begin(), h.end(), y); y = g.add(y, x)) ++k;
  return k;
}

inline bool quotient_is_cyclic(const AbelianGroup& g, const std::vector<ElementIndex>& h) {
  const u64 index = g.order() / h.size();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (coset_order(g, h, x) == index) return true;
  }
  return false;
}

// Automorphisms as full permutations, by trying every tuple of generator
// images and keeping the bijective homomorphisms.
inline std::vector<std::vector<ElementIndex>> brute_automorphisms(const AbelianGroup& g) {
  const std::size_t r = g.rank();
  const u64 n = g.order();
  std::vector<std::vector<ElementIndex>> out;
  std::vector<ElementIndex> img(r, 0);
  while (true) {
    bool hom = true;
    for (std::size_t i = 0; i < r && hom; ++i) hom = g.factors()[i] % g.element_order(img[i]) == 0;
    if (hom) {
      std::vector<ElementIndex> perm(n);
      std::vector<char> seen(n, 0);
      bool bij = true;
      for (ElementIndex x = 0; x < n && bij; ++x) {
        ElementIndex y = g.identity();
        for (std::size_t i = 0; i < r; ++i) y = g.add(y, g.multiple(img[i], g.coord(x, i)));
        perm[x] = y;
        bij = !seen[y];
        seen[y] = 1;
      }
      if (bij) out.push_back(perm);
    }
    std::size_t i = 0;
    while (i < r && ++img[i] == n) img[i++] = 0;
    if (i == r) break;
  }
  return out;
}

// Codewords of F_qG e, as the set of all products alpha e.
inline std::set<std::vector<Field::Elem>> all_products(const AlgebraElement& e) {
  const AbelianGroup& g = e.group();
  const Field& f = e.field();
  std::set<std::vector<Field::Elem>> out;
  std::vector<Field::Elem> c(g.order(), 0);
  while (true) {
    out.insert((AlgebraElement(g, f, c) * e).coeffs());
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == f.order()) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

}  // namespace testing
