#pragma once

// Finite abelian groups in invariant-factor form.
//
// A group C_{d_1} x ... x C_{d_k} with d_1 | d_2 | ... | d_k is stored with its
// elements numbered in lexicographic order of their coordinate vectors (first
// coordinate most significant). Every algorithm works on these indices;
// `GroupElement` is the coordinate form used at API boundaries.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "abcodes/numtheory.hpp"

namespace abcodes {

using ElementIndex = std::uint32_t;

struct GroupElement {
  std::vector<u64> coords;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class AbelianGroup {
 public:
  const std::vector<u64>& factors() const;
  u64 order() const;
  u64 exponent() const;
  std::size_t rank() const { return factors().size(); }
  bool is_trivial() const { return order() == 1; }

  ElementIndex identity() const { return 0; }
  ElementIndex index_of(const GroupElement& g) const;
  GroupElement element(ElementIndex g) const;
  u64 coord(ElementIndex g, std::size_t i) const;
  u64 stride(std::size_t i) const;
  // Unit vector in coordinate i.
  ElementIndex generator(std::size_t i) const;

  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex neg(ElementIndex a) const;
  ElementIndex sub(ElementIndex a, ElementIndex b) const { return add(a, neg(b)); }
  ElementIndex multiple(ElementIndex a, u64 k) const;
  u64 element_order(ElementIndex a) const;

  // "C3xC9"; "1" for the trivial group.
  std::string name() const;
  // "(3,0)"; "()" in the trivial group.
  std::string format(ElementIndex g) const;

  friend bool operator==(const AbelianGroup& x, const AbelianGroup& y);

 private:
  struct Impl;
  explicit AbelianGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend AbelianGroup make_group(std::span<const u64> factors);
};

// Normalizes any list of cyclic orders (each >= 2) to the canonical
// divisibility chain. An empty list gives the trivial group.
AbelianGroup make_group(std::span<const u64> factors);
inline AbelianGroup make_group(std::initializer_list<u64> factors) {
  return make_group(std::span<const u64>(factors.begin(), factors.size()));
}
// Accepts "9x3", "9,3", "C9xC3" and "1" (trivial).
AbelianGroup parse_group(const std::string& text);

// Abelian invariants of a finite abelian group (canonical divisibility chain).
struct IsoType {
  std::vector<u64> factors;

  u64 order() const;
  std::string to_string() const;
  friend auto operator<=>(const IsoType&, const IsoType&) = default;
};

// Canonical chain from per-prime exponent multisets.
IsoType chain_from_prime_exponents(const std::map<u64, std::vector<unsigned>>& exponents);
// Recovers the invariants of a finite abelian group from the number of
// elements of each order.
IsoType iso_type_from_order_census(const std::map<u64, u64>& order_counts);

class Subgroup {
 public:
  static Subgroup generated_by(const AbelianGroup& group, std::span<const ElementIndex> gens);
  // Validates closure; `elements` may be in any order.
  static Subgroup from_elements(const AbelianGroup& group, std::vector<ElementIndex> elements);
  static Subgroup whole(const AbelianGroup& group);
  static Subgroup trivial(const AbelianGroup& group);

  const AbelianGroup& parent() const { return parent_; }
  // Sorted ascending.
  const std::vector<ElementIndex>& elements() const { return elements_; }
  // Minimal generating list, each generator the smallest element of maximal
  // order modulo the span of the previous ones.
  const std::vector<ElementIndex>& generators() const { return generators_; }
  u64 order() const { return elements_.size(); }
  u64 index() const { return parent_.order() / order(); }
  bool is_whole() const { return order() == parent_.order(); }
  bool contains(ElementIndex g) const;
  std::vector<char> mask() const;

  // "<(3,0),(0,1)>"; "1" for the trivial subgroup.
  std::string to_string() const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) { return x.elements_ == y.elements_; }
  // Canonical order: index in the parent first, then element sets.
  friend bool operator<(const Subgroup& x, const Subgroup& y);

 private:
  Subgroup(AbelianGroup parent, std::vector<ElementIndex> sorted_elements);

  AbelianGroup parent_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> generators_;
};

struct SylowComponent {
  u64 prime;
  AbelianGroup group;                 // canonical form of G_p
  std::vector<std::size_t> factor;    // coordinate j of G_p lives in factor[j] of G
  std::vector<u64> multiplier;        // ... scaled by multiplier[j] = d / p-part(d)
  Subgroup subgroup;                  // G_p as a subgroup of G

  ElementIndex embed(const AbelianGroup& ambient, ElementIndex local) const;
};

std::vector<SylowComponent> sylow_decomposition(const AbelianGroup& group);
// Elements of H whose order is a power of p.
Subgroup sylow_part(const Subgroup& h, u64 p);

struct ExponentTau {
  u64 exponent;
  u64 tau;  // number of divisors of the exponent
};
ExponentTau exponent_tau(const AbelianGroup& group);

bool is_p_group(const AbelianGroup& group);
bool is_homocyclic(const AbelianGroup& group);
bool sylows_homocyclic(const AbelianGroup& group);
bool is_elementary_abelian(const AbelianGroup& group);

bool is_cocyclic(const Subgroup& h);
// All H < G with G/H cyclic, sorted by (index, element set).
std::vector<Subgroup> cocyclic_subgroups(const AbelianGroup& group);

// For cocyclic H in a p-group: the unique H* >= H with [H*:H] = p.
Subgroup star(const Subgroup& h);
// Same construction inside the p-subgroup `ambient` of a larger group:
// { a in ambient : p a in H }.
Subgroup star_within(const Subgroup& ambient, const Subgroup& h, u64 p);

IsoType iso_type(const AbelianGroup& group);
IsoType iso_type(const Subgroup& h);
IsoType quotient_iso_type(const Subgroup& h);
// Order of g in G/H.
u64 order_modulo(const Subgroup& h, ElementIndex g);

// "H=<(3,0),(0,1)> ~ C3xC3", or "G" for the whole group.
std::string describe(const Subgroup& h);

// Explicit isomorphism G/T -> canonical group.
struct Quotient {
  AbelianGroup group;
  std::vector<ElementIndex> projection;       // G index -> quotient index
  std::vector<ElementIndex> representative;   // quotient index -> smallest coset member
};
Quotient make_quotient(const Subgroup& t);

}  // namespace abcodes
