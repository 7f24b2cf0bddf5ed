#pragma once

// Automorphisms of finite abelian groups and G-isomorphism of subgroups.

#include <functional>
#include <stdexcept>
#include <vector>

#include "abcodes/abgroup.hpp"

namespace abcodes {

struct OracleOptions {
  u64 oracle_cap = 512;  // brute-force cross-checks only run for |G| <= cap
};

class OracleUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An automorphism stored by the images of the canonical generators.
class Automorphism {
 public:
  Automorphism(AbelianGroup group, std::vector<ElementIndex> images);

  const AbelianGroup& group() const { return group_; }
  const std::vector<ElementIndex>& images() const { return images_; }
  ElementIndex apply(ElementIndex g) const;
  // perm[g] = apply(g) for every g.
  std::vector<ElementIndex> permutation() const;

 private:
  AbelianGroup group_;
  std::vector<ElementIndex> images_;
};

// Called with the images of the first `fixed` generators; returning false
// prunes every automorphism extending them.
using PrefixFilter = std::function<bool(std::size_t fixed, const std::vector<ElementIndex>& images)>;

// Calls `visit` on every automorphism of G until it returns false. Returns
// true iff the enumeration ran to completion.
bool for_each_automorphism(const AbelianGroup& group, const std::function<bool(const Automorphism&)>& visit,
                           const PrefixFilter& keep = {});

// Elements of G whose last nonzero coordinate is i - 1, for i = 1..rank:
// the elements on which theta becomes known once i images are fixed.
std::vector<std::vector<ElementIndex>> prefix_levels(const AbelianGroup& group);
// theta(g) computed from the images of the generators g actually uses.
ElementIndex apply_images(const AbelianGroup& group, const std::vector<ElementIndex>& images, ElementIndex g);
u64 automorphism_count(const AbelianGroup& group);

// Exhaustive search for theta in Aut(G) with theta(H) = K.
// Throws OracleUnavailable when |G| > oracle_cap.
bool oracle_g_isomorphic(const Subgroup& h, const Subgroup& k, u64 oracle_cap = 512);

// G-isomorphism of two cocyclic subgroups, decided by comparing abelian
// invariants. When exactly one side is G the answer is false. Cross-checked
// against the exhaustive oracle when |G| <= options.oracle_cap.
bool g_isomorphic(const Subgroup& h, const Subgroup& k, const OracleOptions& options = {});

}  // namespace abcodes
