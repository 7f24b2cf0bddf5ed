#include "abcodes/automorphism.hpp"

namespace abcodes {

Automorphism::Automorphism(AbelianGroup group, std::vector<ElementIndex> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (images_.size() != group_.rank()) throw std::invalid_argument("Automorphism: one image per generator required");
}

ElementIndex apply_images(const AbelianGroup& group, const std::vector<ElementIndex>& images, ElementIndex g) {
  ElementIndex out = group.identity();
  for (std::size_t i = 0; i < images.size(); ++i) {
    const u64 c = group.coord(g, i);
    if (c != 0) out = group.add(out, group.multiple(images[i], c));
  }
  return out;
}

std::vector<std::vector<ElementIndex>> prefix_levels(const AbelianGroup& group) {
  std::vector<std::vector<ElementIndex>> levels(group.rank() + 1);
  for (ElementIndex g = 1; g < group.order(); ++g) {
    std::size_t j = group.rank();
    while (group.coord(g, j - 1) == 0) --j;
    levels[j].push_back(g);
  }
  return levels;
}

ElementIndex Automorphism::apply(ElementIndex g) const { return apply_images(group_, images_, g); }

std::vector<ElementIndex> Automorphism::permutation() const {
  const std::size_t k = group_.rank();
  std::vector<ElementIndex> perm(group_.order(), group_.identity());
  for (ElementIndex g = 1; g < group_.order(); ++g) {
    std::size_t j = k;
    while (group_.coord(g, j - 1) == 0) --j;
    --j;
    perm[g] = group_.add(perm[g - group_.stride(j)], images_[j]);
  }
  return perm;
}

namespace {

struct AutSearch {
  const AbelianGroup& group;
  const std::function<bool(const Automorphism&)>& visit;
  const PrefixFilter& keep;
  std::vector<ElementIndex> images;

  // span holds the subgroup generated by images[0..level).
  bool run(std::size_t level, const std::vector<char>& span, const std::vector<ElementIndex>& span_list) {
    if (level == group.rank()) return visit(Automorphism(group, images));
    const u64 d = group.factors()[level];
    for (ElementIndex x = 0; x < group.order(); ++x) {
      if (group.element_order(x) != d) continue;
      u64 k = 1;
      ElementIndex y = x;
      while (!span[y]) {
        y = group.add(y, x);
        ++k;
      }
      if (k != d) continue;
      std::vector<char> next(span);
      std::vector<ElementIndex> next_list;
      next_list.reserve(span_list.size() * d);
      ElementIndex step = group.identity();
      for (u64 m = 0; m < d; ++m) {
        for (ElementIndex s : span_list) next_list.push_back(group.add(s, step));
        step = group.add(step, x);
      }
      for (ElementIndex z : next_list) next[z] = 1;
      images[level] = x;
      if (keep && !keep(level + 1, images)) continue;
      if (!run(level + 1, next, next_list)) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_automorphism(const AbelianGroup& group, const std::function<bool(const Automorphism&)>& visit,
                           const PrefixFilter& keep) {
  AutSearch search{group, visit, keep, std::vector<ElementIndex>(group.rank(), 0)};
  std::vector<char> span(group.order(), 0);
  span[group.identity()] = 1;
  return search.run(0, span, {group.identity()});
}

u64 automorphism_count(const AbelianGroup& group) {
  u64 n = 0;
  for_each_automorphism(group, [&](const Automorphism&) {
    ++n;
    return true;
  });
  return n;
}

bool oracle_g_isomorphic(const Subgroup& h, const Subgroup& k, u64 oracle_cap) {
  const AbelianGroup& G = h.parent();
  if (!(k.parent() == G)) throw std::invalid_argument("oracle_g_isomorphic: subgroups of different groups");
  if (G.order() > oracle_cap) {
    throw OracleUnavailable("oracle_g_isomorphic: |G| = " + std::to_string(G.order()) + " exceeds oracle cap " +
                            std::to_string(oracle_cap));
  }
  if (h.order() != k.order()) return false;
  const auto in_k = k.mask();
  const auto in_h = h.mask();
  const auto levels = prefix_levels(G);
  // theta(H) is contained in K iff it holds on every element of H; checking
  // the elements already determined by a prefix prunes the search.
  const PrefixFilter keep = [&](std::size_t fixed, const std::vector<ElementIndex>& images) {
    for (ElementIndex g : levels[fixed]) {
      if (in_h[g] && !in_k[apply_images(G, images, g)]) return false;
    }
    return true;
  };
  bool found = false;
  for_each_automorphism(
      G,
      [&](const Automorphism& theta) {
        for (ElementIndex g : h.elements()) {
          if (!in_k[theta.apply(g)]) return true;
        }
        found = true;
        return false;
      },
      keep);
  return found;
}

bool g_isomorphic(const Subgroup& h, const Subgroup& k, const OracleOptions& options) {
  const AbelianGroup& G = h.parent();
  if (!(k.parent() == G)) throw std::invalid_argument("g_isomorphic: subgroups of different groups");
  if (h.is_whole() || k.is_whole()) {
    return h.is_whole() && k.is_whole();
  }
  if (!is_cocyclic(h)) throw std::invalid_argument("g_isomorphic: " + h.to_string() + " is not cocyclic");
  if (!is_cocyclic(k)) throw std::invalid_argument("g_isomorphic: " + k.to_string() + " is not cocyclic");
  const bool fast = iso_type(h) == iso_type(k);
  if (G.order() <= options.oracle_cap && oracle_g_isomorphic(h, k, options.oracle_cap) != fast) {
    throw std::logic_error("g_isomorphic: invariant test disagrees with exhaustive search for " + h.to_string() +
                           " and " + k.to_string());
  }
  return fast;
}

}  // namespace abcodes
