#include "abcodes/abgroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace abcodes {

namespace {

constexpr u64 kMaxGroupOrder = u64{1} << 22;
constexpr u64 kAddTableLimit = 1024;

}  // namespace

struct AbelianGroup::Impl {
  std::vector<u64> factors;
  std::vector<u64> strides;
  u64 order = 1;
  u64 exponent = 1;
  std::vector<std::uint32_t> coords;  // order x rank
  std::vector<u64> orders;
  std::vector<ElementIndex> neg;
  std::vector<ElementIndex> add;  // order x order when order <= kAddTableLimit

  std::size_t rank() const { return factors.size(); }

  ElementIndex add_coords(ElementIndex a, ElementIndex b) const {
    const std::size_t k = rank();
    u64 out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      u64 c = u64{coords[a * k + i]} + coords[b * k + i];
      if (c >= factors[i]) c -= factors[i];
      out += c * strides[i];
    }
    return static_cast<ElementIndex>(out);
  }
};

AbelianGroup make_group(std::span<const u64> factors) {
  std::map<u64, std::vector<unsigned>> exps;
  for (u64 d : factors) {
    if (d < 2) throw std::invalid_argument("make_group: cyclic factor " + std::to_string(d) + " must be at least 2");
    for (const auto& [p, e] : factorize(d)) exps[p].push_back(e);
  }
  const IsoType chain = chain_from_prime_exponents(exps);

  auto impl = std::make_shared<AbelianGroup::Impl>();
  impl->factors = chain.factors;
  const std::size_t k = impl->factors.size();
  impl->strides.assign(k, 1);
  for (u64 d : impl->factors) {
    if (impl->order > kMaxGroupOrder / d) throw std::invalid_argument("make_group: group order exceeds 2^22");
    impl->order *= d;
  }
  impl->exponent = k == 0 ? 1 : impl->factors.back();
  for (std::size_t i = k; i-- > 1;) impl->strides[i - 1] = impl->strides[i] * impl->factors[i];

  const u64 n = impl->order;
  impl->coords.resize(n * k);
  impl->orders.resize(n);
  impl->neg.resize(n);
  for (u64 g = 0; g < n; ++g) {
    u64 order = 1;
    u64 negated = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const u64 c = (g / impl->strides[i]) % impl->factors[i];
      impl->coords[g * k + i] = static_cast<std::uint32_t>(c);
      order = lcm(order, impl->factors[i] / gcd(c, impl->factors[i]));
      negated += ((impl->factors[i] - c) % impl->factors[i]) * impl->strides[i];
    }
    impl->orders[g] = order;
    impl->neg[g] = static_cast<ElementIndex>(negated);
  }
  if (n <= kAddTableLimit) {
    impl->add.resize(n * n);
    for (u64 a = 0; a < n; ++a) {
      for (u64 b = 0; b < n; ++b) {
        impl->add[a * n + b] = impl->add_coords(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
      }
    }
  }
  return AbelianGroup(std::move(impl));
}

AbelianGroup parse_group(const std::string& text) {
  std::vector<u64> factors;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("cannot parse group '" + text + "'");
    }
    if (v != 1) factors.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == 'x' || c == 'X' || c == ',' || c == '*' || c == ' ') {
      flush();
    } else if (c == 'C' || c == 'c') {
      if (!token.empty()) throw std::invalid_argument("cannot parse group '" + text + "'");
    } else {
      token.push_back(c);
    }
  }
  flush();
  return make_group(factors);
}

const std::vector<u64>& AbelianGroup::factors() const { return impl_->factors; }
u64 AbelianGroup::order() const { return impl_->order; }
u64 AbelianGroup::exponent() const { return impl_->exponent; }

ElementIndex AbelianGroup::index_of(const GroupElement& g) const {
  if (g.coords.size() != rank()) throw std::invalid_argument("index_of: coordinate count mismatch");
  u64 idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g.coords[i] >= impl_->factors[i]) throw std::invalid_argument("index_of: coordinate out of range");
    idx += g.coords[i] * impl_->strides[i];
  }
  return static_cast<ElementIndex>(idx);
}

GroupElement AbelianGroup::element(ElementIndex g) const {
  GroupElement e;
  e.coords.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i) e.coords[i] = coord(g, i);
  return e;
}

u64 AbelianGroup::coord(ElementIndex g, std::size_t i) const { return impl_->coords[g * rank() + i]; }
u64 AbelianGroup::stride(std::size_t i) const { return impl_->strides[i]; }
ElementIndex AbelianGroup::generator(std::size_t i) const { return static_cast<ElementIndex>(impl_->strides.at(i)); }

ElementIndex AbelianGroup::add(ElementIndex a, ElementIndex b) const {
  if (!impl_->add.empty()) return impl_->add[u64{a} * impl_->order + b];
  return impl_->add_coords(a, b);
}

ElementIndex AbelianGroup::neg(ElementIndex a) const { return impl_->neg[a]; }

ElementIndex AbelianGroup::multiple(ElementIndex a, u64 k) const {
  u64 out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const u64 d = impl_->factors[i];
    out += mul_mod(coord(a, i), k % d, d) * impl_->strides[i];
  }
  return static_cast<ElementIndex>(out);
}

u64 AbelianGroup::element_order(ElementIndex a) const { return impl_->orders[a]; }

std::string AbelianGroup::name() const { return IsoType{factors()}.to_string(); }

std::string AbelianGroup::format(ElementIndex g) const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(coord(g, i));
  }
  return out + ")";
}

bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
  return x.impl_ == y.impl_ || x.impl_->factors == y.impl_->factors;
}

u64 IsoType::order() const {
  u64 n = 1;
  for (u64 d : factors) n *= d;
  return n;
}

std::string IsoType::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "x";
    out += "C" + std::to_string(factors[i]);
  }
  return out;
}

IsoType chain_from_prime_exponents(const std::map<u64, std::vector<unsigned>>& exponents) {
  std::size_t length = 0;
  std::map<u64, std::vector<unsigned>> sorted;
  for (const auto& [p, es] : exponents) {
    auto& v = sorted[p];
    for (unsigned e : es) {
      if (e > 0) v.push_back(e);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    length = std::max(length, v.size());
  }
  // Largest invariant factor collects the largest prime power of every prime.
  std::vector<u64> chain(length, 1);
  for (const auto& [p, es] : sorted) {
    for (std::size_t j = 0; j < es.size(); ++j) chain[length - 1 - j] *= ipow(p, es[j]);
  }
  return IsoType{chain};
}

IsoType iso_type_from_order_census(const std::map<u64, u64>& order_counts) {
  u64 total = 0;
  for (const auto& [order, count] : order_counts) total += count;
  if (total == 0) throw std::invalid_argument("iso_type_from_order_census: empty census");
  std::map<u64, std::vector<unsigned>> exps;
  for (const auto& [p, e_total] : factorize(total)) {
    // rank_at_least[j] = number of cyclic p-factors of exponent >= j.
    std::vector<unsigned> log_count{0};
    for (unsigned j = 1; log_count.back() < e_total; ++j) {
      const u64 pj = ipow(p, j);
      u64 c = 0;
      for (const auto& [order, count] : order_counts) {
        if (pj % order == 0) c += count;
      }
      const unsigned lg = valuation(c, p);
      if (ipow(p, lg) != c) throw std::invalid_argument("iso_type_from_order_census: census is not from an abelian group");
      log_count.push_back(lg);
      if (j > 64) throw std::invalid_argument("iso_type_from_order_census: inconsistent census");
    }
    std::vector<unsigned> at_least(log_count.size() + 1, 0);
    for (std::size_t j = 1; j < log_count.size(); ++j) at_least[j] = log_count[j] - log_count[j - 1];
    auto& v = exps[p];
    for (std::size_t j = 1; j < log_count.size(); ++j) {
      const unsigned exactly = at_least[j] - at_least[j + 1];
      for (unsigned r = 0; r < exactly; ++r) v.push_back(static_cast<unsigned>(j));
    }
  }
  return chain_from_prime_exponents(exps);
}

Subgroup::Subgroup(AbelianGroup parent, std::vector<ElementIndex> sorted_elements)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {
  // Greedy minimal generating set: each pick has maximal order modulo the
  // current span, which peels off one invariant factor at a time.
  std::vector<char> span(parent_.order(), 0);
  std::vector<ElementIndex> span_list{parent_.identity()};
  span[parent_.identity()] = 1;
  while (span_list.size() < elements_.size()) {
    ElementIndex best = 0;
    u64 best_order = 0;
    for (ElementIndex g : elements_) {
      if (span[g]) continue;
      u64 k = 1;
      ElementIndex x = g;
      while (!span[x]) {
        x = parent_.add(x, g);
        ++k;
      }
      if (k > best_order) {
        best_order = k;
        best = g;
      }
    }
    generators_.push_back(best);
    std::vector<ElementIndex> grown;
    grown.reserve(span_list.size() * best_order);
    ElementIndex step = parent_.identity();
    for (u64 k = 0; k < best_order; ++k) {
      for (ElementIndex s : span_list) grown.push_back(parent_.add(s, step));
      step = parent_.add(step, best);
    }
    for (ElementIndex x : grown) span[x] = 1;
    span_list = std::move(grown);
  }
}

Subgroup Subgroup::generated_by(const AbelianGroup& group, std::span<const ElementIndex> gens) {
  std::vector<char> in(group.order(), 0);
  std::vector<ElementIndex> list{group.identity()};
  in[group.identity()] = 1;
  for (ElementIndex g : gens) {
    if (g >= group.order()) throw std::invalid_argument("generated_by: element index out of range");
    if (in[g]) continue;
    const std::size_t base = list.size();
    ElementIndex step = g;
    while (!in[step]) {
      for (std::size_t i = 0; i < base; ++i) {
        const ElementIndex x = group.add(list[i], step);
        if (!in[x]) {
          in[x] = 1;
          list.push_back(x);
        }
      }
      step = group.add(step, g);
    }
  }
  std::sort(list.begin(), list.end());
  return Subgroup(group, std::move(list));
}

Subgroup Subgroup::from_elements(const AbelianGroup& group, std::vector<ElementIndex> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> in(group.order(), 0);
  for (ElementIndex g : elements) {
    if (g >= group.order()) throw std::invalid_argument("from_elements: element index out of range");
    in[g] = 1;
  }
  if (elements.empty() || !in[group.identity()]) throw std::invalid_argument("from_elements: identity missing");
  for (ElementIndex a : elements) {
    if (!in[group.neg(a)]) throw std::invalid_argument("from_elements: not closed under negation");
    for (ElementIndex b : elements) {
      if (!in[group.add(a, b)]) throw std::invalid_argument("from_elements: not closed under addition");
    }
  }
  return Subgroup(group, std::move(elements));
}

Subgroup Subgroup::whole(const AbelianGroup& group) {
  std::vector<ElementIndex> all(group.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  return Subgroup(group, std::move(all));
}

Subgroup Subgroup::trivial(const AbelianGroup& group) { return Subgroup(group, {group.identity()}); }

bool Subgroup::contains(ElementIndex g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

std::vector<char> Subgroup::mask() const {
  std::vector<char> m(parent_.order(), 0);
  for (ElementIndex g : elements_) m[g] = 1;
  return m;
}

std::string Subgroup::to_string() const {
  if (generators_.empty()) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ",";
    out += parent_.format(generators_[i]);
  }
  return out + ">";
}

bool operator<(const Subgroup& x, const Subgroup& y) {
  if (x.index() != y.index()) return x.index() < y.index();
  return x.elements_ < y.elements_;
}

ElementIndex SylowComponent::embed(const AbelianGroup& ambient, ElementIndex local) const {
  u64 idx = 0;
  for (std::size_t j = 0; j < factor.size(); ++j) {
    const std::size_t i = factor[j];
    idx += mul_mod(group.coord(local, j), multiplier[j], ambient.factors()[i]) * ambient.stride(i);
  }
  return static_cast<ElementIndex>(idx);
}

std::vector<SylowComponent> sylow_decomposition(const AbelianGroup& group) {
  std::vector<SylowComponent> out;
  for (u64 p : prime_divisors(group.order() == 0 ? 1 : group.order())) {
    std::vector<u64> parts;
    std::vector<std::size_t> index;
    std::vector<u64> mult;
    for (std::size_t i = 0; i < group.rank(); ++i) {
      const u64 d = group.factors()[i];
      const u64 pp = ipow(p, valuation(d, p));
      if (pp == 1) continue;
      parts.push_back(pp);
      index.push_back(i);
      mult.push_back(d / pp);
    }
    SylowComponent c{p, make_group(parts), index, mult, Subgroup::trivial(group)};
    // The factors are already a chain, so make_group keeps their order.
    std::vector<ElementIndex> image;
    image.reserve(c.group.order());
    for (ElementIndex x = 0; x < c.group.order(); ++x) image.push_back(c.embed(group, x));
    c.subgroup = Subgroup::from_elements(group, std::move(image));
    out.push_back(std::move(c));
  }
  return out;
}

Subgroup sylow_part(const Subgroup& h, u64 p) {
  std::vector<ElementIndex> part;
  for (ElementIndex g : h.elements()) {
    u64 o = h.parent().element_order(g);
    while (o % p == 0) o /= p;
    if (o == 1) part.push_back(g);
  }
  return Subgroup::generated_by(h.parent(), part);
}

ExponentTau exponent_tau(const AbelianGroup& group) {
  return {group.exponent(), static_cast<u64>(divisors(group.exponent()).size())};
}

bool is_p_group(const AbelianGroup& group) { return group.order() > 1 && prime_divisors(group.order()).size() == 1; }

bool is_homocyclic(const AbelianGroup& group) {
  const auto& f = group.factors();
  return std::all_of(f.begin(), f.end(), [&](u64 d) { return d == f.back(); });
}

bool sylows_homocyclic(const AbelianGroup& group) {
  for (const auto& c : sylow_decomposition(group)) {
    if (!is_homocyclic(c.group)) return false;
  }
  return true;
}

bool is_elementary_abelian(const AbelianGroup& group) {
  return is_p_group(group) && is_homocyclic(group) && is_prime(group.exponent());
}

u64 order_modulo(const Subgroup& h, ElementIndex g) {
  const auto& G = h.parent();
  u64 k = 1;
  ElementIndex x = g;
  while (!h.contains(x)) {
    x = G.add(x, g);
    ++k;
  }
  return k;
}

IsoType iso_type(const AbelianGroup& group) { return IsoType{group.factors()}; }

IsoType iso_type(const Subgroup& h) {
  std::map<u64, u64> census;
  for (ElementIndex g : h.elements()) ++census[h.parent().element_order(g)];
  return iso_type_from_order_census(census);
}

IsoType quotient_iso_type(const Subgroup& h) {
  const auto& G = h.parent();
  const auto in = h.mask();
  std::map<u64, u64> census;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    u64 k = 1;
    ElementIndex x = g;
    while (!in[x]) {
      x = G.add(x, g);
      ++k;
    }
    ++census[k];
  }
  for (auto& [order, count] : census) count /= h.order();
  return iso_type_from_order_census(census);
}

bool is_cocyclic(const Subgroup& h) { return !h.is_whole() && quotient_iso_type(h).factors.size() == 1; }

std::vector<Subgroup> cocyclic_subgroups(const AbelianGroup& group) {
  const std::size_t k = group.rank();
  const u64 L = group.exponent();
  std::vector<u64> weight(k);
  for (std::size_t i = 0; i < k; ++i) weight[i] = L / group.factors()[i];

  std::vector<Subgroup> out;
  // The dual group has the same shape as G; y pairs with g via
  // sum y_i g_i L/d_i mod L. One kernel per cyclic subgroup <y> of the dual,
  // taking y to be the smallest generator of <y>.
  for (ElementIndex y = 1; y < group.order(); ++y) {
    const u64 oy = group.element_order(y);
    bool canonical = true;
    for (u64 u = 2; u < oy && canonical; ++u) {
      if (gcd(u, oy) == 1 && group.multiple(y, u) < y) canonical = false;
    }
    if (!canonical) continue;
    std::vector<ElementIndex> kernel;
    for (ElementIndex g = 0; g < group.order(); ++g) {
      u64 s = 0;
      for (std::size_t i = 0; i < k; ++i) s = (s + mul_mod(group.coord(y, i) * weight[i] % L, group.coord(g, i), L)) % L;
      if (s == 0) kernel.push_back(g);
    }
    out.push_back(Subgroup::from_elements(group, std::move(kernel)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup star_within(const Subgroup& ambient, const Subgroup& h, u64 p) {
  const auto& G = ambient.parent();
  std::vector<ElementIndex> out;
  for (ElementIndex a : ambient.elements()) {
    if (h.contains(G.multiple(a, p))) out.push_back(a);
  }
  return Subgroup::generated_by(G, out);
}

Subgroup star(const Subgroup& h) {
  const auto& G = h.parent();
  if (!is_p_group(G)) throw std::invalid_argument("star: " + G.name() + " is not a p-group");
  if (h.is_whole()) throw std::invalid_argument("star: H = G has no H*");
  if (!is_cocyclic(h)) throw std::invalid_argument("star: " + h.to_string() + " is not cocyclic");
  return star_within(Subgroup::whole(G), h, prime_divisors(G.order()).front());
}

std::string describe(const Subgroup& h) {
  if (h.is_whole()) return "G";
  return "H=" + h.to_string() + " ~ " + iso_type(h).to_string();
}

Quotient make_quotient(const Subgroup& t) {
  const auto& G = t.parent();
  const IsoType qt = quotient_iso_type(t);
  Quotient q{make_group(qt.factors), {}, {}};

  // Adapted basis, largest invariant factor first: each x has order exactly
  // d in G/T and meets the current span only in T.
  std::vector<char> span = t.mask();
  std::vector<ElementIndex> span_list = t.elements();
  std::vector<ElementIndex> basis(qt.factors.size(), 0);
  for (std::size_t j = qt.factors.size(); j-- > 0;) {
    const u64 d = qt.factors[j];
    bool found = false;
    for (ElementIndex g = 0; g < G.order() && !found; ++g) {
      if (!t.contains(G.multiple(g, d))) continue;
      u64 k = 1;
      ElementIndex x = g;
      while (!span[x]) {
        x = G.add(x, g);
        ++k;
      }
      if (k != d) continue;
      found = true;
      basis[j] = g;
      std::vector<ElementIndex> grown;
      grown.reserve(span_list.size() * d);
      ElementIndex step = G.identity();
      for (u64 m = 0; m < d; ++m) {
        for (ElementIndex s : span_list) grown.push_back(G.add(s, step));
        step = G.add(step, g);
      }
      for (ElementIndex x2 : grown) span[x2] = 1;
      span_list = std::move(grown);
    }
    if (!found) throw std::logic_error("make_quotient: no adapted basis element found");
  }
  if (span_list.size() != G.order()) throw std::logic_error("make_quotient: adapted basis does not span G/T");

  q.projection.assign(G.order(), 0);
  q.representative.assign(q.group.order(), 0);
  for (ElementIndex c = 0; c < q.group.order(); ++c) {
    ElementIndex rep = G.identity();
    for (std::size_t j = 0; j < basis.size(); ++j) rep = G.add(rep, G.multiple(basis[j], q.group.coord(c, j)));
    ElementIndex smallest = rep;
    for (ElementIndex x : t.elements()) {
      const ElementIndex y = G.add(rep, x);
      q.projection[y] = c;
      smallest = std::min(smallest, y);
    }
    q.representative[c] = smallest;
  }
  return q;
}

}  // namespace abcodes
