#include <algorithm>

#include "abcodes/workbench.hpp"

namespace abcodes {

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AbelianGroup> groups_of_order(u64 n) {
  if (n == 0) throw std::invalid_argument("groups_of_order: order must be positive");
  std::vector<std::map<u64, std::vector<unsigned>>> shapes{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::map<u64, std::vector<unsigned>>> next;
    for (const auto& shape : shapes) {
      for (const auto& part : parts) {
        auto s = shape;
        s[p] = part;
        next.push_back(std::move(s));
      }
    }
    shapes = std::move(next);
  }
  std::vector<AbelianGroup> out;
  for (const auto& shape : shapes) out.push_back(make_group(chain_from_prime_exponents(shape).factors));
  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) { return a.factors() < b.factors(); });
  return out;
}

std::vector<AbelianGroup> catalog_groups(const CatalogSpec& spec) {
  if (spec.max_order < 1) throw std::invalid_argument("catalog: max order must be at least 1");
  std::vector<AbelianGroup> out;
  for (u64 n = 1; n <= spec.max_order; ++n) {
    if (spec.odd_only && n % 2 == 0) continue;
    if (!spec.primes.empty() && n > 1) {
      const auto ps = prime_divisors(n);
      const bool allowed = std::all_of(ps.begin(), ps.end(), [&](u64 p) {
        return std::find(spec.primes.begin(), spec.primes.end(), p) != spec.primes.end();
      });
      if (!allowed) continue;
    }
    for (auto& g : groups_of_order(n)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CatalogEntry> catalog(const CatalogSpec& spec) {
  std::vector<Field> fields;
  for (u64 q : spec.fields) fields.push_back(field_of_order(q));
  std::vector<CatalogEntry> out;
  for (const auto& g : catalog_groups(spec)) {
    for (const auto& f : fields) {
      if (gcd(f.order(), g.order()) == 1) out.push_back({g, f});
    }
  }
  return out;
}

}  // namespace abcodes
