#include "abcodes/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace abcodes {

namespace {

// Reduced row-echelon basis of the span of {g e : g in G}.
void rref_of_shifts(const AlgebraElement& e, std::vector<Field::Elem>& rows, std::vector<std::size_t>& pivots) {
  const AbelianGroup& G = e.group();
  const Field& F = e.field();
  const std::size_t n = G.order();
  const auto support = e.support();
  std::vector<std::vector<Field::Elem>> basis;
  std::vector<std::size_t> piv;
  std::vector<Field::Elem> v(n);
  for (ElementIndex g = 0; g < n; ++g) {
    std::fill(v.begin(), v.end(), 0);
    for (ElementIndex a : support) v[G.add(a, g)] = e.coeff(a);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Field::Elem f = v[piv[r]];
      if (f == 0) continue;
      const auto& row = basis[r];
      for (std::size_t x = piv[r]; x < n; ++x) {
        if (row[x] != 0) v[x] = F.sub(v[x], F.mul(f, row[x]));
      }
    }
    std::size_t c = 0;
    while (c < n && v[c] == 0) ++c;
    if (c == n) continue;
    const Field::Elem inv = F.inv(v[c]);
    for (std::size_t x = c; x < n; ++x) v[x] = F.mul(inv, v[x]);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Field::Elem f = basis[r][c];
      if (f == 0) continue;
      for (std::size_t x = c; x < n; ++x) {
        if (v[x] != 0) basis[r][x] = F.sub(basis[r][x], F.mul(f, v[x]));
      }
    }
    basis.push_back(v);
    piv.push_back(c);
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv[a] < piv[b]; });
  rows.clear();
  pivots.clear();
  for (std::size_t i : order) {
    rows.insert(rows.end(), basis[i].begin(), basis[i].end());
    pivots.push_back(piv[i]);
  }
}

}  // namespace

std::string CharacterLabel::to_string() const {
  std::string out = "chi(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(residues[i]);
  }
  return out + ")";
}

Code::Code(AlgebraElement generator, CodeLabel label) : generator_(std::move(generator)), label_(std::move(label)) {
  if (!generator_.is_idempotent()) throw std::invalid_argument("code_of: generator is not idempotent");
  if (const auto* h = subgroup_label(); h && !(h->parent() == group())) {
    throw std::invalid_argument("code_of: label is a subgroup of another group");
  }
  rref_of_shifts(generator_, rows_, pivots_);
}

std::string Code::label_string() const {
  if (const auto* h = std::get_if<Subgroup>(&label_)) return describe(*h);
  if (const auto* c = std::get_if<CharacterLabel>(&label_)) return c->to_string();
  return "-";
}

std::vector<AlgebraElement> Code::basis() const {
  std::vector<AlgebraElement> out;
  const std::size_t n = length();
  for (std::size_t i = 0; i < dimension(); ++i) {
    out.emplace_back(group(), field(), std::vector<Field::Elem>(rows_.begin() + i * n, rows_.begin() + (i + 1) * n));
  }
  return out;
}

GeneratorMatrix Code::matrix() const { return GeneratorMatrix{field(), dimension(), length(), rows_}; }

bool Code::contains(const std::vector<Field::Elem>& word) const {
  if (word.size() != length()) return false;
  const Field& F = field();
  const std::size_t n = length();
  std::vector<Field::Elem> v(word);
  for (std::size_t r = 0; r < dimension(); ++r) {
    const Field::Elem f = v[pivots_[r]];
    if (f == 0) continue;
    const Field::Elem* row = rows_.data() + r * n;
    for (std::size_t x = pivots_[r]; x < n; ++x) {
      if (row[x] != 0) v[x] = F.sub(v[x], F.mul(f, row[x]));
    }
  }
  return std::all_of(v.begin(), v.end(), [](Field::Elem x) { return x == 0; });
}

bool Code::contains(const AlgebraElement& a) const {
  return a.group() == group() && a.field() == field() && contains(a.coeffs());
}

std::vector<AlgebraElement> Code::codewords(u64 cap) const {
  const u64 q = field().order();
  const u64 total = codeword_count(q, dimension());
  if (total > cap) throw CapExceeded("codewords: " + std::to_string(total) + " words exceed cap " + std::to_string(cap));
  const Field& F = field();
  const std::size_t n = length();
  std::vector<AlgebraElement> out;
  out.reserve(total);
  std::vector<u64> digits(dimension(), 0);
  for (u64 w = 0; w < total; ++w) {
    u64 x = w;
    for (std::size_t i = dimension(); i-- > 0;) {
      digits[i] = x % q;
      x /= q;
    }
    std::vector<Field::Elem> word(n, 0);
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (digits[i] == 0) continue;
      const auto c = static_cast<Field::Elem>(digits[i]);
      for (std::size_t y = 0; y < n; ++y) word[y] = F.add(word[y], F.mul(c, rows_[i * n + y]));
    }
    out.emplace_back(group(), F, std::move(word));
  }
  return out;
}

Code code_of(const AlgebraElement& e, CodeLabel label) { return Code(e, std::move(label)); }

Code subgroup_code(const Subgroup& h, const Field& field) { return Code(idempotent_e(h, field), h); }

namespace {

void require_family_label(const Subgroup& h, const char* who) {
  if (!h.is_whole() && !is_cocyclic(h)) {
    throw std::invalid_argument(std::string(who) + ": " + h.to_string() + " is neither cocyclic nor G");
  }
}

}  // namespace

u64 dim_formula(const Subgroup& h) {
  require_family_label(h, "dim_formula");
  u64 dim = h.index();
  for (u64 p : prime_divisors(h.parent().order() == 1 ? 1 : h.parent().order())) {
    if (sylow_part(h, p).order() == ipow(p, valuation(h.parent().order(), p))) continue;
    dim = dim / p * (p - 1);
  }
  return dim;
}

u64 weight_formula(const Subgroup& h) {
  require_family_label(h, "weight_formula");
  u64 w = h.order();
  for (u64 p : prime_divisors(h.parent().order() == 1 ? 1 : h.parent().order())) {
    if (sylow_part(h, p).order() != ipow(p, valuation(h.parent().order(), p))) w *= 2;
  }
  return w;
}

ReducedCode reduce(const Code& code) {
  const Subgroup* h = code.subgroup_label();
  if (h == nullptr) return {code.matrix(), 1};
  const Quotient q = make_quotient(*h);
  const AlgebraElement beta = phi(*h, q, code.generator());
  GeneratorMatrix m{code.field(), 0, q.group.order(), {}};
  std::vector<std::size_t> pivots;
  rref_of_shifts(beta, m.rows, pivots);
  m.k = pivots.size();
  if (m.k != code.dimension()) throw std::logic_error("reduce: quotient image changed the dimension");
  return {std::move(m), h->order()};
}

MinWeight min_weight(const Code& code, u64 cap) {
  if (code.dimension() == 0) throw std::invalid_argument("empty code has no nonzero codeword");
  const ReducedCode r = reduce(code);
  if (codeword_count(r.matrix.field.order(), r.matrix.k) <= cap) {
    return {enumerate_min_weight(r.matrix, cap) * r.scale, "enumeration"};
  }
  return {information_set_min_weight(r.matrix, cap) * r.scale, "information-set"};
}

u64 WeightDistribution::total() const {
  u64 t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

u64 WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : counts) {
    if (w > 0 && c > 0) return w;
  }
  throw std::invalid_argument("empty code has no nonzero codeword");
}

std::string WeightDistribution::to_string() const {
  std::string out = "{";
  for (const auto& [w, c] : counts) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(w) + ":" + std::to_string(c);
  }
  return out + "}";
}

WeightDistribution weight_distribution(const Code& code, u64 cap) {
  const ReducedCode r = reduce(code);
  WeightDistribution d;
  for (const auto& [w, c] : enumerate_distribution(r.matrix, cap)) d.counts[w * r.scale] = c;
  return d;
}

WeightDistribution weight_distribution_direct(const Code& code, u64 cap) {
  return WeightDistribution{enumerate_distribution(code.matrix(), cap)};
}

bool oracle_code_equivalent(const Code& a, const Code& b, u64 oracle_cap) {
  const AbelianGroup& G = a.group();
  if (!(b.group() == G) || !(b.field() == a.field())) {
    throw std::invalid_argument("oracle_code_equivalent: codes live in different algebras");
  }
  if (G.order() > oracle_cap) {
    throw OracleUnavailable("oracle_code_equivalent: |G| = " + std::to_string(G.order()) + " exceeds oracle cap " +
                            std::to_string(oracle_cap));
  }
  if (a.dimension() != b.dimension()) return false;
  const AlgebraElement& ea = a.generator();
  const AlgebraElement& eb = b.generator();
  // theta(I_a) = I_b forces theta(e_a) = e_b, the identities of the two
  // ideals; compare coefficients on the part of G a prefix determines.
  if (ea.coeff(G.identity()) != eb.coeff(G.identity())) return false;
  const auto levels = prefix_levels(G);
  const PrefixFilter keep = [&](std::size_t fixed, const std::vector<ElementIndex>& images) {
    for (ElementIndex g : levels[fixed]) {
      if (ea.coeff(g) != eb.coeff(apply_images(G, images, g))) return false;
    }
    return true;
  };
  const auto basis = a.basis();
  bool found = false;
  for_each_automorphism(
      G,
      [&](const Automorphism& theta) {
        for (const auto& row : basis) {
          if (!b.contains(row.apply(theta))) return true;
        }
        found = true;
        return false;
      },
      keep);
  return found;
}

bool code_equivalent(const Code& a, const Code& b, const OracleOptions& options) {
  const Subgroup* h = a.subgroup_label();
  const Subgroup* k = b.subgroup_label();
  if (h == nullptr || k == nullptr) return oracle_code_equivalent(a, b, options.oracle_cap);
  const bool fast = g_isomorphic(*h, *k, options);
  if (a.group().order() <= options.oracle_cap && oracle_code_equivalent(a, b, options.oracle_cap) != fast) {
    throw std::logic_error("code_equivalent: subgroup criterion disagrees with explicit search for " +
                           a.label_string() + " and " + b.label_string());
  }
  return fast;
}

namespace {

void require_coprime(const AbelianGroup& group, const Field& field, const char* who) {
  if (gcd(field.order(), group.order()) != 1) {
    throw std::invalid_argument(std::string(who) + ": GF(" + std::to_string(field.order()) +
                                ") is not coprime to |G| = " + std::to_string(group.order()));
  }
}

}  // namespace

std::vector<Code> family(const AbelianGroup& group, const Field& field) {
  require_coprime(group, field, "family");
  std::vector<Code> out;
  out.push_back(subgroup_code(Subgroup::whole(group), field));
  for (const Subgroup& h : cocyclic_subgroups(group)) out.push_back(subgroup_code(h, field));
  return out;
}

std::vector<Code> family_min_splitting(const AbelianGroup& group, const Field& field) {
  require_coprime(group, field, "family_min_splitting");
  if ((field.order() - 1) % group.exponent() != 0) {
    throw std::invalid_argument("family_min_splitting: GF(" + std::to_string(field.order()) +
                                ") is not a splitting field for " + group.name());
  }
  std::vector<Code> out;
  for (const Character& chi : characters(group, field).characters) {
    if (chi.trivial) continue;
    out.emplace_back(char_idempotent(chi, field), CharacterLabel{chi.residues});
  }
  return out;
}

bool is_minimal_family_certified(const AbelianGroup& group, const Field& field) {
  if (!is_p_group(group)) throw std::invalid_argument("is_minimal_family_certified: " + group.name() + " is not a p-group");
  return is_generator_mod(field.order(), group.exponent());
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::A:
      return "A";
    case Condition::B:
      return "B";
    case Condition::C:
      return "C";
  }
  return "?";
}

Condition parse_condition(const std::string& text) {
  if (text == "A" || text == "a") return Condition::A;
  if (text == "B" || text == "b") return Condition::B;
  if (text == "C" || text == "c") return Condition::C;
  throw std::invalid_argument("unknown condition '" + text + "' (expected A, B or C)");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::indeterminate:
      return "indeterminate";
  }
  return "?";
}

FamilyEvaluator::FamilyEvaluator(std::vector<Code> codes, Caps caps)
    : codes_(std::move(codes)), caps_(caps), weights_(codes_.size()), dists_(codes_.size()), parent_(codes_.size()) {
  if (codes_.empty()) throw std::invalid_argument("FamilyEvaluator: empty family");
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
}

std::optional<MinWeight> FamilyEvaluator::min_weight(std::size_t i) {
  if (!weights_[i]) {
    try {
      weights_[i] = std::optional<MinWeight>(abcodes::min_weight(codes_[i], caps_.enum_cap));
    } catch (const CapExceeded&) {
      weights_[i].emplace(std::nullopt);
    }
  }
  return *weights_[i];
}

std::optional<WeightDistribution> FamilyEvaluator::distribution(std::size_t i) {
  if (!dists_[i]) {
    try {
      dists_[i] = std::optional<WeightDistribution>(weight_distribution(codes_[i], caps_.enum_cap));
    } catch (const CapExceeded&) {
      dists_[i].emplace(std::nullopt);
    }
  }
  return *dists_[i];
}

std::size_t FamilyEvaluator::find(std::size_t i) {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool FamilyEvaluator::equivalent(std::size_t i, std::size_t j) {
  const std::size_t ri = find(i);
  const std::size_t rj = find(j);
  if (ri == rj) return true;
  for (const auto& [a, b] : distinct_) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if ((ra == ri && rb == rj) || (ra == rj && rb == ri)) return false;
  }
  const bool eq = code_equivalent(codes_[i], codes_[j], OracleOptions{caps_.oracle_cap});
  if (eq) {
    parent_[std::max(ri, rj)] = std::min(ri, rj);
  } else {
    distinct_.push_back({i, j});
  }
  return eq;
}

std::vector<std::size_t> FamilyEvaluator::classes() {
  std::vector<std::size_t> reps;
  std::vector<std::size_t> out(codes_.size());
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    out[i] = i;
    for (std::size_t r : reps) {
      if (equivalent(r, i)) {
        out[i] = r;
        break;
      }
    }
    if (out[i] == i) reps.push_back(i);
  }
  return out;
}

FamilyEvaluator::Cmp FamilyEvaluator::compare(Condition condition, std::size_t i, std::size_t j) {
  const bool same_dim = codes_[i].dimension() == codes_[j].dimension();
  if (condition == Condition::C) return same_dim ? Cmp::equal : Cmp::unequal;
  const auto wi = min_weight(i);
  const auto wj = min_weight(j);
  if (condition == Condition::A) {
    if (!wi || !wj) return Cmp::unknown;
    return wi->weight == wj->weight ? Cmp::equal : Cmp::unequal;
  }
  // A distribution determines both the dimension and the minimum weight.
  if (!same_dim) return Cmp::unequal;
  if (wi && wj && wi->weight != wj->weight) return Cmp::unequal;
  const auto di = distribution(i);
  const auto dj = distribution(j);
  if (!di || !dj) return Cmp::unknown;
  return *di == *dj ? Cmp::equal : Cmp::unequal;
}

Verdict FamilyEvaluator::check(Condition condition) {
  Verdict v;
  v.condition = condition;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    for (std::size_t j = i + 1; j < codes_.size(); ++j) {
      ++v.pairs;
      switch (compare(condition, i, j)) {
        case Cmp::unequal: {
          // Equivalent codes share every parameter.
          const Subgroup* h = codes_[i].subgroup_label();
          const Subgroup* k = codes_[j].subgroup_label();
          if (h && k && g_isomorphic(*h, *k, OracleOptions{caps_.oracle_cap})) {
            throw std::logic_error("check_condition: equivalent codes " + codes_[i].label_string() + " and " +
                                   codes_[j].label_string() + " differ in condition " + to_string(condition) +
                                   " parameter");
          }
          break;
        }
        case Cmp::equal:
          if (equivalent(i, j)) {
            ++v.equivalent_pairs;
          } else {
            v.witnesses.push_back({i, j});
          }
          break;
        case Cmp::unknown:
          if (equivalent(i, j)) {
            ++v.equivalent_pairs;
            ++v.forward_unchecked;
          } else {
            v.skipped.push_back({i, j});
          }
          break;
      }
    }
  }
  if (!v.witnesses.empty()) {
    v.outcome = Outcome::fails;
  } else if (!v.skipped.empty()) {
    v.outcome = Outcome::indeterminate;
  }
  return v;
}

Verdict check_condition(const std::vector<Code>& family, Condition condition, const Caps& caps) {
  FamilyEvaluator eval(family, caps);
  return eval.check(condition);
}

}  // namespace abcodes
