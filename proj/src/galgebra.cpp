#include "abcodes/galgebra.hpp"

#include <stdexcept>

namespace abcodes {

AlgebraElement::AlgebraElement(AbelianGroup group, Field field)
    : group_(std::move(group)), field_(std::move(field)), coeffs_(group_.order(), 0) {}

AlgebraElement::AlgebraElement(AbelianGroup group, Field field, std::vector<Field::Elem> coeffs)
    : group_(std::move(group)), field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.order()) throw std::invalid_argument("AlgebraElement: coefficient count must equal |G|");
  for (Field::Elem c : coeffs_) {
    if (c >= field_.order()) throw std::invalid_argument("AlgebraElement: coefficient outside the field");
  }
}

AlgebraElement AlgebraElement::one(const AbelianGroup& group, const Field& field) {
  return basis(group, field, group.identity());
}

AlgebraElement AlgebraElement::basis(const AbelianGroup& group, const Field& field, ElementIndex g) {
  AlgebraElement e(group, field);
  e.coeffs_.at(g) = field.one();
  return e;
}

void AlgebraElement::require_compatible(const AlgebraElement& rhs) const {
  if (!(group_ == rhs.group_)) throw std::invalid_argument("AlgebraElement: mismatched groups");
  if (!(field_ == rhs.field_)) throw std::invalid_argument("AlgebraElement: mismatched fields");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  require_compatible(rhs);
  AlgebraElement out(*this);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) out.coeffs_[g] = field_.add(coeffs_[g], rhs.coeffs_[g]);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  require_compatible(rhs);
  AlgebraElement out(*this);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) out.coeffs_[g] = field_.sub(coeffs_[g], rhs.coeffs_[g]);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& c : out.coeffs_) c = field_.neg(c);
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  require_compatible(rhs);
  AlgebraElement out(group_, field_);
  const auto n = static_cast<ElementIndex>(group_.order());
  for (ElementIndex a = 0; a < n; ++a) {
    const Field::Elem x = coeffs_[a];
    if (x == 0) continue;
    for (ElementIndex b = 0; b < n; ++b) {
      const Field::Elem y = rhs.coeffs_[b];
      if (y == 0) continue;
      auto& slot = out.coeffs_[group_.add(a, b)];
      slot = field_.add(slot, field_.mul(x, y));
    }
  }
  return out;
}

AlgebraElement AlgebraElement::scale(Field::Elem c) const {
  AlgebraElement out(*this);
  for (auto& x : out.coeffs_) x = field_.mul(c, x);
  return out;
}

AlgebraElement AlgebraElement::shift(ElementIndex g) const {
  AlgebraElement out(group_, field_);
  for (ElementIndex a = 0; a < coeffs_.size(); ++a) out.coeffs_[group_.add(a, g)] = coeffs_[a];
  return out;
}

std::vector<ElementIndex> AlgebraElement::support() const {
  std::vector<ElementIndex> out;
  for (ElementIndex g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g] != 0) out.push_back(g);
  }
  return out;
}

u64 AlgebraElement::weight() const {
  u64 w = 0;
  for (Field::Elem c : coeffs_) w += c != 0;
  return w;
}

bool AlgebraElement::is_zero() const { return weight() == 0; }

bool AlgebraElement::is_idempotent() const { return *this * *this == *this; }

AlgebraElement AlgebraElement::apply(const Automorphism& theta) const {
  if (!(theta.group() == group_)) throw std::invalid_argument("AlgebraElement::apply: automorphism of another group");
  const auto perm = theta.permutation();
  AlgebraElement out(group_, field_);
  for (ElementIndex g = 0; g < coeffs_.size(); ++g) out.coeffs_[perm[g]] = coeffs_[g];
  return out;
}

std::string generator_letter(std::size_t i) {
  static const std::string letters = "ghklmnpqrs";
  if (i < letters.size()) return std::string(1, letters[i]);
  return "x" + std::to_string(i);
}

std::string format_monomial(const AbelianGroup& group, ElementIndex g) {
  std::string out;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const u64 c = group.coord(g, i);
    if (c == 0) continue;
    out += generator_letter(i);
    if (c > 1) out += "^" + std::to_string(c);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::pair<GroupElement, std::string>> AlgebraElement::terms() const {
  std::vector<std::pair<GroupElement, std::string>> out;
  for (ElementIndex g : support()) out.emplace_back(group_.element(g), field_.format(coeffs_[g]));
  return out;
}

std::string AlgebraElement::to_string() const {
  std::string out;
  for (ElementIndex g : support()) {
    if (!out.empty()) out += " + ";
    const std::string mono = format_monomial(group_, g);
    std::string coef = field_.format(coeffs_[g]);
    if (mono == "1") {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
      out += coef + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.group_ == y.group_ && x.field_ == y.field_ && x.coeffs_ == y.coeffs_;
}

AlgebraElement hat(const Subgroup& h, const Field& field) {
  if (h.order() % field.characteristic() == 0) {
    throw std::domain_error("hat: |H| = " + std::to_string(h.order()) + " is not invertible in GF(" +
                            std::to_string(field.order()) + ")");
  }
  const Field::Elem c = field.inv(field.from_integer(static_cast<std::int64_t>(h.order())));
  std::vector<Field::Elem> coeffs(h.parent().order(), 0);
  for (ElementIndex g : h.elements()) coeffs[g] = c;
  return AlgebraElement(h.parent(), field, std::move(coeffs));
}

AlgebraElement idempotent_e(const Subgroup& h, const Field& field) {
  const AbelianGroup& G = h.parent();
  if (G.order() % field.characteristic() == 0) {
    throw std::domain_error("idempotent_e: GF(" + std::to_string(field.order()) + ") is not coprime to |G| = " +
                            std::to_string(G.order()));
  }
  if (!h.is_whole() && !is_cocyclic(h)) {
    throw std::invalid_argument("idempotent_e: " + h.to_string() + " is neither cocyclic nor G");
  }
  AlgebraElement e = AlgebraElement::one(G, field);
  for (const auto& c : sylow_decomposition(G)) {
    const Subgroup hp = sylow_part(h, c.prime);
    if (hp == c.subgroup) {
      e = e * hat(c.subgroup, field);
    } else {
      e = e * (hat(hp, field) - hat(star_within(c.subgroup, hp, c.prime), field));
    }
  }
  return e;
}

AlgebraElement phi(const Subgroup& t, const Quotient& quotient, const AlgebraElement& alpha) {
  const AbelianGroup& G = t.parent();
  if (!(alpha.group() == G)) throw std::invalid_argument("phi: element of another group");
  const Field& F = alpha.field();
  const Field::Elem scale = F.from_integer(static_cast<std::int64_t>(t.order()));
  std::vector<Field::Elem> out(quotient.group.order(), 0);
  for (ElementIndex c = 0; c < quotient.group.order(); ++c) {
    const ElementIndex rep = quotient.representative[c];
    const Field::Elem a = alpha.coeff(rep);
    for (ElementIndex x : t.elements()) {
      if (alpha.coeff(G.add(rep, x)) != a) {
        throw std::invalid_argument("phi: coefficients are not constant on the coset of " + G.format(rep));
      }
    }
    out[c] = F.mul(scale, a);
  }
  return AlgebraElement(quotient.group, F, std::move(out));
}

AlgebraElement phi(const Subgroup& t, const AlgebraElement& alpha) { return phi(t, make_quotient(t), alpha); }

AlgebraElement phi_inv(const Subgroup& t, const Quotient& quotient, const AlgebraElement& beta) {
  const AbelianGroup& G = t.parent();
  if (!(beta.group() == quotient.group)) throw std::invalid_argument("phi_inv: element of another group");
  const Field& F = beta.field();
  const Field::Elem inv = F.inv(F.from_integer(static_cast<std::int64_t>(t.order())));
  std::vector<Field::Elem> out(G.order(), 0);
  for (ElementIndex g = 0; g < G.order(); ++g) out[g] = F.mul(inv, beta.coeff(quotient.projection[g]));
  return AlgebraElement(G, F, std::move(out));
}

std::string Character::label() const {
  std::string out = "chi(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(residues[i]);
  }
  return out + ")";
}

CharacterTable characters(const AbelianGroup& group, const Field& base) {
  if (group.order() % base.characteristic() == 0) {
    throw std::domain_error("characters: GF(" + std::to_string(base.order()) + ") is not coprime to |G| = " +
                            std::to_string(group.order()));
  }
  const u64 L = group.exponent();
  const RootOfUnity root = root_of_unity(base, L);
  const Field& F = root.zeta.field();
  std::vector<Field::Elem> powers(L);
  powers[0] = F.one();
  for (u64 j = 1; j < L; ++j) powers[j] = F.mul(powers[j - 1], root.zeta.value());

  const std::size_t k = group.rank();
  std::vector<u64> weight(k);
  for (std::size_t i = 0; i < k; ++i) weight[i] = L / group.factors()[i];

  CharacterTable table{root.extension_degree, F, {}};
  table.characters.reserve(group.order());
  for (ElementIndex t = 0; t < group.order(); ++t) {
    Character chi{group, F, group.element(t).coords, std::vector<Field::Elem>(group.order()), t == group.identity()};
    for (ElementIndex g = 0; g < group.order(); ++g) {
      u64 e = 0;
      for (std::size_t i = 0; i < k; ++i) e = (e + group.coord(t, i) * weight[i] % L * group.coord(g, i)) % L;
      chi.values[g] = powers[e];
    }
    table.characters.push_back(std::move(chi));
  }
  return table;
}

AlgebraElement char_idempotent(const Character& chi) {
  const Field& F = chi.field;
  const Field::Elem inv = F.inv(F.from_integer(static_cast<std::int64_t>(chi.group.order())));
  std::vector<Field::Elem> coeffs(chi.group.order());
  for (ElementIndex g = 0; g < chi.group.order(); ++g) coeffs[g] = F.mul(inv, chi.values[g]);
  return AlgebraElement(chi.group, F, std::move(coeffs));
}

AlgebraElement char_idempotent(const Character& chi, const Field& working) {
  if (!(chi.field == working)) {
    throw std::invalid_argument("char_idempotent: " + chi.label() + " takes values in GF(" +
                                std::to_string(chi.field.order()) + "), not in GF(" + std::to_string(working.order()) +
                                ")");
  }
  return char_idempotent(chi);
}

}  // namespace abcodes
