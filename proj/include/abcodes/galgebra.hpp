#pragma once

// The group algebra F_q G of a finite abelian group as dense coefficient
// vectors indexed by the canonical element order.

#include <string>
#include <utility>
#include <vector>

#include "abcodes/abgroup.hpp"
#include "abcodes/automorphism.hpp"
#include "abcodes/gf.hpp"

namespace abcodes {

class AlgebraElement {
 public:
  // The zero element.
  AlgebraElement(AbelianGroup group, Field field);
  AlgebraElement(AbelianGroup group, Field field, std::vector<Field::Elem> coeffs);

  static AlgebraElement one(const AbelianGroup& group, const Field& field);
  // The basis element g.
  static AlgebraElement basis(const AbelianGroup& group, const Field& field, ElementIndex g);

  const AbelianGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  const std::vector<Field::Elem>& coeffs() const { return coeffs_; }
  Field::Elem coeff(ElementIndex g) const { return coeffs_[g]; }

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement scale(Field::Elem c) const;
  // Multiplication by the group element g (a shift of coefficients).
  AlgebraElement shift(ElementIndex g) const;

  std::vector<ElementIndex> support() const;
  u64 weight() const;
  bool is_zero() const;
  bool is_idempotent() const;
  // Linear extension of an automorphism: sum a_g theta(g).
  AlgebraElement apply(const Automorphism& theta) const;

  // Terms "c*x" in group order joined by " + ", where x is a monomial in the
  // generator letters g, h, k, ... and the coefficient is a polynomial in a.
  std::string to_string() const;
  // (element coords, coefficient string) for each nonzero term.
  std::vector<std::pair<GroupElement, std::string>> terms() const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

 private:
  void require_compatible(const AlgebraElement& rhs) const;

  AbelianGroup group_;
  Field field_;
  std::vector<Field::Elem> coeffs_;
};

// Letter used for generator i in printed monomials.
std::string generator_letter(std::size_t i);
// Monomial for a group element, e.g. "g^2h"; "1" for the identity.
std::string format_monomial(const AbelianGroup& group, ElementIndex g);

// (1/|H|) sum_{h in H} h. Throws domain_error when |H| is not invertible.
AlgebraElement hat(const Subgroup& h, const Field& field);
// e_G = G-hat; for cocyclic H the product over Sylow components of either the
// full component hat or (H_p-hat - H_p*-hat).
AlgebraElement idempotent_e(const Subgroup& h, const Field& field);

// Ring isomorphism F_qG T-hat -> F_q(G/T), g T-hat -> gT. Requires the
// coefficients of alpha to be constant on cosets of T.
AlgebraElement phi(const Subgroup& t, const Quotient& quotient, const AlgebraElement& alpha);
AlgebraElement phi(const Subgroup& t, const AlgebraElement& alpha);
AlgebraElement phi_inv(const Subgroup& t, const Quotient& quotient, const AlgebraElement& beta);

struct Character {
  AbelianGroup group;
  Field field;                       // GF(q^s)
  std::vector<u64> residues;         // generator i -> zeta_{d_i}^{residues[i]}
  std::vector<Field::Elem> values;   // chi(g) for every g
  bool trivial = false;

  Field::Elem operator()(ElementIndex g) const { return values[g]; }
  std::string label() const;
};

struct CharacterTable {
  unsigned extension_degree;
  Field field;
  std::vector<Character> characters;  // in residue-tuple order, trivial first
};

CharacterTable characters(const AbelianGroup& group, const Field& base);

// (1/|G|) sum chi(g) g, over the character's own field.
AlgebraElement char_idempotent(const Character& chi);
// Same, but throws invalid_argument unless chi takes values in `working`.
AlgebraElement char_idempotent(const Character& chi, const Field& working);

}  // namespace abcodes
