#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are packed as integers: the coefficient vector (c_0, ..., c_{m-1})
// of the residue polynomial, constant term first, is stored as sum c_i p^i.
// The packed value is what `Field::Elem` holds; `FieldElement` wraps it
// together with its field for the value-semantic API.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "abcodes/numtheory.hpp"

namespace abcodes {

class FieldElement;

class Field {
 public:
  using Elem = std::uint32_t;

  u64 characteristic() const;
  unsigned degree() const;
  u64 order() const;
  // Monic irreducible modulus, constant term first, length degree()+1.
  const std::vector<u64>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t k) const;

  // Image of an integer under Z -> GF(p) -> GF(q).
  Elem from_integer(std::int64_t n) const;
  std::vector<u64> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const u64> coeffs) const;

  // Lexicographically smallest generator of the multiplicative group.
  Elem primitive_element() const;
  u64 multiplicative_order(Elem a) const;

  // The field order in decimal, e.g. "4".
  std::string name() const;
  // Polynomial in the symbol `a`, ascending powers, e.g. "1+a".
  std::string format(Elem a) const;

  FieldElement element(Elem a) const;

  // Lookup tables for q <= 256, row-major [a * q + b]; nullptr otherwise.
  const std::uint8_t* add_table() const;
  const std::uint8_t* mul_table() const;

  friend bool operator==(const Field& x, const Field& y);

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend Field make_field(u64 p, unsigned m);
  friend Field make_field_with_modulus(u64 p, std::vector<u64> modulus);
};

// GF(p^m) with the lexicographically smallest (constant term first) monic
// irreducible modulus of degree m.
Field make_field(u64 p, unsigned m);
// GF(p^m) with a caller-supplied modulus; irreducibility is verified.
Field make_field_with_modulus(u64 p, std::vector<u64> modulus);
// GF(q) for a prime power q.
Field field_of_order(u64 q);
// Parses "4" or "2^2".
Field parse_field(const std::string& text);

class FieldElement {
 public:
  FieldElement(Field field, Field::Elem value);

  const Field& field() const { return field_; }
  Field::Elem value() const { return value_; }
  std::vector<u64> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t k) const;

  bool operator==(const FieldElement& rhs) const;
  std::string to_string() const { return field_.format(value_); }

 private:
  void require_same_field(const FieldElement& rhs) const;

  Field field_;
  Field::Elem value_;
};

// Multiplicative order of q modulo n. Requires gcd(q, n) = 1 and n >= 1.
u64 residue_order(u64 q, u64 n);
// True iff q generates the unit group U(Z_n).
bool is_generator_mod(u64 q, u64 n);

struct RootOfUnity {
  unsigned extension_degree;  // least s with n | q^s - 1
  FieldElement zeta;          // order exactly n, in GF(q^s)
};

// zeta = gamma^((q^s - 1) / n) for gamma the smallest primitive element of
// GF(q^s). For s = 1 the base field itself is used.
RootOfUnity root_of_unity(const Field& base, u64 n);

}  // namespace abcodes
