#include "abcodes/gf.hpp"

#include <charconv>
#include <stdexcept>

namespace abcodes {

namespace {

using Poly = std::vector<u64>;  // constant term first

constexpr u64 kMaxFieldOrder = u64{1} << 31;
constexpr u64 kLogTableLimit = u64{1} << 16;
constexpr u64 kSmallTableLimit = 256;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, u64 p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const u64 lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - lead) * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, u64 p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    const u64 count = ipow(p, static_cast<unsigned>(d));
    Poly g(d + 1, 0);
    g[d] = 1;
    for (u64 v = 0; v < count; ++v) {
      u64 x = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = x % p;
        x /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct Field::Impl {
  u64 p = 0;
  unsigned m = 0;
  u64 q = 0;
  Poly modulus;
  std::vector<u64> pow_p;  // p^i for i <= m
  Elem primitive = 0;
  std::vector<Elem> exp_table;  // gamma^i, i in [0, q-1)
  std::vector<Elem> log_table;  // log_gamma(a), a != 0
  std::vector<std::uint8_t> add_tab;
  std::vector<std::uint8_t> mul_tab;

  Poly decode(Elem a) const {
    Poly c(m);
    u64 x = a;
    for (unsigned i = 0; i < m; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  }

  Elem encode(const Poly& c) const {
    u64 x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return static_cast<Elem>(x);
  }

  Elem add_digits(Elem a, Elem b) const {
    if (m == 1) return static_cast<Elem>((u64{a} + b) % p);
    u64 x = a, y = b, out = 0;
    for (unsigned i = 0; i < m; ++i) {
      out += ((x % p + y % p) % p) * pow_p[i];
      x /= p;
      y /= p;
    }
    return static_cast<Elem>(out);
  }

  Elem neg_digits(Elem a) const {
    if (m == 1) return static_cast<Elem>((p - a) % p);
    u64 x = a, out = 0;
    for (unsigned i = 0; i < m; ++i) {
      out += ((p - x % p) % p) * pow_p[i];
      x /= p;
    }
    return static_cast<Elem>(out);
  }

  Elem mul_poly(Elem a, Elem b) const {
    if (m == 1) return static_cast<Elem>(mul_mod(a, b, p));
    const Poly x = decode(a), y = decode(b);
    Poly prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], p)) % p;
    }
    return encode(poly_mod(std::move(prod), modulus, p));
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!mul_tab.empty()) return mul_tab[a * q + b];
    if (!log_table.empty()) return exp_table[(u64{log_table[a]} + log_table[b]) % (q - 1)];
    return mul_poly(a, b);
  }

  Elem pow(Elem a, u64 k) const {
    Elem result = 1;
    while (k > 0) {
      if (k & 1) result = mul(result, a);
      a = mul(a, a);
      k >>= 1;
    }
    return result;
  }

  u64 order_of(Elem a) const {
    u64 order = q - 1;
    for (const auto& [l, e] : factorize(q - 1)) {
      (void)e;
      while (order % l == 0 && pow(a, order / l) == 1) order /= l;
    }
    return order;
  }

  // Element at position `rank` in lexicographic order of coefficient lists,
  // constant term first (so c_0 is the most significant digit).
  Elem lex_element(u64 rank) const {
    Poly c(m);
    for (unsigned i = m; i-- > 0;) {
      c[i] = rank % p;
      rank /= p;
    }
    return encode(c);
  }
};

namespace {

std::shared_ptr<Field::Impl> build_impl(u64 p, Poly modulus) {
  auto impl = std::make_shared<Field::Impl>();
  impl->p = p;
  impl->m = static_cast<unsigned>(modulus.size() - 1);
  impl->q = ipow(p, impl->m);
  impl->modulus = std::move(modulus);
  impl->pow_p.resize(impl->m + 1);
  for (unsigned i = 0; i <= impl->m; ++i) impl->pow_p[i] = ipow(p, i);

  const u64 q = impl->q;
  for (u64 rank = 1; rank < q; ++rank) {
    const auto candidate = impl->lex_element(rank);
    if (candidate == 0) continue;
    if (impl->order_of(candidate) == q - 1) {
      impl->primitive = candidate;
      break;
    }
  }
  if (impl->primitive == 0 && q > 2) throw std::logic_error("make_field: no primitive element found");
  if (q == 2) impl->primitive = 1;

  if (q <= kLogTableLimit && q > 2) {
    impl->exp_table.resize(q - 1);
    impl->log_table.assign(q, 0);
    Field::Elem x = 1;
    for (u64 i = 0; i + 1 < q; ++i) {
      impl->exp_table[i] = x;
      impl->log_table[x] = static_cast<Field::Elem>(i);
      x = impl->mul_poly(x, impl->primitive);
    }
  }
  if (q <= kSmallTableLimit) {
    impl->add_tab.resize(q * q);
    std::vector<std::uint8_t> mul_tab(q * q);
    for (u64 a = 0; a < q; ++a) {
      for (u64 b = 0; b < q; ++b) {
        impl->add_tab[a * q + b] = static_cast<std::uint8_t>(
            impl->add_digits(static_cast<Field::Elem>(a), static_cast<Field::Elem>(b)));
        mul_tab[a * q + b] = static_cast<std::uint8_t>(
            impl->mul(static_cast<Field::Elem>(a), static_cast<Field::Elem>(b)));
      }
    }
    impl->mul_tab = std::move(mul_tab);
  }
  return impl;
}

}  // namespace

Field make_field(u64 p, unsigned m) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("make_field: extension degree must be at least 1");
  const u64 q = ipow(p, m);
  if (q > kMaxFieldOrder) throw std::invalid_argument("make_field: field order exceeds 2^31");

  Poly f(m + 1, 0);
  f[m] = 1;
  const u64 count = ipow(p, m);
  for (u64 rank = 0; rank < count; ++rank) {
    u64 x = rank;
    for (unsigned i = m; i-- > 0;) {
      f[i] = x % p;
      x /= p;
    }
    if (m > 1 && f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, p)) return Field(build_impl(p, f));
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

Field make_field_with_modulus(u64 p, std::vector<u64> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("make_field: modulus must be monic of degree >= 1");
  for (u64 c : modulus) {
    if (c >= p) throw std::invalid_argument("make_field: modulus coefficient out of range");
  }
  if (ipow(p, static_cast<unsigned>(modulus.size() - 1)) > kMaxFieldOrder) {
    throw std::invalid_argument("make_field: field order exceeds 2^31");
  }
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("make_field: modulus is reducible");
  return Field(build_impl(p, std::move(modulus)));
}

Field field_of_order(u64 q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make_field(pp->prime, pp->exponent);
}

Field parse_field(const std::string& text) {
  auto parse_u64 = [&](std::string_view s) {
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("cannot parse field '" + text + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string::npos) return field_of_order(parse_u64(text));
  const std::string_view sv(text);
  return make_field(parse_u64(sv.substr(0, caret)), static_cast<unsigned>(parse_u64(sv.substr(caret + 1))));
}

u64 Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->m; }
u64 Field::order() const { return impl_->q; }
const std::vector<u64>& Field::modulus() const { return impl_->modulus; }

Field::Elem Field::add(Elem a, Elem b) const {
  if (!impl_->add_tab.empty()) return impl_->add_tab[a * impl_->q + b];
  return impl_->add_digits(a, b);
}

Field::Elem Field::neg(Elem a) const { return impl_->neg_digits(a); }

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const { return impl_->mul(a, b); }

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GF(" + name() + "): division by zero");
  const auto& im = *impl_;
  if (!im.log_table.empty()) return im.exp_table[(im.q - 1 - im.log_table[a]) % (im.q - 1)];
  return im.pow(a, im.q - 2);
}

Field::Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Field::Elem Field::pow(Elem a, std::int64_t k) const {
  if (k < 0) return impl_->pow(inv(a), static_cast<u64>(-(k + 1)) + 1);
  if (a == 0) return k == 0 ? 1 : 0;
  return impl_->pow(a, static_cast<u64>(k));
}

Field::Elem Field::from_integer(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<u64> Field::coeffs(Elem a) const { return impl_->decode(a); }

Field::Elem Field::from_coeffs(std::span<const u64> c) const {
  if (c.size() != impl_->m) throw std::invalid_argument("from_coeffs: expected " + std::to_string(impl_->m) + " coefficients");
  for (u64 x : c) {
    if (x >= impl_->p) throw std::invalid_argument("from_coeffs: coefficient out of range");
  }
  return impl_->encode(Poly(c.begin(), c.end()));
}

Field::Elem Field::primitive_element() const { return impl_->primitive; }

u64 Field::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("multiplicative_order: zero has no order");
  return impl_->order_of(a);
}

std::string Field::name() const { return std::to_string(impl_->q); }

std::string Field::format(Elem a) const {
  if (impl_->m == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (unsigned i = 0; i < impl_->m; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FieldElement Field::element(Elem a) const {
  if (a >= impl_->q) throw std::invalid_argument("element: value out of range for GF(" + name() + ")");
  return FieldElement(*this, a);
}

const std::uint8_t* Field::add_table() const { return impl_->add_tab.empty() ? nullptr : impl_->add_tab.data(); }
const std::uint8_t* Field::mul_table() const { return impl_->mul_tab.empty() ? nullptr : impl_->mul_tab.data(); }

bool operator==(const Field& x, const Field& y) {
  if (x.impl_ == y.impl_) return true;
  return x.impl_->p == y.impl_->p && x.impl_->modulus == y.impl_->modulus;
}

FieldElement::FieldElement(Field field, Field::Elem value) : field_(std::move(field)), value_(value) {}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw std::invalid_argument("mixed fields: GF(" + field_.name() + ") and GF(" + rhs.field_.name() + ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.add(value_, rhs.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.sub(value_, rhs.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.mul(value_, rhs.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.div(value_, rhs.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t k) const { return {field_, field_.pow(value_, k)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
  return field_ == rhs.field_ && value_ == rhs.value_;
}

u64 residue_order(u64 q, u64 n) {
  if (n == 0) throw std::invalid_argument("residue_order: modulus must be positive");
  if (gcd(q, n) != 1) {
    throw std::invalid_argument("residue_order: gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
  }
  if (n == 1) return 1;
  u64 order = euler_phi(n);
  for (const auto& [l, e] : factorize(order)) {
    (void)e;
    while (order % l == 0 && pow_mod(q, order / l, n) == 1) order /= l;
  }
  return order;
}

bool is_generator_mod(u64 q, u64 n) { return residue_order(q, n) == euler_phi(n); }

RootOfUnity root_of_unity(const Field& base, u64 n) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  if (n % base.characteristic() == 0) {
    throw std::invalid_argument("root_of_unity: n = " + std::to_string(n) + " is divisible by the characteristic");
  }
  const auto s = static_cast<unsigned>(residue_order(base.order(), n));
  const Field ext = (s == 1) ? base : make_field(base.characteristic(), base.degree() * s);
  const u64 exponent = (ext.order() - 1) / n;
  return {s, ext.element(ext.pow(ext.primitive_element(), static_cast<std::int64_t>(exponent)))};
}

}  // namespace abcodes
