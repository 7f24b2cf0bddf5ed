#include <cmath>

#include "doctest.h"

#include "support.hpp"

using namespace abcodes;

namespace {

// Convolution straight from the definition, over group coordinates.
AlgebraElement naive_product(const AlgebraElement& x, const AlgebraElement& y) {
  const AbelianGroup& g = x.group();
  const Field& f = x.field();
  std::vector<Field::Elem> out(g.order(), 0);
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = 0; b < g.order(); ++b) {
      GroupElement s = g.element(a);
      const GroupElement t = g.element(b);
      for (std::size_t i = 0; i < g.rank(); ++i) s.coords[i] = (s.coords[i] + t.coords[i]) % g.factors()[i];
      const ElementIndex c = g.index_of(s);
      out[c] = f.add(out[c], f.mul(x.coeff(a), y.coeff(b)));
    }
  }
  return AlgebraElement(g, f, out);
}

struct Case {
  std::vector<u64> group;
  u64 q;
};

std::vector<Case> coprime_cases() {
  return {{{2}, 3},     {{3}, 2},    {{3}, 4},     {{5}, 2},     {{9}, 2},     {{3, 3}, 2},  {{3, 3}, 5},
          {{6}, 5},     {{15}, 2},   {{3, 9}, 2},  {{3, 9}, 5},  {{27}, 2},    {{3, 3, 3}, 2}, {{5, 5}, 3},
          {{25}, 2},    {{45}, 2},   {{3, 15}, 2}, {{7, 7}, 2},  {{4}, 3},     {{2, 2}, 3},  {{2, 4}, 5},
          {{3, 21}, 2}, {{9, 9}, 2}, {{81}, 2}};
}

}  // namespace

TEST_CASE("group algebra ring axioms") {
  testing::Gen gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    const AbelianGroup g = gen.group(60);
    const Field f = gen.field({2, 3, 4, 5, 7, 9});
    const auto x = gen.element(g, f);
    const auto y = gen.element(g, f);
    const auto z = gen.element(g, f, 0.2);
    const auto one = AlgebraElement::one(g, f);
    REQUIRE(x * y == naive_product(x, y));
    REQUIRE(x * y == y * x);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * one == x);
    REQUIRE(x - x == AlgebraElement(g, f));
    REQUIRE(x + (-y) == x - y);
    const auto h = static_cast<ElementIndex>(gen.below(g.order()));
    REQUIRE(x.shift(h) == x * AlgebraElement::basis(g, f, h));
    REQUIRE(x.scale(f.one()) == x);
    REQUIRE(x.weight() == x.support().size());
  }
}

TEST_CASE("formatting") {
  const Field f4 = field_of_order(4);
  const AbelianGroup c3 = make_group({3});
  const AlgebraElement e(c3, f4, {1, 2, 3});
  CHECK(e.to_string() == "1 + a*g + (1+a)*g^2");
  CHECK(AlgebraElement(c3, f4).to_string() == "0");
  CHECK(generator_letter(0) == "g");
  CHECK(generator_letter(1) == "h");
  CHECK(format_monomial(make_group({3, 9}), make_group({3, 9}).index_of({{1, 2}})) == "gh^2");
}

TEST_CASE("subgroup averages are idempotent") {
  for (const auto& [factors, q] : coprime_cases()) {
    const AbelianGroup g = make_group(factors);
    const Field f = field_of_order(q);
    for (const auto& h : testing::all_subgroups(g)) {
      const auto s = Subgroup::from_elements(g, h);
      const auto hh = hat(s, f);
      REQUIRE(hh.is_idempotent());
      REQUIRE(hh.weight() == h.size());
    }
  }
  CHECK_THROWS_AS(hat(Subgroup::whole(make_group({3})), field_of_order(3)), std::domain_error);
}

TEST_CASE("cocyclic idempotents are orthogonal and sum to one") {
  for (const auto& [factors, q] : coprime_cases()) {
    const AbelianGroup g = make_group(factors);
    const Field f = field_of_order(q);
    CAPTURE(g.name());
    CAPTURE(q);
    const auto cc = cocyclic_subgroups(g);
    std::vector<AlgebraElement> es{idempotent_e(Subgroup::whole(g), f)};
    CHECK(es.front() == hat(Subgroup::whole(g), f));
    for (const auto& h : cc) {
      es.push_back(idempotent_e(h, f));
      CHECK(es.back() * hat(h, f) == es.back());
      if (is_p_group(g)) CHECK(es.back() == hat(h, f) - hat(star(h), f));
    }
    AlgebraElement sum(g, f);
    for (std::size_t i = 0; i < es.size(); ++i) {
      REQUIRE(es[i].is_idempotent());
      REQUIRE_FALSE(es[i].is_zero());
      sum = sum + es[i];
      for (std::size_t j = i + 1; j < es.size(); ++j) REQUIRE((es[i] * es[j]).is_zero());
    }
    CHECK(sum == AlgebraElement::one(g, f));
  }
  const AbelianGroup g = make_group({3, 9});
  const Subgroup notcc = Subgroup::generated_by(g, std::vector<ElementIndex>{g.index_of({{0, 3}})});
  CHECK_THROWS_AS(idempotent_e(notcc, field_of_order(2)), std::invalid_argument);
}

TEST_CASE("composite idempotents factor over Sylow components") {
  // C6 = C2 x C3 over GF(5): e_<a^2> = hat(<a^2>) (1 - hat(<a^3>)).
  const AbelianGroup g = make_group({6});
  const Field f = field_of_order(5);
  const auto a2 = Subgroup::generated_by(g, std::vector<ElementIndex>{2});
  const auto a3 = Subgroup::generated_by(g, std::vector<ElementIndex>{3});
  const auto one = AlgebraElement::one(g, f);
  CHECK(idempotent_e(a2, f) == hat(a2, f) * (one - hat(a3, f)));
}

TEST_CASE("quotient map") {
  testing::Gen gen(5);
  for (const auto& [factors, q] : coprime_cases()) {
    const AbelianGroup g = make_group(factors);
    const Field f = field_of_order(q);
    for (const auto& t : cocyclic_subgroups(g)) {
      const Quotient quo = make_quotient(t);
      const auto th = hat(t, f);
      const auto x = gen.element(g, f) * th;
      const auto y = gen.element(g, f) * th;
      const auto px = phi(t, quo, x);
      REQUIRE(px.group().order() == t.index());
      REQUIRE(x.weight() == t.order() * px.weight());
      REQUIRE(phi(t, quo, x * y) == px * phi(t, quo, y));
      REQUIRE(phi(t, quo, x + y) == px + phi(t, quo, y));
      REQUIRE(phi(t, quo, th) == AlgebraElement::one(quo.group, f));
      REQUIRE(phi_inv(t, quo, px) == x);
      const auto e = idempotent_e(t, f);
      const auto pe = phi(t, quo, e);
      REQUIRE(pe.is_idempotent());
      if (is_p_group(g)) {
        // 1 - hat(C_p) in the cyclic quotient.
        const Subgroup cp = star(t);
        std::vector<ElementIndex> image;
        for (ElementIndex x0 : cp.elements()) image.push_back(quo.projection[x0]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        const auto c = Subgroup::from_elements(quo.group, image);
        REQUIRE(pe == AlgebraElement::one(quo.group, f) - hat(c, f));
      }
    }
  }
  const AbelianGroup g = make_group({9});
  const Field f = field_of_order(2);
  const auto t = cocyclic_subgroups(g).front();
  REQUIRE(t.order() == 3);
  CHECK_THROWS_AS(phi(t, AlgebraElement::basis(g, f, 1)), std::invalid_argument);
}

TEST_CASE("automorphisms act as ring automorphisms") {
  testing::Gen gen(6);
  const AbelianGroup g = make_group({3, 9});
  const Field f = field_of_order(4);
  std::vector<Automorphism> autos;
  for_each_automorphism(g, [&](const Automorphism& a) {
    autos.push_back(a);
    return autos.size() < 40;
  });
  for (const auto& a : autos) {
    const auto x = gen.element(g, f);
    const auto y = gen.element(g, f);
    REQUIRE((x * y).apply(a) == x.apply(a) * y.apply(a));
    REQUIRE(x.apply(a).weight() == x.weight());
  }
}

TEST_CASE("characters") {
  for (const auto& [factors, q] : coprime_cases()) {
    const AbelianGroup g = make_group(factors);
    const Field base = field_of_order(q);
    if (residue_order(q, g.exponent()) * std::log2(double(q)) > 20) continue;
    const auto table = characters(g, base);
    const Field& f = table.field;
    CAPTURE(g.name());
    REQUIRE(table.characters.size() == g.order());
    REQUIRE(table.characters.front().trivial);
    REQUIRE(f.order() == ipow(q, table.extension_degree));
    REQUIRE((f.order() - 1) % g.exponent() == 0);
    for (const auto& chi : table.characters) {
      for (ElementIndex a = 0; a < g.order(); a += 3) {
        for (ElementIndex b = 0; b < g.order(); b += 5) {
          REQUIRE(chi(g.add(a, b)) == f.mul(chi(a), chi(b)));
        }
      }
    }
    // Row orthogonality: sum_g chi(g) psi(g)^-1 = |G| [chi = psi].
    const Field::Elem n = f.from_integer(static_cast<std::int64_t>(g.order()));
    for (std::size_t i = 0; i < table.characters.size(); i += 2) {
      for (std::size_t j = 0; j < table.characters.size(); j += 3) {
        Field::Elem s = 0;
        for (ElementIndex x = 0; x < g.order(); ++x) {
          s = f.add(s, f.mul(table.characters[i](x), f.inv(table.characters[j](x))));
        }
        REQUIRE(s == (i == j ? n : 0));
      }
    }
    AlgebraElement sum(g, f);
    std::vector<AlgebraElement> es;
    for (const auto& chi : table.characters) {
      es.push_back(char_idempotent(chi));
      sum = sum + es.back();
      REQUIRE(es.back().is_idempotent());
    }
    REQUIRE(sum == AlgebraElement::one(g, f));
    for (std::size_t i = 0; i + 1 < es.size(); ++i) REQUIRE((es[i] * es[i + 1]).is_zero());
  }
}

TEST_CASE("GF(4) C3 character idempotents") {
  const auto table = characters(make_group({3}), field_of_order(4));
  REQUIRE(table.extension_degree == 1);
  REQUIRE(table.characters.size() == 3);
  // Over GF(4) with 3 invertible as 1, e_chi = sum chi(g) g.
  CHECK(char_idempotent(table.characters[0]).to_string() == "1 + g + g^2");
  CHECK(char_idempotent(table.characters[1]).to_string() == "1 + a*g + (1+a)*g^2");
  CHECK_THROWS_AS(char_idempotent(table.characters[1], field_of_order(16)), std::invalid_argument);
  CHECK_THROWS_AS(characters(make_group({3}), field_of_order(9)), std::domain_error);
}
