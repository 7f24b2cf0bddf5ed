#include <cmath>

#include "doctest.h"

#include "abcodes/codes.hpp"
#include "support.hpp"

using namespace abcodes;

namespace {

u64 weight_of(const std::vector<Field::Elem>& w) {
  return static_cast<u64>(std::count_if(w.begin(), w.end(), [](Field::Elem c) { return c != 0; }));
}

std::map<u64, u64> histogram(const std::set<std::vector<Field::Elem>>& words) {
  std::map<u64, u64> h;
  for (const auto& w : words) ++h[weight_of(w)];
  return h;
}

// All F_q-combinations of the rows, without Gray codes or shortcuts.
std::map<u64, u64> naive_distribution(const GeneratorMatrix& m) {
  std::map<u64, u64> h;
  std::vector<Field::Elem> coef(m.k, 0);
  const u64 q = m.field.order();
  while (true) {
    std::vector<Field::Elem> w(m.n, 0);
    for (std::size_t i = 0; i < m.k; ++i) {
      for (std::size_t j = 0; j < m.n; ++j) w[j] = m.field.add(w[j], m.field.mul(coef[i], m.row(i)[j]));
    }
    ++h[weight_of(w)];
    std::size_t i = 0;
    while (i < m.k && ++coef[i] == q) coef[i++] = 0;
    if (i == m.k) break;
  }
  return h;
}

GeneratorMatrix random_matrix(testing::Gen& gen, const Field& f, std::size_t k, std::size_t n) {
  GeneratorMatrix m{f, k, n, std::vector<Field::Elem>(k * n)};
  for (auto& x : m.rows) x = static_cast<Field::Elem>(gen.below(f.order()));
  return m;
}

struct Case {
  std::vector<u64> group;
  u64 q;
};

}  // namespace

TEST_CASE("enumerators agree with naive enumeration") {
  testing::Gen gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = gen.field({2, 3, 4, 5, 7});
    const std::size_t k = 1 + gen.below(f.order() == 2 ? 10 : 4);
    const std::size_t n = k + gen.below(12);
    const auto m = random_matrix(gen, f, k, n);
    const auto naive = naive_distribution(m);
    const auto dist = enumerate_distribution(m, 1u << 22);
    REQUIRE(dist == naive);
    u64 min_nonzero = 0;
    for (const auto& [w, c] : naive) {
      if (w > 0) {
        min_nonzero = w;
        break;
      }
    }
    if (min_nonzero == 0) {
      REQUIRE_THROWS_AS(enumerate_min_weight(m, 1u << 22), std::invalid_argument);
      continue;
    }
    REQUIRE(enumerate_min_weight(m, 1u << 22) == min_nonzero);
  }
}

TEST_CASE("information-set search finds the enumerated minimum weight") {
  testing::Gen gen(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = gen.field({2, 3, 4, 5});
    const std::size_t k = 2 + gen.below(f.order() == 2 ? 12 : 5);
    const std::size_t n = k + 2 + gen.below(3 * k);
    auto m = random_matrix(gen, f, k, n);
    // Full rank: prepend an identity block.
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m.rows[i * n + j] = i == j ? 1 : 0;
    }
    CAPTURE(f.order());
    CAPTURE(k);
    CAPTURE(n);
    REQUIRE(information_set_min_weight(m, 1u << 22) == enumerate_min_weight(m, 1u << 22));
  }
  testing::Gen big(9);
  auto m = random_matrix(big, field_of_order(2), 30, 90);
  for (std::size_t i = 0; i < 30; ++i) {
    for (std::size_t j = 0; j < 30; ++j) m.rows[i * 90 + j] = i == j;
  }
  CHECK_THROWS_AS(enumerate_min_weight(m, 1000), CapExceeded);
  CHECK_THROWS_AS(information_set_min_weight(m, 10), CapExceeded);
}

TEST_CASE("codes match the brute-force ideal F_qG e") {
  const std::vector<Case> cases{{{2}, 3}, {{3}, 2}, {{3}, 4}, {{5}, 2}, {{7}, 2},   {{9}, 2},
                                {{3, 3}, 2}, {{5}, 3}, {{4}, 3}, {{2, 2}, 3}, {{6}, 5}, {{15}, 2}};
  for (const auto& [factors, q] : cases) {
    const AbelianGroup g = make_group(factors);
    const Field f = field_of_order(q);
    CAPTURE(g.name());
    CAPTURE(q);
    for (const Code& code : family(g, f)) {
      const auto ideal = testing::all_products(code.generator());
      const u64 dim = static_cast<u64>(std::llround(std::log(static_cast<double>(ideal.size())) / std::log(double(q))));
      REQUIRE(ipow(q, static_cast<unsigned>(dim)) == ideal.size());
      REQUIRE(code.dimension() == dim);
      std::set<std::vector<Field::Elem>> words;
      for (const auto& w : code.codewords()) words.insert(w.coeffs());
      REQUIRE(words == ideal);
      const auto hist = histogram(ideal);
      REQUIRE(weight_distribution(code).counts == hist);
      REQUIRE(weight_distribution_direct(code).counts == hist);
      REQUIRE(min_weight(code).weight == std::next(hist.begin())->first);
      const Subgroup* h = code.subgroup_label();
      REQUIRE(h != nullptr);
      REQUIRE(dim_formula(*h) == dim);
      REQUIRE(weight_formula(*h) == std::next(hist.begin())->first);
      for (const auto& w : ideal) REQUIRE(code.contains(w));
    }
  }
}

TEST_CASE("formulas over random groups") {
  testing::Gen gen(10);
  u64 checked = 0;
  u64 beyond_cap = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const AbelianGroup g = gen.group(250, {3, 5, 7, 9, 25, 27});
    const Field f = field_of_order(gen.pick(std::vector<u64>{2, 4, 8}));
    CAPTURE(g.name());
    for (const Code& code : family(g, f)) {
      const Subgroup& h = *code.subgroup_label();
      REQUIRE(code.dimension() == dim_formula(h));
      const ReducedCode r = reduce(code);
      REQUIRE(r.scale == h.order());
      REQUIRE(r.matrix.k == code.dimension());
      std::optional<u64> w;
      try {
        w = min_weight(code).weight;
      } catch (const CapExceeded&) {
        ++beyond_cap;
        continue;
      }
      REQUIRE(*w == weight_formula(h));
      ++checked;
    }
  }
  CHECK(checked > 10 * beyond_cap);
}

TEST_CASE("reduced and direct distributions agree") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 15; ++trial) {
    const AbelianGroup g = gen.group(100, {3, 5, 9, 25});
    const Field f = field_of_order(2);
    for (const Code& code : family(g, f)) {
      if (code.dimension() > 16) continue;
      REQUIRE(weight_distribution(code) == weight_distribution_direct(code));
      REQUIRE(weight_distribution(code).total() == ipow(2, static_cast<unsigned>(code.dimension())));
    }
  }
}

TEST_CASE("C2 over GF(3)") {
  const auto fam = family(make_group({2}), field_of_order(3));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].generator().coeffs() == std::vector<Field::Elem>{2, 2});
  CHECK(fam[1].generator().coeffs() == std::vector<Field::Elem>{2, 1});
  for (const auto& c : fam) {
    CHECK(c.dimension() == 1);
    CHECK(min_weight(c).weight == 2);
    CHECK(weight_distribution(c).to_string() == "{0:1, 2:2}");
  }
  CHECK_FALSE(code_equivalent(fam[0], fam[1]));
  CHECK_FALSE(oracle_code_equivalent(fam[0], fam[1]));
  for (Condition c : {Condition::A, Condition::B, Condition::C}) {
    const Verdict v = check_condition(fam, c);
    CHECK(v.outcome == Outcome::fails);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses.front() == CodePair{0, 1});
  }
}

TEST_CASE("C9xC3 over GF(2) fails Condition B") {
  const AbelianGroup g = make_group({9, 3});
  const Field f = field_of_order(2);
  const auto fam = family(g, f);
  REQUIRE(fam.size() == 8);
  std::vector<std::size_t> c9, c33;
  for (std::size_t i = 1; i < fam.size(); ++i) {
    const Subgroup& h = *fam[i].subgroup_label();
    if (h.index() != 3) continue;
    (iso_type(h).factors.size() == 1 ? c9 : c33).push_back(i);
  }
  REQUIRE(c9.size() == 3);
  REQUIRE(c33.size() == 1);
  const Code& a = fam[c9.front()];
  const Code& b = fam[c33.front()];
  CHECK(a.dimension() == 2);
  CHECK(a.codewords().size() == 4);
  CHECK(weight_distribution(a) == weight_distribution(b));
  CHECK(weight_distribution_direct(a) == weight_distribution_direct(b));
  CHECK_FALSE(code_equivalent(a, b));
  CHECK_FALSE(oracle_code_equivalent(a, b));
  CHECK(oracle_code_equivalent(fam[c9[0]], fam[c9[1]]));

  const Verdict v = check_condition(fam, Condition::B);
  CHECK(v.outcome == Outcome::fails);
  REQUIRE(v.witnesses.size() == 3);
  for (const auto& w : v.witnesses) {
    const bool cross = (std::count(c9.begin(), c9.end(), w.a) && w.b == c33.front()) ||
                       (std::count(c9.begin(), c9.end(), w.b) && w.a == c33.front());
    CHECK(cross);
  }
}

TEST_CASE("homocyclic p-groups satisfy all conditions") {
  for (const auto& factors : std::vector<std::vector<u64>>{{9}, {3, 3}, {27}, {5, 5}, {9, 9}}) {
    const auto fam = family(make_group(factors), field_of_order(2));
    for (Condition c : {Condition::A, Condition::B, Condition::C}) CHECK(check_condition(fam, c).holds());
  }
}

TEST_CASE("G-equivalence agrees with explicit search") {
  const std::vector<Case> cases{{{3, 9}, 2}, {{3, 3, 3}, 2}, {{45}, 2}, {{3, 15}, 2}, {{9, 9}, 5}, {{25}, 3}};
  for (const auto& [factors, q] : cases) {
    const auto fam = family(make_group(factors), field_of_order(q));
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = 0; j < fam.size(); ++j) {
        const bool fast = code_equivalent(fam[i], fam[j], {0});
        REQUIRE(fast == oracle_code_equivalent(fam[i], fam[j]));
        if (fast) REQUIRE(fam[i].dimension() == fam[j].dimension());
      }
    }
  }
}

TEST_CASE("minimal codes over splitting fields") {
  const auto fam = family_min_splitting(make_group({3, 3}), field_of_order(4));
  REQUIRE(fam.size() == 8);
  for (const auto& c : fam) {
    CHECK(c.dimension() == 1);
    CHECK(min_weight(c).weight == 9);
  }
  for (Condition c : {Condition::A, Condition::B, Condition::C}) CHECK(check_condition(fam, c).holds());

  const auto c9 = family_min_splitting(make_group({9}), field_of_order(64));
  REQUIRE(c9.size() == 8);
  const Verdict v = check_condition(c9, Condition::B);
  CHECK(v.outcome == Outcome::fails);
  CHECK_FALSE(v.witnesses.empty());
  CHECK_THROWS_AS(family_min_splitting(make_group({9}), field_of_order(4)), std::invalid_argument);
}

TEST_CASE("minimality certificate") {
  CHECK(is_minimal_family_certified(make_group({9}), field_of_order(2)));
  CHECK(is_minimal_family_certified(make_group({3, 3}), field_of_order(5)));
  CHECK_FALSE(is_minimal_family_certified(make_group({7}), field_of_order(2)));
}

TEST_CASE("code errors") {
  const AbelianGroup g = make_group({3});
  const Field f = field_of_order(2);
  CHECK_THROWS_AS(code_of(AlgebraElement::basis(g, f, 1)), std::invalid_argument);
  CHECK_THROWS_AS(parse_condition("D"), std::invalid_argument);
  CHECK(parse_condition("b") == Condition::B);
  const Code empty = code_of(AlgebraElement(g, f));
  CHECK(empty.dimension() == 0);
  CHECK_THROWS_AS(min_weight(empty), std::invalid_argument);
  CHECK_THROWS_AS(family(make_group({6}), field_of_order(3)), std::invalid_argument);
  const auto fam = family(make_group({3, 3, 3}), f);
  CHECK_THROWS_AS(oracle_code_equivalent(fam[0], fam[1], 8), OracleUnavailable);
}
