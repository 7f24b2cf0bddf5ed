// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "abcodes/workbench.hpp"

using namespace abcodes;

namespace {

using Words = std::set<std::vector<Field::Elem>>;

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result out;
  try {
    out = body();
  } catch (const std::exception& ex) {
    out.ok = false;
    out.detail = std::string("exception: ") + ex.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_s) {
    out.ok = false;
    out.detail = "exceeded time limit";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %d  %-62s %8.3f s (limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

Words words_of(const Code& c) {
  Words out;
  for (const auto& w : c.codewords()) out.insert(w.coeffs());
  return out;
}

bool maps_into(const Code& a, const Code& b, const Automorphism& theta) {
  for (const auto& v : a.basis()) {
    if (!b.contains(v.apply(theta))) return false;
  }
  return true;
}

std::string entry_name(const CatalogEntry& e) { return e.group.name() + "/GF(" + e.field.name() + ")"; }

std::string pair_name(const std::vector<Code>& fam, const CodePair& p) {
  return fam[p.a].label_string() + " vs " + fam[p.b].label_string();
}

}  // namespace

int main() {
  const std::vector<CatalogEntry> entries = catalog(CatalogSpec{});
  std::printf("catalog: %zu (group, field) entries, odd |G| <= 81, q in {2, 5}\n", entries.size());

  criterion(1, "C2 over GF(3): codewords, parameters, non-equivalence", 1, [] {
    Result o;
    const auto fam = family(make_group({2}), field_of_order(3));
    o.require(fam.size() == 2, "family size");
    if (!o.ok) return o;
    o.require(words_of(fam[0]) == Words{{0, 0}, {1, 1}, {2, 2}}, "codewords of I_1");
    o.require(words_of(fam[1]) == Words{{0, 0}, {2, 1}, {1, 2}}, "codewords of I_2");
    for (const auto& c : fam) {
      o.require(c.dimension() == 1, "dimension");
      o.require(min_weight(c).weight == 2, "min weight");
      o.require(weight_distribution(c).to_string() == "{0:1, 2:2}", "distribution");
    }
    o.require(!code_equivalent(fam[0], fam[1]), "code_equivalent");
    return o;
  });

  criterion(2, "GF(4) C3: character idempotents, codewords, non-equivalence", 1, [] {
    Result o;
    const AbelianGroup g = make_group({3});
    const Field f = field_of_order(4);
    const auto table = characters(g, f);
    // Codes: a = 2, a^2 = 1+a = 3.
    const auto e0 = char_idempotent(table.characters[0]);
    const auto e1 = char_idempotent(table.characters[1]);
    o.require(e0.coeffs() == std::vector<Field::Elem>{1, 1, 1}, "e_chi0");
    o.require(e1.coeffs() == std::vector<Field::Elem>{1, 2, 3}, "e_chi1");
    const Code i0 = code_of(e0);
    const Code i1 = code_of(e1);
    o.require(words_of(i0) == Words{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}, "codewords of I_0");
    o.require(words_of(i1) == Words{{0, 0, 0}, {1, 2, 3}, {2, 3, 1}, {3, 1, 2}}, "codewords of I_1");
    o.require(i0.dimension() == 1 && i1.dimension() == 1, "dimension");
    o.require(min_weight(i0).weight == 3 && min_weight(i1).weight == 3, "weight");
    int autos = 0;
    for_each_automorphism(g, [&](const Automorphism& theta) {
      ++autos;
      o.require(!maps_into(i0, i1, theta), "an automorphism maps I_0 onto I_1");
      return true;
    });
    o.require(autos == 2, "automorphism count");
    o.require(!oracle_code_equivalent(i0, i1), "explicit search found an equivalence");
    return o;
  });

  criterion(3, "C9xC3 over GF(2): equal distributions, not equivalent", 5, [] {
    Result o;
    const auto fam = family(make_group({9, 3}), field_of_order(2));
    std::vector<std::size_t> c9, c33;
    for (std::size_t i = 1; i < fam.size(); ++i) {
      const Subgroup& h = *fam[i].subgroup_label();
      if (h.index() == 3) (iso_type(h).factors.size() == 1 ? c9 : c33).push_back(i);
    }
    o.require(c9.size() == 3 && c33.size() == 1, "index-3 census");
    if (!o.ok) return o;
    const Code& a = fam[c9.front()];
    const Code& b = fam[c33.front()];
    const auto da = weight_distribution_direct(a);
    const auto db = weight_distribution_direct(b);
    o.require(da.to_string() == db.to_string(), "distributions differ");
    const auto words_a = a.codewords().size();
    const auto words_b = b.codewords().size();
    o.require(da.total() == words_a && db.total() == words_b, "distribution total");
    o.require(words_a == words_b && words_a == ipow(2, static_cast<unsigned>(dim_formula(*a.subgroup_label()))),
              "codeword count is not 2^dim");
    o.require(!code_equivalent(a, b), "code_equivalent");
    o.require(!oracle_code_equivalent(a, b), "explicit search found an equivalence");
    const Verdict v = check_condition(fam, Condition::B);
    o.require(v.outcome == Outcome::fails, "Condition B does not fail");
    o.require(!v.witnesses.empty(), "no witness");
    for (const auto& w : v.witnesses) {
      const bool cross = (std::count(c9.begin(), c9.end(), w.a) && w.b == c33.front()) ||
                         (std::count(c9.begin(), c9.end(), w.b) && w.a == c33.front());
      o.require(cross, "witness outside the C9 / C3xC3 class: " + pair_name(fam, w));
    }
    if (o.ok) {
      o.detail = da.to_string() + ", " + std::to_string(words_a) + " codewords each, " +
                 std::to_string(v.witnesses.size()) + " witnesses";
    }
    return o;
  });

  u64 idempotent_checks = 0;
  Result idempotents;
  criterion(4, "catalog: dimension and weight formulas", 600, [&] {
    Result o;
    u64 labels = 0, weights = 0;
    for (const auto& e : entries) {
      const auto fam = family(e.group, e.field);
      for (const auto& c : fam) {
        const Subgroup& h = *c.subgroup_label();
        ++labels;
        o.require(c.dimension() == dim_formula(h), entry_name(e) + " dim " + c.label_string());
        try {
          const u64 w = min_weight(c).weight;
          ++weights;
          o.require(w == weight_formula(h), entry_name(e) + " weight " + c.label_string());
        } catch (const CapExceeded&) {
        }
      }
      // Criterion 5 rides along on the same family.
      const auto one = AlgebraElement::one(e.group, e.field);
      AlgebraElement sum(e.group, e.field);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& ei = fam[i].generator();
        idempotents.require(ei * ei == ei, entry_name(e) + " e^2 != e");
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          idempotents.require((ei * fam[j].generator()).is_zero(), entry_name(e) + " e_H e_K != 0");
        }
        sum = sum + ei;
      }
      idempotents.require(sum == one, entry_name(e) + " sum != 1");
      ++idempotent_checks;
    }
    o.require(weights == labels, std::to_string(labels - weights) + " weights beyond the cap");
    if (o.ok) o.detail = std::to_string(labels) + " labels, all within cap";
    return o;
  });

  criterion(5, "catalog: idempotent algebra", 600, [&] {
    Result o = idempotents;
    o.require(idempotent_checks == entries.size(), "not every entry checked");
    if (o.ok) o.detail = std::to_string(idempotent_checks) + " entries";
    return o;
  });

  criterion(6, "catalog: condition theorems and tau(G) count", 900, [&] {
    Result o;
    u64 checked = 0;
    for (const auto& e : entries) {
      const AbelianGroup& g = e.group;
      const bool homo = sylows_homocyclic(g);
      std::set<IsoType> types{iso_type(g)};
      for (const auto& h : cocyclic_subgroups(g)) types.insert(iso_type(h));
      const u64 tau = exponent_tau(g).tau;
      o.require(types.size() >= tau && (types.size() == tau) == homo, entry_name(e) + " tau count");
      if (g.is_trivial()) continue;
      FamilyEvaluator eval(family(g, e.field));
      const bool pgroup = is_p_group(g);
      for (Condition c : {Condition::A, Condition::B, Condition::C}) {
        const Verdict v = eval.check(c);
        const std::string where = entry_name(e) + " Condition " + to_string(c);
        o.require(v.outcome != Outcome::indeterminate, where + " indeterminate");
        if (c != Condition::C || pgroup) {
          o.require(v.holds() == homo, where + (v.witnesses.empty() ? "" : " witness " + pair_name(eval.codes(), v.witnesses.front())));
        } else {
          o.require(!v.holds() || homo, where + " holds without homocyclic Sylows");
        }
      }
      ++checked;
    }
    if (o.ok) o.detail = std::to_string(checked) + " nontrivial entries";
    return o;
  });

  criterion(7, "C6 over GF(5) and C9xC9xC49 edge cases", 2, [] {
    Result o;
    const auto t0 = std::chrono::steady_clock::now();
    {
      const AbelianGroup g = make_group({6});
      const Field f = field_of_order(5);
      const auto a2 = Subgroup::generated_by(g, std::vector<ElementIndex>{2});
      const Code ig = subgroup_code(Subgroup::whole(g), f);
      const Code ih = subgroup_code(a2, f);
      o.require(min_weight(ig).weight == 6 && min_weight(ih).weight == 6, "C6 weights");
      o.require(!code_equivalent(ig, ih), "C6 codes equivalent");
      o.require(check_condition(family(g, f), Condition::A).outcome == Outcome::fails, "C6 Condition A");
      o.require(sylows_homocyclic(g), "C6 Sylows");
    }
    const double c6 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(c6 < 1, "C6 over 1 s");
    const auto t1 = std::chrono::steady_clock::now();
    {
      const AbelianGroup g = make_group({9, 9, 49});
      const ElementIndex a = g.index_of({{1, 0}});
      const ElementIndex b = g.index_of({{0, 49}});
      const ElementIndex c = g.index_of({{0, 9}});
      const Subgroup h = Subgroup::generated_by(g, std::vector<ElementIndex>{a, c});
      const Subgroup k = Subgroup::generated_by(g, std::vector<ElementIndex>{a, b, g.multiple(c, 7)});
      o.require(is_cocyclic(h) && is_cocyclic(k), "C9xC9xC49 labels not cocyclic");
      o.require(dim_formula(h) == 6 && dim_formula(k) == 6, "C9xC9xC49 dims");
      o.require(h.order() == 441 && k.order() == 567, "C9xC9xC49 orders");
    }
    const double big = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    o.require(big < 1, "C9xC9xC49 over 1 s");
    if (o.ok) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "C6 %.3f s, C9xC9xC49 %.3f s", c6, big);
      o.detail = buf;
    }
    return o;
  });

  criterion(8, "catalog: invariant tests agree with automorphism search", 900, [&] {
    Result o;
    u64 subgroup_pairs = 0, code_pairs = 0;
    const AbelianGroup* last = nullptr;
    for (const auto& e : entries) {
      const AbelianGroup& g = e.group;
      if (g.order() > 512) continue;
      if (!last || !(*last == g)) {
        const auto cc = cocyclic_subgroups(g);
        for (const auto& h : cc) {
          for (const auto& k : cc) {
            ++subgroup_pairs;
            o.require(g_isomorphic(h, k, {0}) == oracle_g_isomorphic(h, k, 512), entry_name(e) + " g_isomorphic");
          }
        }
        last = &e.group;
      }
      const auto fam = family(g, e.field);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          ++code_pairs;
          o.require(code_equivalent(fam[i], fam[j], {0}) == oracle_code_equivalent(fam[i], fam[j], 512),
                    entry_name(e) + " code_equivalent " + pair_name(fam, {i, j}));
        }
      }
    }
    if (o.ok) o.detail = std::to_string(subgroup_pairs) + " subgroup pairs, " + std::to_string(code_pairs) + " code pairs";
    return o;
  });

  criterion(9, "splitting fields: I_min over elementary abelian and C9", 60, [&] {
    Result o;
    u64 cases = 0;
    std::set<std::vector<u64>> seen;
    for (const auto& e : entries) {
      const AbelianGroup& g = e.group;
      if (!seen.insert(g.factors()).second || !is_elementary_abelian(g) || g.is_trivial()) continue;
      for (u64 q : {4, 16, 64}) {
        if ((q - 1) % g.exponent() != 0) continue;
        FamilyEvaluator eval(family_min_splitting(g, field_of_order(q)));
        const std::string where = g.name() + "/GF(" + std::to_string(q) + ")";
        for (std::size_t i = 0; i < eval.codes().size(); ++i) {
          o.require(eval.codes()[i].dimension() == 1, where + " dim");
          const auto w = eval.min_weight(i);
          o.require(w && w->weight == g.order(), where + " weight");
        }
        const auto classes = eval.classes();
        o.require(std::all_of(classes.begin(), classes.end(), [](std::size_t c) { return c == 0; }),
                  where + " more than one class");
        ++cases;
      }
    }
    const auto c9 = family_min_splitting(make_group({9}), field_of_order(64));
    const Verdict v = check_condition(c9, Condition::B);
    o.require(v.outcome == Outcome::fails && !v.witnesses.empty(), "C9/GF(64) Condition B on I_min");
    if (o.ok) {
      o.detail = std::to_string(cases) + " elementary abelian cases; C9/GF(64) witness " +
                 pair_name(c9, v.witnesses.front());
    }
    return o;
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
