#include <algorithm>
#include <set>

#include "abcodes/workbench.hpp"

namespace abcodes {

namespace {

using Coeffs = std::vector<Field::Elem>;

std::set<Coeffs> codeword_set(const Code& code) {
  std::set<Coeffs> out;
  for (const auto& w : code.codewords()) out.insert(w.coeffs());
  return out;
}

std::string set_string(const Code& code) {
  std::string s = "{";
  for (const auto& w : code.codewords()) s += (s.size() > 1 ? ", " : "") + w.to_string();
  return s + "}";
}

CheckLine check(std::string anchor, bool ok, std::string detail) {
  return {std::move(anchor), ok ? Status::pass : Status::fail, std::move(detail)};
}

void c2_over_f3(std::vector<CheckLine>& out, const Caps& caps) {
  const AbelianGroup G = make_group({2});
  const Field F = make_field(3, 1);
  const auto codes = family(G, F);  // I_G, I_1
  const Code& i1 = codes[0];
  const Code& i2 = codes[1];
  out.push_back(check("C2 over GF(3): idempotents 2+2a and 2+a",
                      i1.generator().coeffs() == Coeffs{2, 2} && i2.generator().coeffs() == Coeffs{2, 1},
                      i1.generator().to_string() + ", " + i2.generator().to_string()));
  out.push_back(check("C2 over GF(3): codewords {0, 1+a, 2+2a} and {0, 2+a, 1+2a}",
                      codeword_set(i1) == std::set<Coeffs>{{0, 0}, {1, 1}, {2, 2}} &&
                          codeword_set(i2) == std::set<Coeffs>{{0, 0}, {2, 1}, {1, 2}},
                      set_string(i1) + ", " + set_string(i2)));
  const WeightDistribution expected{{{0, 1}, {2, 2}}};
  const auto d1 = weight_distribution(i1, caps.enum_cap);
  const auto d2 = weight_distribution(i2, caps.enum_cap);
  out.push_back(check("C2 over GF(3): dim 1, weight 2, distribution {0:1, 2:2}",
                      i1.dimension() == 1 && i2.dimension() == 1 && min_weight(i1).weight == 2 &&
                          min_weight(i2).weight == 2 && d1 == expected && d2 == expected,
                      d1.to_string() + ", " + d2.to_string()));
  const bool eq = code_equivalent(i1, i2, OracleOptions{caps.oracle_cap});
  out.push_back(check("C2 over GF(3): I_1 and I_2 not G-equivalent", !eq, eq ? "equivalent" : "not equivalent"));
  FamilyEvaluator eval(codes, caps);
  std::string detail;
  bool ok = true;
  for (Condition c : {Condition::A, Condition::B, Condition::C}) {
    const Verdict v = eval.check(c);
    ok = ok && v.outcome == Outcome::fails && v.witnesses == std::vector<CodePair>{{0, 1}};
    detail += (detail.empty() ? "" : "; ") + to_string(c) + " " + to_string(v.outcome);
  }
  out.push_back(check("C2 over GF(3): Conditions A, B, C fail with witness (G, 1)", ok, detail));
}

void f4_c3(std::vector<CheckLine>& out, const Caps& caps) {
  const AbelianGroup G = make_group({3});
  const Field F = make_field(2, 2);
  const Field::Elem a = F.primitive_element();
  const Field::Elem a2 = F.mul(a, a);
  const auto table = characters(G, F);
  const AlgebraElement e0 = char_idempotent(table.characters[0], F);
  const AlgebraElement e1 = char_idempotent(table.characters[1], F);
  out.push_back(check("GF(4) C3: e_chi0 = 1+g+g^2 and e_chi1 = 1+ag+a^2g^2",
                      table.extension_degree == 1 && e0.coeffs() == Coeffs{1, 1, 1} && e1.coeffs() == Coeffs{1, a, a2},
                      e0.to_string() + ", " + e1.to_string()));
  const Code i0 = code_of(e0, CharacterLabel{table.characters[0].residues});
  const Code i1 = code_of(e1, CharacterLabel{table.characters[1].residues});
  const std::set<Coeffs> want0{{0, 0, 0}, {1, 1, 1}, {a, a, a}, {a2, a2, a2}};
  const std::set<Coeffs> want1{{0, 0, 0}, {1, a, a2}, {a, a2, 1}, {a2, 1, a}};
  out.push_back(check("GF(4) C3: codeword sets of I_0 and I_1", codeword_set(i0) == want0 && codeword_set(i1) == want1,
                      set_string(i0) + ", " + set_string(i1)));
  const auto d0 = weight_distribution(i0, caps.enum_cap);
  const auto d1 = weight_distribution(i1, caps.enum_cap);
  out.push_back(check("GF(4) C3: w = 3, dim 1 and identical distributions",
                      min_weight(i0).weight == 3 && min_weight(i1).weight == 3 && i0.dimension() == 1 &&
                          i1.dimension() == 1 && d0 == d1,
                      d0.to_string() + ", " + d1.to_string()));
  u64 automorphisms = 0;
  bool fixes = true;
  bool maps = false;
  for_each_automorphism(G, [&](const Automorphism& theta) {
    ++automorphisms;
    for (const auto& w : i0.codewords()) fixes = fixes && w.apply(theta) == w;
    bool all_in = true;
    for (const auto& w : i0.basis()) all_in = all_in && i1.contains(w.apply(theta));
    maps = maps || all_in;
    return true;
  });
  const ElementIndex g = G.generator(0);
  const Automorphism inversion(G, {G.neg(g)});
  bool inversion_fixes = true;
  for (const auto& w : i0.codewords()) inversion_fixes = inversion_fixes && w.apply(inversion) == w;
  out.push_back(check("GF(4) C3: both automorphisms fix I_0 pointwise, so I_0 and I_1 are not G-equivalent",
                      automorphisms == 2 && fixes && inversion_fixes && !maps &&
                          !oracle_code_equivalent(i0, i1, caps.oracle_cap),
                      std::to_string(automorphisms) + " automorphisms"));
  FamilyEvaluator eval({i0, i1}, caps);
  bool ok = true;
  for (Condition c : {Condition::A, Condition::B, Condition::C}) ok = ok && eval.check(c).outcome == Outcome::fails;
  out.push_back(check("GF(4) C3: none of Conditions A, B, C holds on {I_0, I_1}", ok, ""));
}

void c6_over_f5(std::vector<CheckLine>& out, const Caps& caps) {
  const AbelianGroup G = make_group({6});
  const Field F = make_field(5, 1);
  const ElementIndex a = G.generator(0);
  const std::vector<ElementIndex> ga2{G.multiple(a, 2)};
  const std::vector<ElementIndex> ga3{G.multiple(a, 3)};
  const Subgroup h = Subgroup::generated_by(G, ga2);
  const Subgroup t = Subgroup::generated_by(G, ga3);
  const AlgebraElement product = hat(h, F) * (AlgebraElement::one(G, F) - hat(t, F));
  const Code ig = subgroup_code(Subgroup::whole(G), F);
  const Code ih = subgroup_code(h, F);
  const u64 wg = min_weight(ig, caps.enum_cap).weight;
  const u64 wh = min_weight(ih, caps.enum_cap).weight;
  const bool eq = code_equivalent(ig, ih, OracleOptions{caps.oracle_cap});
  out.push_back(check("C6 over GF(5): e_<a^2> = <a^2>-hat (1 - <a^3>-hat)", ih.generator() == product,
                      ih.generator().to_string()));
  out.push_back(check("C6 over GF(5): w(I_G) = w(I_<a^2>) = 6, not G-equivalent",
                      wg == 6 && wh == 6 && weight_formula(h) == 6 && !eq,
                      "weights " + std::to_string(wg) + ", " + std::to_string(wh)));
  const Verdict v = check_condition(family(G, F), Condition::A, caps);
  out.push_back(check("C6 over GF(5): Condition A fails although the Sylow subgroups are homocyclic",
                      v.outcome == Outcome::fails && sylows_homocyclic(G), to_string(v.outcome)));
}

void c9_c9_c49(std::vector<CheckLine>& out, const Caps& caps) {
  const AbelianGroup G = make_group({9, 9, 49});
  // Canonical form C9 x C441: a = (1,0), b = (0,49) of order 9, c = (0,9) of order 49.
  const ElementIndex a = G.index_of({{1, 0}});
  const ElementIndex b = G.index_of({{0, 49}});
  const ElementIndex c = G.index_of({{0, 9}});
  const std::vector<ElementIndex> hg{a, c};
  const std::vector<ElementIndex> kg{a, b, G.multiple(c, 7)};
  const Subgroup h = Subgroup::generated_by(G, hg);
  const Subgroup k = Subgroup::generated_by(G, kg);
  const bool cocyclic = is_cocyclic(h) && is_cocyclic(k);
  const u64 dh = dim_formula(h);
  const u64 dk = dim_formula(k);
  out.push_back(check("C9xC9xC49: dim formula gives 6 = 6 while |H| = 441 and |K| = 567",
                      cocyclic && dh == 6 && dk == 6 && h.order() == 441 && k.order() == 567,
                      "dims " + std::to_string(dh) + ", " + std::to_string(dk) + "; |H| " + std::to_string(h.order()) +
                          ", |K| " + std::to_string(k.order())));
  const Field F = make_field(2, 1);
  const u64 rh = subgroup_code(h, F).dimension();
  const u64 rk = subgroup_code(k, F).dimension();
  out.push_back(check("C9xC9xC49: ranks over GF(2) match the formula", rh == 6 && rk == 6,
                      "ranks " + std::to_string(rh) + ", " + std::to_string(rk)));
  (void)caps;
}

void c9_c3_over_f2(std::vector<CheckLine>& out, const Caps& caps) {
  const AbelianGroup G = make_group({9, 3});
  const Field F = make_field(2, 1);
  const auto codes = family(G, F);
  const Code* ih = nullptr;
  const Code* ik = nullptr;
  for (const auto& code : codes) {
    const Subgroup* s = code.subgroup_label();
    if (s->index() != 3) continue;
    if (iso_type(*s).factors == std::vector<u64>{9} && !ih) ih = &code;
    if (iso_type(*s).factors == std::vector<u64>{3, 3}) ik = &code;
  }
  if (!ih || !ik) {
    out.push_back(check("C9xC3 over GF(2): index-3 labels H ~ C9 and K ~ C3xC3", false, "labels not found"));
    return;
  }
  const auto dh = weight_distribution(*ih, caps.enum_cap);
  const auto dk = weight_distribution(*ik, caps.enum_cap);
  const auto direct_h = weight_distribution_direct(*ih, caps.enum_cap);
  const auto direct_k = weight_distribution_direct(*ik, caps.enum_cap);
  const bool eq = code_equivalent(*ih, *ik, OracleOptions{caps.oracle_cap});
  out.push_back(check("C9xC3 over GF(2): I_H (H ~ C9) and I_K (K ~ C3xC3) have identical distributions, not G-equivalent",
                      dh == dk && direct_h == dh && direct_k == dk && !eq,
                      dh.to_string() + " (" + std::to_string(dh.total()) + " codewords each)"));
  const Verdict v = check_condition(codes, Condition::B, caps);
  bool same_class = !v.witnesses.empty();
  for (const auto& p : v.witnesses) {
    std::set<std::vector<u64>> types{iso_type(*codes[p.a].subgroup_label()).factors,
                                     iso_type(*codes[p.b].subgroup_label()).factors};
    same_class = same_class && types == std::set<std::vector<u64>>{{9}, {3, 3}} &&
                 codes[p.a].subgroup_label()->index() == 3 && codes[p.b].subgroup_label()->index() == 3;
  }
  out.push_back(check("C9xC3 over GF(2): Condition B fails, every witness pairs an index-3 C9 with C3xC3",
                      v.outcome == Outcome::fails && same_class,
                      to_string(v.outcome) + ", " + std::to_string(v.witnesses.size()) + " witnesses"));
}

}  // namespace

Report reproduce_examples(const Caps& caps) {
  Report report;
  report.kind = "reproduce-examples";
  report.meta = {{"enum_cap", std::to_string(caps.enum_cap)}, {"oracle_cap", std::to_string(caps.oracle_cap)}};
  for (auto* run : {&c2_over_f3, &f4_c3, &c6_over_f5, &c9_c9_c49, &c9_c3_over_f2}) {
    try {
      run(report.examples, caps);
    } catch (const std::exception& ex) {
      report.examples.push_back({"example raised an error", Status::fail, ex.what()});
    }
  }
  return report;
}

}  // namespace abcodes
