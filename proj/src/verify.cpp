#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "abcodes/workbench.hpp"

namespace abcodes {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_applicable:
      return "n/a";
  }
  return "?";
}

u64 Report::failures() const {
  u64 n = 0;
  for (const auto& e : entries) {
    for (const auto& c : e.checks) n += c.status == Status::fail;
  }
  for (const auto& c : examples) n += c.status == Status::fail;
  return n;
}

namespace {

std::string pair_string(const std::vector<Code>& codes, const CodePair& p) {
  return codes[p.a].label_string() + " / " + codes[p.b].label_string();
}

CheckLine line(std::string anchor, bool ok, std::string detail) {
  return {std::move(anchor), ok ? Status::pass : Status::fail, std::move(detail)};
}

std::string verdict_summary(const ConditionRecord& c) {
  std::string s = to_string(c.verdict.outcome);
  if (!c.first_witness.empty()) {
    s += " (witness " + c.first_witness + ", " + std::to_string(c.verdict.witnesses.size()) + " pairs)";
  }
  if (!c.verdict.skipped.empty()) s += " (" + std::to_string(c.verdict.skipped.size()) + " pairs beyond cap)";
  return s;
}

const ConditionRecord& condition_of(const FamilyReport& f, Condition c) {
  for (const auto& r : f.conditions) {
    if (r.condition == c) return r;
  }
  throw std::logic_error("condition record missing");
}

// Biconditional "condition holds iff expected".
CheckLine biconditional(const std::string& anchor, const ConditionRecord& c, bool expected, const std::string& property) {
  const std::string detail = "Condition " + to_string(c.condition) + " " + verdict_summary(c) + "; " + property + " " +
                             (expected ? "true" : "false");
  if (c.verdict.outcome == Outcome::indeterminate) return {anchor, Status::fail, "indeterminate: " + detail};
  return line(anchor, c.verdict.holds() == expected, detail);
}

}  // namespace

FamilyReport analyze_family(const std::string& name, FamilyEvaluator& eval, const AnalyzeOptions& options) {
  const auto& codes = eval.codes();
  FamilyReport out{name, codes.front().field().name(), {}, {}};
  for (Condition c : options.conditions) {
    ConditionRecord r{c, eval.check(c), ""};
    if (!r.verdict.witnesses.empty()) r.first_witness = pair_string(codes, r.verdict.witnesses.front());
    out.conditions.push_back(std::move(r));
  }
  const auto classes = eval.classes();
  const bool p_group = is_p_group(codes.front().group());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const Code& code = codes[i];
    CodeRecord r;
    r.index = i;
    r.label = code.label_string();
    r.dim = code.dimension();
    if (const Subgroup* h = code.subgroup_label()) {
      r.subgroup_order = h->order();
      r.dim_formula = dim_formula(*h);
      r.weight_formula = weight_formula(*h);
      r.certified_minimal = p_group && is_minimal_family_certified(code.group(), code.field());
    } else {
      r.certified_minimal = std::holds_alternative<CharacterLabel>(code.label());
    }
    if (code.dimension() > 0) {
      if (const auto w = eval.min_weight(i)) {
        r.min_weight = w->weight;
        r.weight_method = w->method;
      }
      if (options.distributions && codeword_count(code.field().order(), code.dimension()) <= eval.caps().enum_cap) {
        r.distribution = eval.distribution(i);
      }
    }
    r.class_id = classes[i];
    out.codes.push_back(std::move(r));
  }
  return out;
}

EntryReport summarize(const AbelianGroup& group, const Field& field) {
  EntryReport e;
  e.group = group.name();
  e.field = field.name();
  e.order = group.order();
  e.p_group = is_p_group(group);
  e.sylows_homocyclic = sylows_homocyclic(group);
  e.elementary_abelian = is_elementary_abelian(group);
  const auto et = exponent_tau(group);
  e.exponent = et.exponent;
  e.tau = et.tau;
  std::set<IsoType> types{iso_type(group)};
  for (const auto& h : cocyclic_subgroups(group)) types.insert(iso_type(h));
  e.iso_types = types.size();
  return e;
}

EntryReport analyze(const AbelianGroup& group, const Field& field, const AnalyzeOptions& options) {
  EntryReport e = summarize(group, field);
  FamilyEvaluator eval(family(group, field), options.caps);
  e.families.push_back(analyze_family("I", eval, options));
  return e;
}

EntryReport verify_entry(const AbelianGroup& group, const Field& field, const std::vector<u64>& splitting_fields,
                         const Caps& caps) {
  AnalyzeOptions options;
  options.caps = caps;
  EntryReport e = analyze(group, field, options);
  const FamilyReport& fam = e.families.front();
  auto& checks = e.checks;
  const std::vector<Code> codes = family(group, field);

  {
    std::size_t bad = 0;
    std::string first;
    for (const auto& r : fam.codes) {
      if (r.dim_formula && *r.dim_formula != r.dim) {
        if (bad++ == 0) first = r.label + ": rank " + std::to_string(r.dim) + " vs " + std::to_string(*r.dim_formula);
      }
    }
    checks.push_back(line("dimension formula", bad == 0,
                          bad == 0 ? std::to_string(fam.codes.size()) + " labels agree" : first));
  }
  {
    std::size_t bad = 0;
    std::size_t checked = 0;
    std::size_t beyond = 0;
    std::string first;
    for (const auto& r : fam.codes) {
      if (!r.min_weight) {
        ++beyond;
        continue;
      }
      ++checked;
      if (*r.min_weight != *r.weight_formula && bad++ == 0) {
        first = r.label + ": weight " + std::to_string(*r.min_weight) + " vs " + std::to_string(*r.weight_formula);
      }
    }
    checks.push_back(line("weight formula", bad == 0,
                          bad == 0 ? std::to_string(checked) + " labels agree, " + std::to_string(beyond) + " beyond cap"
                                   : first));
  }
  {
    bool idem = true;
    bool orth = true;
    AlgebraElement sum(group, field);
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const auto& ei = codes[i].generator();
      idem = idem && ei.is_idempotent();
      sum = sum + ei;
      for (std::size_t j = i + 1; j < codes.size(); ++j) orth = orth && (ei * codes[j].generator()).is_zero();
    }
    checks.push_back(line("idempotents: e_H e_H = e_H", idem, std::to_string(codes.size()) + " idempotents"));
    checks.push_back(line("idempotents: e_H e_K = 0 for H != K", orth, ""));
    checks.push_back(line("idempotents: sum of e_H plus G-hat is 1", sum == AlgebraElement::one(group, field), ""));
  }
  {
    const bool ok = e.iso_types >= e.tau && ((e.iso_types == e.tau) == e.sylows_homocyclic);
    checks.push_back(line("cocyclic iso types: count equals tau(G) iff Sylow subgroups homocyclic", ok,
                          std::to_string(e.iso_types) + " iso types, tau " + std::to_string(e.tau) +
                              ", Sylows homocyclic " + (e.sylows_homocyclic ? "true" : "false")));
  }

  const ConditionRecord& a = condition_of(fam, Condition::A);
  const ConditionRecord& b = condition_of(fam, Condition::B);
  const ConditionRecord& c = condition_of(fam, Condition::C);
  if (group.order() == 1) {
    checks.push_back({"characterization theorems", Status::not_applicable, "trivial group"});
  } else if (group.order() % 2 == 0) {
    std::string detail = "odd-order hypothesis violated; A " + to_string(a.verdict.outcome) + ", B " +
                         to_string(b.verdict.outcome) + ", C " + to_string(c.verdict.outcome);
    if (e.sylows_homocyclic && !a.verdict.holds()) detail += "; Condition A fails despite homocyclic Sylows";
    checks.push_back({"characterization theorems", Status::not_applicable, detail});
  } else if (e.p_group) {
    const bool homo = is_homocyclic(group);
    checks.push_back(biconditional("odd p-group: Condition A iff homocyclic", a, homo, "homocyclic"));
    checks.push_back(biconditional("odd p-group: Condition B iff homocyclic", b, homo, "homocyclic"));
    checks.push_back(biconditional("odd p-group: Condition C iff homocyclic", c, homo, "homocyclic"));
  } else {
    const bool homo = e.sylows_homocyclic;
    checks.push_back(biconditional("odd order: Condition A iff Sylow subgroups homocyclic", a, homo, "Sylows homocyclic"));
    checks.push_back(biconditional("odd order: Condition B iff Sylow subgroups homocyclic", b, homo, "Sylows homocyclic"));
    std::string detail = "Condition C " + verdict_summary(c) + "; Sylows homocyclic " + (homo ? "true" : "false");
    if (homo) detail += "; converse observed: C " + to_string(c.verdict.outcome);
    checks.push_back(line("odd order: Condition C implies Sylow subgroups homocyclic", !c.verdict.holds() || homo,
                          detail));
  }

  const auto primes = prime_divisors(group.order() == 1 ? 1 : group.order());
  if (group.order() % 2 == 1 && primes.size() == 2 && primes[1] % primes[0] != 1) {
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 1; i < codes.size(); ++i) {
      for (std::size_t j = i + 1; j < codes.size(); ++j) {
        const Subgroup& h = *codes[i].subgroup_label();
        const Subgroup& k = *codes[j].subgroup_label();
        if (dim_formula(h) == dim_formula(k) && codes[i].dimension() == codes[j].dimension() &&
            h.order() != k.order() && bad++ == 0) {
          first = codes[i].label_string() + " / " + codes[j].label_string();
        }
      }
    }
    checks.push_back(line("two primes, p2 != 1 mod p1: equal dimension implies equal |H|", bad == 0,
                          bad == 0 ? "all cocyclic pairs" : first));
  }

  if (group.order() <= caps.oracle_cap) {
    const OracleOptions oracle{caps.oracle_cap};
    const auto cc = cocyclic_subgroups(group);
    std::string failure;
    u64 pairs = 0;
    try {
      for (std::size_t i = 0; i < cc.size(); ++i) {
        for (std::size_t j = i; j < cc.size(); ++j, ++pairs) g_isomorphic(cc[i], cc[j], oracle);
      }
    } catch (const std::logic_error& ex) {
      failure = ex.what();
    }
    checks.push_back(line("G-isomorphism: invariants agree with automorphism search", failure.empty(),
                          failure.empty() ? std::to_string(pairs) + " cocyclic pairs" : failure));
    failure.clear();
    pairs = 0;
    try {
      for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = i + 1; j < codes.size(); ++j, ++pairs) code_equivalent(codes[i], codes[j], oracle);
      }
    } catch (const std::logic_error& ex) {
      failure = ex.what();
    }
    checks.push_back(line("G-equivalence: subgroup criterion agrees with explicit search", failure.empty(),
                          failure.empty() ? std::to_string(pairs) + " code pairs" : failure));
  }

  for (u64 q : splitting_fields) {
    if (!e.p_group || gcd(q, group.order()) != 1 || (q - 1) % group.exponent() != 0) continue;
    const Field splitting = field_of_order(q);
    FamilyEvaluator eval(family_min_splitting(group, splitting), caps);
    e.families.push_back(analyze_family("I_min", eval, options));
    const FamilyReport& fmin = e.families.back();
    const std::string over = " (GF(" + std::to_string(q) + "))";
    const bool elem = e.elementary_abelian;
    for (Condition cond : {Condition::A, Condition::B, Condition::C}) {
      checks.push_back(biconditional("splitting field: Condition " + to_string(cond) +
                                         " on I_min iff elementary abelian" + over,
                                     condition_of(fmin, cond), elem, "elementary abelian"));
    }
    if (elem) {
      bool ok = true;
      for (const auto& r : fmin.codes) {
        ok = ok && r.dim == 1 && r.min_weight && *r.min_weight == group.order() && r.class_id == 0;
      }
      checks.push_back(line("splitting field: elementary abelian I_min codes have dim 1, weight |G|, one class" + over,
                            ok, std::to_string(fmin.codes.size()) + " codes"));
    }
  }
  return e;
}

Report verify_theorems(const CatalogSpec& spec, const VerifyOptions& options) {
  const auto entries = catalog(spec);
  Report report;
  report.kind = "verify-theorems";
  auto join = [](const std::vector<u64>& v) {
    std::string s;
    for (u64 x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  report.meta = {{"max_order", std::to_string(spec.max_order)},
                 {"odd_only", spec.odd_only ? "true" : "false"},
                 {"primes", join(spec.primes)},
                 {"fields", join(spec.fields)},
                 {"splitting_fields", join(spec.splitting_fields)},
                 {"enum_cap", std::to_string(options.caps.enum_cap)},
                 {"oracle_cap", std::to_string(options.caps.oracle_cap)}};

  // The splitting-field checks depend only on G; attach them to its first entry.
  std::vector<bool> first(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) first[i] = i == 0 || !(entries[i].group == entries[i - 1].group);

  report.entries.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto& [group, field] = entries[i];
      try {
        report.entries[i] = verify_entry(group, field, first[i] ? spec.splitting_fields : std::vector<u64>{},
                                         options.caps);
      } catch (const std::exception& ex) {
        EntryReport failed;
        failed.group = group.name();
        failed.field = field.name();
        failed.order = group.order();
        failed.checks.push_back({"evaluation", Status::fail, ex.what()});
        report.entries[i] = std::move(failed);
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace abcodes
