#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abcodes/workbench.hpp"

using namespace abcodes;

namespace {

struct Common {
  std::string format = "markdown";
  std::string out = "-";
  u64 cap = default_enum_cap();
  u64 oracle_cap = 512;

  Caps caps() const { return {cap, oracle_cap}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json, csv or markdown")->capture_default_str();
  cmd->add_option("--out", c.out, "output path, - for stdout")->capture_default_str();
  cmd->add_option("--cap", c.cap, "codeword enumeration cap")->capture_default_str();
  cmd->add_option("--oracle-cap", c.oracle_cap, "largest |G| checked by automorphism search")->capture_default_str();
}

struct CatalogArgs {
  u64 max_order = 81;
  bool all_orders = false;
  std::vector<u64> primes;
  std::vector<u64> fields{2, 5};
  std::vector<u64> splitting_fields{4, 16, 64};

  CatalogSpec spec() const {
    CatalogSpec s;
    s.max_order = max_order;
    s.odd_only = !all_orders;
    s.primes = primes;
    s.fields = fields;
    s.splitting_fields = splitting_fields;
    return s;
  }
};

void add_catalog(CLI::App* cmd, CatalogArgs& a, bool splitting) {
  cmd->add_option("--max-order", a.max_order, "largest group order")->capture_default_str();
  cmd->add_flag("--all-orders", a.all_orders, "include even orders");
  cmd->add_option("--primes", a.primes, "restrict to orders built from these primes")->delimiter(',');
  cmd->add_option("--fields", a.fields, "field orders paired with each coprime group")->delimiter(',');
  if (splitting) {
    cmd->add_option("--splitting-fields", a.splitting_fields, "field orders for the I_min checks")->delimiter(',');
  }
}

int finish(const Report& report, const Common& c) {
  emit(report, parse_format(c.format), c.out);
  const u64 failures = report.failures();
  if (failures > 0) std::cerr << failures << " failing check(s)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian group codes: parameters, G-equivalence and the homocyclic conditions"};
  app.require_subcommand(1);

  Common common;
  CatalogArgs cat;
  std::string group_text;
  std::string field_text;
  std::string family_name = "I";
  std::string condition_text;
  bool no_distributions = false;
  unsigned jobs = 1;

  auto* params = app.add_subcommand("params", "dimensions, weights, distributions and classes of one family");
  params->add_option("--group", group_text, "invariant factors, e.g. 9x3")->required();
  params->add_option("--field", field_text, "field order, e.g. 2 or 4")->required();
  params->add_option("--family", family_name, "I or I_min")->check(CLI::IsMember({"I", "I_min"}))->capture_default_str();
  params->add_flag("--no-distributions", no_distributions, "skip weight distributions");
  add_common(params, common);

  auto* check = app.add_subcommand("check", "verdict of one condition over one family");
  check->add_option("--group", group_text, "invariant factors, e.g. 9x3")->required();
  check->add_option("--field", field_text, "field order")->required();
  check->add_option("--condition", condition_text, "A, B or C")->required();
  check->add_option("--family", family_name, "I or I_min")->check(CLI::IsMember({"I", "I_min"}))->capture_default_str();
  add_common(check, common);

  auto* verify = app.add_subcommand("verify-theorems", "check the characterization theorems over a catalog");
  add_catalog(verify, cat, true);
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  add_common(verify, common);

  auto* examples = app.add_subcommand("reproduce-examples", "regression of the worked examples");
  add_common(examples, common);

  auto* listing = app.add_subcommand("catalog", "list catalog groups with their invariants");
  add_catalog(listing, cat, false);
  add_common(listing, common);

  CLI11_PARSE(app, argc, argv);

  try {
    parse_format(common.format);
    if (params->parsed() || check->parsed()) {
      const AbelianGroup group = parse_group(group_text);
      const Field field = parse_field(field_text);
      AnalyzeOptions options;
      options.caps = common.caps();
      options.distributions = !no_distributions;
      if (check->parsed()) {
        options.conditions = {parse_condition(condition_text)};
        options.distributions = false;
      }
      Report report;
      report.kind = params->parsed() ? "params" : "check";
      report.meta = {{"family", family_name},
                     {"enum_cap", std::to_string(common.cap)},
                     {"oracle_cap", std::to_string(common.oracle_cap)}};
      EntryReport entry = summarize(group, field);
      FamilyEvaluator eval(family_name == "I" ? family(group, field) : family_min_splitting(group, field),
                           options.caps);
      entry.families.push_back(analyze_family(family_name, eval, options));
      report.entries.push_back(std::move(entry));
      emit(report, parse_format(common.format), common.out);
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions options;
      options.caps = common.caps();
      options.jobs = jobs;
      return finish(verify_theorems(cat.spec(), options), common);
    }
    if (examples->parsed()) return finish(reproduce_examples(common.caps()), common);
    if (listing->parsed()) {
      Report report;
      report.kind = "catalog";
      for (const auto& [group, field] : catalog(cat.spec())) report.entries.push_back(summarize(group, field));
      emit(report, parse_format(common.format), common.out);
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
