#pragma once

// Catalogs, theorem verification, worked-example regressions and reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abcodes/codes.hpp"

namespace abcodes {

struct CatalogSpec {
  u64 max_order = 81;
  bool odd_only = true;
  std::vector<u64> primes;                           // empty: no restriction
  std::vector<u64> fields{2, 5};                     // paired with each coprime group
  std::vector<u64> splitting_fields{4, 16, 64};      // I_min checks where exponent | q-1
};

struct CatalogEntry {
  AbelianGroup group;
  Field field;
};

// Every abelian group of each qualifying order, sorted by order and then by
// invariant factors.
std::vector<AbelianGroup> catalog_groups(const CatalogSpec& spec);
// catalog_groups paired with every coprime field of spec.fields.
std::vector<CatalogEntry> catalog(const CatalogSpec& spec);
// All abelian groups of order n.
std::vector<AbelianGroup> groups_of_order(u64 n);

enum class Status { pass, fail, not_applicable };
std::string to_string(Status s);

struct CheckLine {
  std::string anchor;
  Status status = Status::pass;
  std::string detail;
};

struct CodeRecord {
  std::size_t index = 0;
  std::string label;
  u64 subgroup_order = 0;  // 0 for character labels
  u64 dim = 0;
  std::optional<u64> dim_formula;
  std::optional<u64> min_weight;
  std::string weight_method;
  std::optional<u64> weight_formula;
  std::optional<WeightDistribution> distribution;
  std::size_t class_id = 0;
  bool certified_minimal = false;
};

struct ConditionRecord {
  Condition condition = Condition::A;
  Verdict verdict;
  std::string first_witness;  // "label / label", empty when none
};

struct FamilyReport {
  std::string name;  // "I" or "I_min"
  std::string field;
  std::vector<CodeRecord> codes;
  std::vector<ConditionRecord> conditions;
};

struct EntryReport {
  std::string group;
  std::string field;
  u64 order = 0;
  bool p_group = false;
  bool sylows_homocyclic = false;
  bool elementary_abelian = false;
  u64 exponent = 1;
  u64 tau = 1;
  u64 iso_types = 1;  // distinct iso types among the cocyclic subgroups and G
  std::vector<FamilyReport> families;
  std::vector<CheckLine> checks;
};

struct Report {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<EntryReport> entries;
  std::vector<CheckLine> examples;

  u64 failures() const;
};

struct AnalyzeOptions {
  Caps caps;
  bool distributions = true;  // enumerate distributions within the cap
  std::vector<Condition> conditions{Condition::A, Condition::B, Condition::C};
};

// Parameters, classes and condition verdicts of I_{F_qG}.
FamilyReport analyze_family(const std::string& name, FamilyEvaluator& eval, const AnalyzeOptions& options);
// Group invariants only; no codes.
EntryReport summarize(const AbelianGroup& group, const Field& field);
EntryReport analyze(const AbelianGroup& group, const Field& field, const AnalyzeOptions& options = {});

struct VerifyOptions {
  Caps caps;
  unsigned jobs = 1;
};

Report verify_theorems(const CatalogSpec& spec, const VerifyOptions& options = {});
// Checks for one (group, field) pair; the splitting-field checks run for each
// field in `splitting_fields` that splits G.
EntryReport verify_entry(const AbelianGroup& group, const Field& field, const std::vector<u64>& splitting_fields,
                         const Caps& caps);

Report reproduce_examples(const Caps& caps = {});

enum class Format { json, csv, markdown };
Format parse_format(const std::string& text);
std::string render(const Report& report, Format format);
// Writes to `path`, or to stdout when path is empty or "-".
void emit(const Report& report, Format format, const std::string& path);

}  // namespace abcodes
