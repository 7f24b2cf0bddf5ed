#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "abcodes/workbench.hpp"

namespace abcodes {

namespace {

using json = nlohmann::ordered_json;

std::string digest(const WeightDistribution& d) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : d.to_string()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json code_json(const EntryReport& e, const FamilyReport& f, const CodeRecord& r) {
  json j;
  j["group"] = e.group;
  j["field"] = f.field;
  j["index"] = r.index;
  j["label"] = r.label;
  j["subgroup_order"] = r.subgroup_order == 0 ? json(nullptr) : json(r.subgroup_order);
  j["dim"] = r.dim;
  j["dim_formula"] = optional_json(r.dim_formula);
  j["min_weight"] = optional_json(r.min_weight);
  j["weight_method"] = r.weight_method.empty() ? json(nullptr) : json(r.weight_method);
  j["weight_formula"] = optional_json(r.weight_formula);
  if (r.distribution) {
    json d = json::object();
    for (const auto& [w, c] : r.distribution->counts) d[std::to_string(w)] = c;
    j["weight_distribution"] = d;
    j["distribution_digest"] = digest(*r.distribution);
  } else {
    j["weight_distribution"] = nullptr;
    j["distribution_digest"] = nullptr;
  }
  j["class"] = r.class_id;
  j["certified_minimal"] = r.certified_minimal;
  return j;
}

json check_json(const CheckLine& c) {
  return json{{"anchor", c.anchor}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

json report_json(const Report& report) {
  json root;
  root["schema"] = 1;
  root["kind"] = report.kind;
  json meta = json::object();
  for (const auto& [k, v] : report.meta) meta[k] = v;
  root["meta"] = meta;
  json entries = json::array();
  for (const auto& e : report.entries) {
    json je;
    je["group"] = e.group;
    je["field"] = e.field;
    je["order"] = e.order;
    je["p_group"] = e.p_group;
    je["sylows_homocyclic"] = e.sylows_homocyclic;
    je["elementary_abelian"] = e.elementary_abelian;
    je["exponent"] = e.exponent;
    je["tau"] = e.tau;
    je["iso_types"] = e.iso_types;
    json fams = json::array();
    for (const auto& f : e.families) {
      json jf;
      jf["family"] = f.name;
      jf["field"] = f.field;
      json codes = json::array();
      for (const auto& r : f.codes) codes.push_back(code_json(e, f, r));
      jf["codes"] = codes;
      json conds = json::array();
      for (const auto& c : f.conditions) {
        conds.push_back(json{{"condition", to_string(c.condition)},
                             {"outcome", to_string(c.verdict.outcome)},
                             {"first_witness", c.first_witness.empty() ? json(nullptr) : json(c.first_witness)},
                             {"witnesses", c.verdict.witnesses.size()},
                             {"skipped", c.verdict.skipped.size()},
                             {"pairs", c.verdict.pairs},
                             {"equivalent_pairs", c.verdict.equivalent_pairs},
                             {"forward_unchecked", c.verdict.forward_unchecked}});
      }
      jf["conditions"] = conds;
      fams.push_back(jf);
    }
    je["families"] = fams;
    json checks = json::array();
    for (const auto& c : e.checks) checks.push_back(check_json(c));
    je["checks"] = checks;
    entries.push_back(je);
  }
  root["entries"] = entries;
  json examples = json::array();
  for (const auto& c : report.examples) examples.push_back(check_json(c));
  root["examples"] = examples;
  root["failures"] = report.failures();
  return root;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string opt_string(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

std::string report_csv(const Report& report) {
  std::ostringstream out;
  out << "group,field,family,index,label,subgroup_order,dim,dim_formula,min_weight,weight_method,weight_formula,"
         "distribution_digest,class,certified_minimal\n";
  for (const auto& e : report.entries) {
    for (const auto& f : e.families) {
      for (const auto& r : f.codes) {
        out << e.group << ',' << f.field << ',' << f.name << ',' << r.index << ',' << csv_field(r.label) << ','
            << (r.subgroup_order ? std::to_string(r.subgroup_order) : "") << ',' << r.dim << ','
            << opt_string(r.dim_formula) << ',' << opt_string(r.min_weight) << ',' << r.weight_method << ','
            << opt_string(r.weight_formula) << ',' << (r.distribution ? digest(*r.distribution) : "") << ','
            << r.class_id << ',' << (r.certified_minimal ? "true" : "false") << '\n';
      }
    }
  }
  return out.str();
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string report_markdown(const Report& report) {
  std::ostringstream out;
  out << "# " << report.kind << "\n\n";
  for (const auto& [k, v] : report.meta) out << "- " << k << ": " << (v.empty() ? "-" : v) << "\n";
  out << "\n";
  for (const auto& e : report.entries) {
    out << "## " << e.group << " over GF(" << e.field << ")\n\n";
    out << "order " << e.order << ", exponent " << e.exponent << ", tau " << e.tau << ", iso types " << e.iso_types
        << ", Sylows homocyclic " << (e.sylows_homocyclic ? "yes" : "no") << "\n\n";
    for (const auto& f : e.families) {
      out << "### " << f.name << " over GF(" << f.field << ")\n\n";
      out << "| # | label | dim | dim formula | weight | weight formula | distribution | digest | class |\n";
      out << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& r : f.codes) {
        out << "| " << r.index << " | " << md_cell(r.label) << " | " << r.dim << " | "
            << (r.dim_formula ? std::to_string(*r.dim_formula) : "-") << " | "
            << (r.min_weight ? std::to_string(*r.min_weight) : "-") << " | "
            << (r.weight_formula ? std::to_string(*r.weight_formula) : "-") << " | "
            << (r.distribution ? r.distribution->to_string() : "-") << " | "
            << (r.distribution ? digest(*r.distribution) : "-") << " | " << r.class_id << " |\n";
      }
      out << "\n";
      for (const auto& c : f.conditions) {
        out << "- Condition " << to_string(c.condition) << ": " << to_string(c.verdict.outcome);
        if (!c.first_witness.empty()) {
          out << ", witness " << md_cell(c.first_witness) << " (" << c.verdict.witnesses.size() << " pairs)";
        }
        if (!c.verdict.skipped.empty()) out << ", " << c.verdict.skipped.size() << " pairs beyond cap";
        out << "\n";
      }
      out << "\n";
    }
    for (const auto& c : e.checks) {
      out << "- [" << to_string(c.status) << "] " << c.anchor << (c.detail.empty() ? "" : ": " + md_cell(c.detail))
          << "\n";
    }
    out << "\n";
  }
  if (!report.examples.empty()) {
    out << "## examples\n\n| status | check | detail |\n|---|---|---|\n";
    for (const auto& c : report.examples) {
      out << "| " << to_string(c.status) << " | " << md_cell(c.anchor) << " | " << md_cell(c.detail) << " |\n";
    }
    out << "\n";
  }
  out << "failures: " << report.failures() << "\n";
  return out.str();
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "markdown" || text == "md") return Format::markdown;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or markdown)");
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::json:
      return report_json(report).dump(2) + "\n";
    case Format::csv:
      return report_csv(report);
    case Format::markdown:
      return report_markdown(report);
  }
  return "";
}

void emit(const Report& report, Format format, const std::string& path) {
  const std::string text = render(report, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace abcodes
