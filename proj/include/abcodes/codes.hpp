#pragma once

// Ideals of F_qG as linear codes: bases, parameters, G-equivalence, the
// families I_{F_qG} and I_min, and Conditions A/B/C.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abcodes/enumeration.hpp"
#include "abcodes/galgebra.hpp"

namespace abcodes {

struct CharacterLabel {
  std::vector<u64> residues;
  std::string to_string() const;
  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
};

using CodeLabel = std::variant<std::monostate, Subgroup, CharacterLabel>;

struct Caps {
  u64 enum_cap = default_enum_cap();
  u64 oracle_cap = 512;
};

class Code {
 public:
  // Row-reduces {g e : g in G}. Throws invalid_argument unless e is idempotent.
  Code(AlgebraElement generator, CodeLabel label = {});

  const AbelianGroup& group() const { return generator_.group(); }
  const Field& field() const { return generator_.field(); }
  const AlgebraElement& generator() const { return generator_; }
  const CodeLabel& label() const { return label_; }
  const Subgroup* subgroup_label() const { return std::get_if<Subgroup>(&label_); }
  std::string label_string() const;

  std::size_t dimension() const { return pivots_.size(); }
  std::size_t length() const { return group().order(); }
  // Reduced row-echelon basis with respect to the canonical element order.
  std::vector<AlgebraElement> basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  GeneratorMatrix matrix() const;

  bool contains(const AlgebraElement& a) const;
  bool contains(const std::vector<Field::Elem>& word) const;
  // Every codeword in enumeration order. Throws CapExceeded beyond `cap`.
  std::vector<AlgebraElement> codewords(u64 cap = default_enum_cap()) const;

 private:
  AlgebraElement generator_;
  CodeLabel label_;
  std::vector<Field::Elem> rows_;  // dimension x length
  std::vector<std::size_t> pivots_;
};

Code code_of(const AlgebraElement& e, CodeLabel label = {});
// I_H = F_qG e_H, labelled by H.
Code subgroup_code(const Subgroup& h, const Field& field);

// (|G|/|H|) prod_{p not in S} (1 - 1/p), S the primes where H_p = G_p.
u64 dim_formula(const Subgroup& h);
// 2^(k-|S|) |H| with k the number of primes dividing |G|.
u64 weight_formula(const Subgroup& h);

// For a subgroup-labelled code: the image under phi_H in F_q(G/H), whose
// weights are those of the code divided by |H|. Other codes map to themselves
// with scale 1.
struct ReducedCode {
  GeneratorMatrix matrix;
  u64 scale;
};
ReducedCode reduce(const Code& code);

struct MinWeight {
  u64 weight = 0;
  std::string method;  // "enumeration" or "information-set"
};
// Exact minimum weight. Throws CapExceeded when neither method fits the cap.
MinWeight min_weight(const Code& code, u64 cap = default_enum_cap());

struct WeightDistribution {
  std::map<u64, u64> counts;

  u64 total() const;
  u64 min_nonzero() const;
  std::string to_string() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};
// Via the phi_H reduction. Throws CapExceeded when q^dim > cap.
WeightDistribution weight_distribution(const Code& code, u64 cap = default_enum_cap());
// On the full-length code, without reduction.
WeightDistribution weight_distribution_direct(const Code& code, u64 cap = default_enum_cap());

// Exhaustive search for theta in Aut(G) with theta(I_a) = I_b.
// Throws OracleUnavailable when |G| > oracle_cap.
bool oracle_code_equivalent(const Code& a, const Code& b, u64 oracle_cap = 512);
// Subgroup-labelled codes: g_isomorphic on the labels, cross-checked against
// the explicit search when |G| <= oracle_cap. Other codes: explicit search only.
bool code_equivalent(const Code& a, const Code& b, const OracleOptions& options = {});

// I_G followed by I_H for every cocyclic H in canonical order.
std::vector<Code> family(const AbelianGroup& group, const Field& field);
// Codes F e_chi for every nontrivial character; requires exponent(G) | q-1.
std::vector<Code> family_min_splitting(const AbelianGroup& group, const Field& field);
// q generates U(Z_{p^n}) for the p-group G of exponent p^n.
bool is_minimal_family_certified(const AbelianGroup& group, const Field& field);

enum class Condition { A, B, C };
std::string to_string(Condition c);
Condition parse_condition(const std::string& text);

enum class Outcome { holds, fails, indeterminate };
std::string to_string(Outcome o);

struct CodePair {
  std::size_t a;
  std::size_t b;
  friend bool operator==(const CodePair&, const CodePair&) = default;
};

struct Verdict {
  Condition condition = Condition::A;
  Outcome outcome = Outcome::holds;
  std::vector<CodePair> witnesses;  // equal parameter, not equivalent; lexicographic
  std::vector<CodePair> skipped;    // parameter unknown within caps, not equivalent
  u64 pairs = 0;
  u64 equivalent_pairs = 0;
  u64 forward_unchecked = 0;  // equivalent pairs whose parameter was out of reach

  bool holds() const { return outcome == Outcome::holds; }
};

// Lazily computes and caches parameters and equivalences over one family.
class FamilyEvaluator {
 public:
  FamilyEvaluator(std::vector<Code> codes, Caps caps = {});

  const std::vector<Code>& codes() const { return codes_; }
  const Caps& caps() const { return caps_; }

  // nullopt when beyond the caps.
  std::optional<MinWeight> min_weight(std::size_t i);
  std::optional<WeightDistribution> distribution(std::size_t i);
  bool equivalent(std::size_t i, std::size_t j);
  // Equivalence class id per code (smallest member index). Decides every
  // pair it needs to.
  std::vector<std::size_t> classes();

  Verdict check(Condition condition);

 private:
  enum class Cmp { equal, unequal, unknown };
  Cmp compare(Condition condition, std::size_t i, std::size_t j);
  std::size_t find(std::size_t i);

  std::vector<Code> codes_;
  Caps caps_;
  std::vector<std::optional<std::optional<MinWeight>>> weights_;
  std::vector<std::optional<std::optional<WeightDistribution>>> dists_;
  std::vector<std::size_t> parent_;
  std::vector<CodePair> distinct_;
};

Verdict check_condition(const std::vector<Code>& family, Condition condition, const Caps& caps = {});

}  // namespace abcodes
