#pragma once

// Exhaustive codeword enumeration for linear codes over GF(q).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcodes/gf.hpp"

namespace abcodes {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2^22, or the value of ABCODES_CAP when set.
u64 default_enum_cap();

// k linearly independent rows of length n, row-major.
struct GeneratorMatrix {
  Field field;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<Field::Elem> rows;

  const Field::Elem* row(std::size_t i) const { return rows.data() + i * n; }
};

// q^k, saturating at UINT64_MAX.
u64 codeword_count(u64 q, std::size_t k);

// Full weight histogram. Throws CapExceeded when q^k > cap.
std::map<u64, u64> enumerate_distribution(const GeneratorMatrix& m, u64 cap);
// Minimum nonzero weight by full enumeration. Throws CapExceeded when q^k > cap.
u64 enumerate_min_weight(const GeneratorMatrix& m, u64 cap);
// Minimum nonzero weight by enumerating low-weight combinations over several
// disjoint information sets until the lower bound they give meets the best
// weight found. Throws CapExceeded once more than `cap` words are examined.
u64 information_set_min_weight(const GeneratorMatrix& m, u64 cap);

}  // namespace abcodes
