#include "abcodes/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>

namespace abcodes {

u64 default_enum_cap() {
  if (const char* env = std::getenv("ABCODES_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return u64{1} << 22;
}

u64 codeword_count(u64 q, std::size_t k) {
  u64 total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<u64>::max() / q) return std::numeric_limits<u64>::max();
    total *= q;
  }
  return total;
}

namespace {

void require_within_cap(const GeneratorMatrix& m, u64 cap) {
  const u64 total = codeword_count(m.field.order(), m.k);
  if (total > cap) {
    throw CapExceeded("enumeration of " + std::to_string(m.field.order()) + "^" + std::to_string(m.k) +
                      " codewords exceeds cap " + std::to_string(cap));
  }
}

// Visits the weight of every nonzero codeword whose last nonzero coefficient
// is 1: one representative per projective point.
template <class Visit>
void for_each_projective_weight(const GeneratorMatrix& m, Visit&& visit) {
  const Field& F = m.field;
  const u64 q = F.order();
  if (q == 2) {
    const std::size_t words = (m.n + 63) / 64;
    std::vector<std::uint64_t> bits(m.k * words, 0);
    for (std::size_t i = 0; i < m.k; ++i) {
      for (std::size_t c = 0; c < m.n; ++c) {
        if (m.row(i)[c] != 0) bits[i * words + c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    std::vector<std::uint64_t> cur(words);
    for (std::size_t lead = 0; lead < m.k; ++lead) {
      std::copy_n(bits.begin() + lead * words, words, cur.begin());
      auto popcount = [&] {
        u64 w = 0;
        for (std::uint64_t x : cur) w += std::popcount(x);
        return w;
      };
      visit(popcount());
      const u64 steps = u64{1} << lead;
      for (u64 s = 1; s < steps; ++s) {
        const std::size_t j = std::countr_zero(s);
        const std::uint64_t* r = bits.data() + j * words;
        for (std::size_t w = 0; w < words; ++w) cur[w] ^= r[w];
        visit(popcount());
      }
    }
    return;
  }

  const std::uint8_t* add_tab = F.add_table();
  const std::uint8_t* mul_tab = F.mul_table();
  auto add = [&](Field::Elem a, Field::Elem b) -> Field::Elem {
    return add_tab ? add_tab[a * q + b] : F.add(a, b);
  };
  auto mul = [&](Field::Elem a, Field::Elem b) -> Field::Elem {
    return mul_tab ? mul_tab[a * q + b] : F.mul(a, b);
  };
  std::vector<std::vector<std::pair<std::size_t, Field::Elem>>> sparse(m.k);
  for (std::size_t i = 0; i < m.k; ++i) {
    for (std::size_t c = 0; c < m.n; ++c) {
      if (m.row(i)[c] != 0) sparse[i].emplace_back(c, m.row(i)[c]);
    }
  }
  std::vector<Field::Elem> cur(m.n);
  for (std::size_t lead = 0; lead < m.k; ++lead) {
    std::copy_n(m.row(lead), m.n, cur.begin());
    u64 weight = sparse[lead].size();
    visit(weight);
    // Modular q-ary Gray code on digits 0..lead-1: each step moves one digit
    // from v to v+1 mod q, i.e. adds (v+1 - v) times one row.
    std::vector<u64> counter(lead, 0);
    std::vector<Field::Elem> gray(lead, 0);
    const u64 steps = codeword_count(q, lead);
    for (u64 s = 1; s < steps; ++s) {
      std::size_t j = 0;
      while (counter[j] == q - 1) counter[j++] = 0;
      ++counter[j];
      const auto old = gray[j];
      const auto next = static_cast<Field::Elem>((old + 1) % q);
      gray[j] = next;
      const Field::Elem delta = F.sub(next, old);
      for (const auto& [c, v] : sparse[j]) {
        const Field::Elem before = cur[c];
        const Field::Elem after = add(before, mul(delta, v));
        weight += static_cast<u64>(after != 0) - static_cast<u64>(before != 0);
        cur[c] = after;
      }
      visit(weight);
    }
  }
}

}  // namespace

std::map<u64, u64> enumerate_distribution(const GeneratorMatrix& m, u64 cap) {
  require_within_cap(m, cap);
  std::vector<u64> hist(m.n + 1, 0);
  for_each_projective_weight(m, [&](u64 w) { ++hist[w]; });
  const u64 units = m.field.order() - 1;
  std::map<u64, u64> out{{0, 1 + hist[0] * units}};
  for (std::size_t w = 1; w <= m.n; ++w) {
    if (hist[w] != 0) out[w] = hist[w] * units;
  }
  return out;
}

u64 enumerate_min_weight(const GeneratorMatrix& m, u64 cap) {
  if (m.k == 0) throw std::invalid_argument("empty code has no nonzero codeword");
  require_within_cap(m, cap);
  u64 best = 0;
  for_each_projective_weight(m, [&](u64 w) {
    if (w > 0 && (best == 0 || w < best)) best = w;
  });
  if (best == 0) throw std::invalid_argument("generator rows span the zero code");
  return best;
}

namespace {

struct Systematic {
  std::vector<Field::Elem> rows;  // k x n, reduced on its pivot columns
  std::size_t fresh = 0;          // pivots among previously unused columns
};

Systematic systematic_form(const GeneratorMatrix& m, std::vector<char>& used) {
  const Field& F = m.field;
  Systematic s{m.rows, 0};
  auto at = [&](std::size_t r, std::size_t c) -> Field::Elem& { return s.rows[r * m.n + c]; };
  std::size_t rank = 0;
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < m.n; ++c) {
    if (!used[c]) order.push_back(c);
  }
  const std::size_t unused = order.size();
  for (std::size_t c = 0; c < m.n; ++c) {
    if (used[c]) order.push_back(c);
  }
  for (std::size_t idx = 0; idx < order.size() && rank < m.k; ++idx) {
    const std::size_t c = order[idx];
    std::size_t r = rank;
    while (r < m.k && at(r, c) == 0) ++r;
    if (r == m.k) continue;
    if (r != rank) {
      for (std::size_t x = 0; x < m.n; ++x) std::swap(at(r, x), at(rank, x));
    }
    const Field::Elem inv = F.inv(at(rank, c));
    for (std::size_t x = 0; x < m.n; ++x) at(rank, x) = F.mul(inv, at(rank, x));
    for (std::size_t other = 0; other < m.k; ++other) {
      if (other == rank || at(other, c) == 0) continue;
      const Field::Elem f = at(other, c);
      for (std::size_t x = 0; x < m.n; ++x) at(other, x) = F.sub(at(other, x), F.mul(f, at(rank, x)));
    }
    if (idx < unused) {
      ++s.fresh;
      used[c] = 1;
    }
    ++rank;
  }
  return s;
}

}  // namespace

u64 information_set_min_weight(const GeneratorMatrix& m, u64 cap) {
  if (m.k == 0) throw std::invalid_argument("empty code has no nonzero codeword");
  const Field& F = m.field;
  const std::size_t k = m.k;
  const std::size_t n = m.n;

  std::vector<char> used(n, 0);
  std::vector<Systematic> forms;
  while (true) {
    Systematic s = systematic_form(m, used);
    if (s.fresh == 0) break;
    forms.push_back(std::move(s));
  }

  // A word outside every enumerated set has at least t+1 nonzero
  // coefficients w.r.t. each form, hence at least t+1-(k-fresh) nonzero
  // entries on that form's fresh pivot columns, which are pairwise disjoint.
  auto contribution = [&](const Systematic& s, std::size_t t) -> u64 {
    const std::size_t hidden = k - s.fresh;
    return t + 1 > hidden ? t + 1 - hidden : 0;
  };

  std::vector<Field::Elem> nonzero;
  for (Field::Elem a = 1; a < F.order(); ++a) nonzero.push_back(a);

  u64 best = n;
  u64 examined = 0;
  std::vector<std::vector<Field::Elem>> partial(k + 1, std::vector<Field::Elem>(n, 0));
  for (std::size_t t = 1; t <= k; ++t) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const auto& rows = forms[j].rows;
      // Depth-first over row sets i_1 < ... < i_t, first coefficient 1.
      auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == t) {
          if (++examined > cap) {
            throw CapExceeded("information-set search examined more than " + std::to_string(cap) + " codewords");
          }
          u64 w = 0;
          for (Field::Elem v : partial[depth]) w += v != 0;
          best = std::min(best, w);
          return;
        }
        for (std::size_t i = start; i + (t - depth) <= k; ++i) {
          const Field::Elem* r = rows.data() + i * n;
          const std::size_t coeff_count = depth == 0 ? 1 : nonzero.size();
          for (std::size_t ci = 0; ci < coeff_count; ++ci) {
            const Field::Elem a = nonzero[ci];
            for (std::size_t x = 0; x < n; ++x) partial[depth + 1][x] = F.add(partial[depth][x], F.mul(a, r[x]));
            self(self, depth + 1, i + 1);
          }
        }
      };
      recurse(recurse, 0, 0);
      u64 bound = 0;
      for (std::size_t jj = 0; jj < forms.size(); ++jj) bound += contribution(forms[jj], jj <= j ? t : t - 1);
      if (best <= bound) return best;
    }
  }
  return best;
}

}  // namespace abcodes
