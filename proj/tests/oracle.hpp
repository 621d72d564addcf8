#pragma once

// Independent reference implementations for tests. Nothing here calls the
// library's arithmetic: tables are plain integers or Boost rationals and every
// check is a direct loop over basis elements.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dialg/algebra.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

/// Structure constants as rationals, table[op][(i * n + j) * n + k], op 0 = ⊣, 1 = ⊢.
struct RawTables {
  std::size_t n = 0;
  std::vector<Q> table[2];

  Q at(int op, std::size_t i, std::size_t j, std::size_t k) const { return table[op][(i * n + j) * n + k]; }
};

/// Reads a library algebra over Q or F_p. F_p residues become integers; the
/// caller reduces mod p.
inline RawTables raw(const dialg::DiassociativeAlgebra& d) {
  RawTables t;
  t.n = d.dim();
  for (int op = 0; op < 2; ++op) {
    const auto& tensor = d.tensor(op == 0 ? dialg::Op::Left : dialg::Op::Right);
    for (std::size_t i = 0; i < t.n; ++i)
      for (std::size_t j = 0; j < t.n; ++j)
        for (std::size_t k = 0; k < t.n; ++k) {
          const auto& s = tensor(i, j, k);
          t.table[op].push_back(s.rational() ? *s.rational() : Q(s.residue()));
        }
  }
  return t;
}

inline bool equal_mod(const Q& a, const Q& b, std::uint32_t p) {
  if (p == 0) return a == b;
  const Q diff = a - b;
  if (boost::multiprecision::denominator(diff) != 1) return false;
  return boost::multiprecision::numerator(diff) % p == 0;
}

/// The five identities written out by hand, (x a y) b z = x c (y d z), in the
/// order ⊢⊢⊢⊢, ⊣⊣⊣⊣, ⊣⊢⊢⊢, ⊣⊣⊣⊢, ⊢⊣⊢⊣ (0 = ⊣, 1 = ⊢).
inline constexpr int kShapes[5][4] = {{1, 1, 1, 1}, {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0, 1, 0}};

/// Number of (axiom, triple) pairs that fail. p = 0 means Q.
inline std::size_t failing_axiom_triples(const RawTables& t, std::uint32_t p) {
  std::size_t failures = 0;
  const std::size_t n = t.n;
  for (const auto& s : kShapes) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          bool ok = true;
          for (std::size_t l = 0; l < n && ok; ++l) {
            Q lhs = 0;
            Q rhs = 0;
            for (std::size_t k = 0; k < n; ++k) {
              lhs += t.at(s[0], x, y, k) * t.at(s[1], k, z, l);
              rhs += t.at(s[3], y, z, k) * t.at(s[2], x, k, l);
            }
            ok = equal_mod(lhs, rhs, p);
          }
          failures += ok ? 0 : 1;
        }
  }
  return failures;
}

/// Which of the five identities fail somewhere (1-based ids).
inline std::set<int> failing_axioms(const RawTables& t, std::uint32_t p) {
  std::set<int> out;
  for (int a = 0; a < 5; ++a) {
    const std::size_t n = t.n;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (std::size_t l = 0; l < n; ++l) {
            Q lhs = 0;
            Q rhs = 0;
            for (std::size_t k = 0; k < n; ++k) {
              lhs += t.at(kShapes[a][0], x, y, k) * t.at(kShapes[a][1], k, z, l);
              rhs += t.at(kShapes[a][3], y, z, k) * t.at(kShapes[a][2], x, k, l);
            }
            if (!equal_mod(lhs, rhs, p)) out.insert(a + 1);
          }
  }
  return out;
}

/// Brute-force census over F_p: every pair of tables, every axiom, no pruning.
inline std::size_t census(std::uint32_t p, std::size_t n) {
  const std::size_t entries = 2 * n * n * n;
  std::vector<int> v(entries, 0);
  std::size_t count = 0;
  auto at = [&](int op, std::size_t i, std::size_t j, std::size_t k) {
    return v[static_cast<std::size_t>(op) * n * n * n + (i * n + j) * n + k];
  };
  while (true) {
    bool valid = true;
    for (const auto& s : kShapes) {
      for (std::size_t x = 0; x < n && valid; ++x)
        for (std::size_t y = 0; y < n && valid; ++y)
          for (std::size_t z = 0; z < n && valid; ++z)
            for (std::size_t l = 0; l < n && valid; ++l) {
              int lhs = 0;
              int rhs = 0;
              for (std::size_t k = 0; k < n; ++k) {
                lhs += at(s[0], x, y, k) * at(s[1], k, z, l);
                rhs += at(s[3], y, z, k) * at(s[2], x, k, l);
              }
              valid = (lhs - rhs) % static_cast<int>(p) == 0;
            }
      if (!valid) break;
    }
    count += valid ? 1 : 0;
    std::size_t pos = 0;
    while (pos < entries && ++v[pos] == static_cast<int>(p)) v[pos++] = 0;
    if (pos == entries) return count;
  }
}

/// Over F_2, with elements as bit masks: the series computed on whole element
/// sets (every element, not a basis), spans taken by XOR closure. Returns the
/// class m with D^m = {0}, or nullopt when the series stabilizes first.
inline std::optional<std::size_t> f2_series_class(const dialg::DiassociativeAlgebra& d) {
  const std::size_t n = d.dim();
  const RawTables t = raw(d);
  auto mul = [&](int op, unsigned x, unsigned y) {
    unsigned out = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((x >> i & 1u) && (y >> j & 1u))
          for (std::size_t k = 0; k < n; ++k)
            if (boost::multiprecision::numerator(t.at(op, i, j, k)) % 2 != 0) out ^= 1u << k;
    return out;
  };
  auto close = [](std::set<unsigned> s) {
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<unsigned> items(s.begin(), s.end());
      for (unsigned a : items)
        for (unsigned b : items) grew |= s.insert(a ^ b).second;
    }
    return s;
  };
  std::vector<std::set<unsigned>> terms;
  std::set<unsigned> all;
  for (unsigned x = 0; x < (1u << n); ++x) all.insert(x);
  terms.push_back(all);
  while (true) {
    if (terms.back().size() == 1) return terms.size();
    const std::size_t m = terms.size();
    std::set<unsigned> products;
    for (std::size_t i = 1; i <= m; ++i)
      for (unsigned a : terms[i - 1])
        for (unsigned b : terms[m - i])
          for (int op = 0; op < 2; ++op) products.insert(mul(op, a, b));
    std::set<unsigned> next = close(products);
    if (next == terms.back()) return std::nullopt;
    terms.push_back(std::move(next));
  }
}

}  // namespace oracle
