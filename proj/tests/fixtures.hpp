#pragma once

// Test-only constructions and brute-force oracles. Nothing here calls into
// the code paths it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace hartman::testing {

/// Smallest e with 2^e >= m, for m >= 1.
inline int ceil_log2(std::uint64_t m) {
  int e = 0;
  while ((std::uint64_t{1} << e) < m) ++e;
  return e;
}

// The "long blocks of evens alternating with long blocks of odds" set, with
// the factorial block ends (2n-1)!, (2n)!, (2n+1)! replaced by powers of two
// so that several blocks fit in a desk-scale scan:
//   B1 = U_{n>=1} (2^{2n-1}, 2^{2n}]  n 2Z
//   B2 = U_{n>=1} (2^{2n},   2^{2n+1}] n (2Z+1)
//   B  = B1 u B2 u -B1 u -B2
// Both 2Z and B have Banach density 1/2, while 2Z n B = B1 u -B1 has lower
// density 0 and upper density 1/2.
inline bool in_even_set(std::int64_t k) { return k % 2 == 0; }

inline bool in_block_set(std::int64_t k) {
  const std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  if (m <= 2) return false;
  const int e = ceil_log2(m);  // m in (2^{e-1}, 2^e]
  return (e % 2 == 0) ? (m % 2 == 0) : (m % 2 == 1);
}

inline bool in_even_block_set(std::int64_t k) { return in_even_set(k) && in_block_set(k); }

/// Distinct length-n substrings of a 0-1 sequence, by string enumeration.
inline std::size_t distinct_subwords_bruteforce(const std::vector<double>& bits, std::size_t n) {
  std::string s;
  s.reserve(bits.size());
  for (double b : bits) s.push_back(b != 0.0 ? '1' : '0');
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(s.substr(i, n));
  return seen.size();
}

/// Random self-map of {0, ..., n-1}.
inline std::vector<std::size_t> random_map(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> map(n);
  for (auto& y : map) y = pick(rng);
  return map;
}

/// Every self-map of {0, ..., n-1}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> all_maps(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> map(n, 0);
  while (true) {
    out.push_back(map);
    std::size_t i = 0;
    while (i < n && ++map[i] == n) map[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace hartman::testing
