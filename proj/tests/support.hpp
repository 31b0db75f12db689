#pragma once

// Test-only oracles. Each one recomputes a quantity from first principles,
// without going through the library code path it is used to check.

#include <cstdint>
#include <vector>

#include "htlogic/algebra.hpp"
#include "htlogic/frame.hpp"

namespace oracle {

using htlogic::Element;

// The basic T-structure built literally: T = {t1, t2} with t1 <= t2, carrier
// the increasing subsets {}, {t2}, {t1, t2} as bitmasks (bit 0 = t1,
// bit 1 = t2), listed in the same order as make_bt().
struct SetBT {
  static constexpr std::uint32_t kT = 0b11;
  std::vector<std::uint32_t> sets{0b00, 0b10, 0b11};

  Element index(std::uint32_t x) const {
    for (Element e = 0; e < sets.size(); ++e)
      if (sets[e] == x) return e;
    return 99;
  }
  // S_t X = T if t in X else {}
  std::uint32_t s(int i, std::uint32_t x) const { return (x >> (i - 1)) & 1U ? kT : 0; }
  std::uint32_t c(std::uint32_t x) const { return kT & ~s(1, x); }
  // a => b = b u /\_k (C S_k a u S_k b), evaluated as a set term.
  std::uint32_t imp_term(std::uint32_t a, std::uint32_t b) const {
    return b | ((c(s(1, a)) | s(1, b)) & (c(s(2, a)) | s(2, b)));
  }
  // Largest increasing Z with a n Z <= b.
  std::uint32_t imp_heyting(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t best = 0;
    for (std::uint32_t z : sets)
      if ((a & z & ~b) == 0 && (z | best) == z) best = z;
    return best;
  }
};

// Largest R-closed Z with x n Z <= y, by scanning every subset.
inline htlogic::StateSet heyting_on_frame(const htlogic::HTFrame& k, htlogic::StateSet x,
                                          htlogic::StateSet y) {
  htlogic::StateSet best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k.size()); ++bits) {
    htlogic::StateSet z(bits);
    bool closed = true;
    for (std::size_t w = 0; w < k.size(); ++w)
      for (std::size_t v = 0; v < k.size(); ++v)
        if (z.contains(w) && k.related(w, v) && !z.contains(v)) closed = false;
    if (!closed || !(x & z).subset_of(y)) continue;
    if (z.count() > best.count()) best = z;
  }
  return best;
}

// (K1)-(K6) written directly from the definition, on raw tables.
inline bool is_ht_frame(std::size_t n, const std::vector<std::vector<bool>>& r,
                        const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2) {
  auto s = [&](int i, std::size_t w) { return i == 1 ? s1[w] : s2[w]; };
  for (std::size_t w = 0; w < n; ++w) {
    if (!r[w][w]) return false;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        if (r[w][v] && r[v][u] && !r[w][u]) return false;
    for (int i : {1, 2})
      for (int j : {1, 2})
        if (s(j, s(i, w)) != s(j, w)) return false;
    if (!r[s1[w]][w] || !r[w][s2[w]]) return false;
    for (std::size_t v = 0; v < n; ++v)
      if (r[w][v])
        for (int i : {1, 2})
          if (!r[s(i, w)][s(i, v)] || !r[s(i, v)][s(i, w)]) return false;
    bool hit = false;
    for (std::size_t v = 0; v < n; ++v)
      if (s1[v] == w || s2[v] == w) hit = true;
    if (!hit) return false;
  }
  return true;
}

// Number of HT-frames on exactly n states, by brute force.
inline std::size_t count_ht_frames(std::size_t n) {
  std::size_t count = 0;
  std::size_t maps = 1;
  for (std::size_t i = 0; i < n; ++i) maps *= n;
  for (std::uint64_t rb = 0; rb < (std::uint64_t{1} << (n * n)); ++rb) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t v = 0; v < n; ++v) r[w][v] = (rb >> (w * n + v)) & 1U;
    for (std::size_t a = 0; a < maps; ++a) {
      for (std::size_t b = 0; b < maps; ++b) {
        std::vector<std::size_t> s1(n), s2(n);
        std::size_t x = a, y = b;
        for (std::size_t w = 0; w < n; ++w) {
          s1[w] = x % n;
          x /= n;
          s2[w] = y % n;
          y /= n;
        }
        if (is_ht_frame(n, r, s1, s2)) ++count;
      }
    }
  }
  return count;
}

// Prime filters by the textbook definition, counted over all subsets.
inline std::size_t count_prime_filters(const htlogic::FiniteAlgebra& a) {
  std::size_t count = 0;
  const std::size_t n = a.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto in = [bits](Element e) { return (bits >> e) & 1U; };
    bool ok = bits != 0 && !in(a.bot());
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        if (in(x) && a.le(x, y) && !in(y)) ok = false;
        if (in(x) && in(y) && !in(a.meet(x, y))) ok = false;
        if (in(a.join(x, y)) && !in(x) && !in(y)) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Small T-structures / HT-algebras used as a test corpus.
inline std::vector<htlogic::FiniteAlgebra> algebra_corpus() {
  using namespace htlogic;
  const FiniteAlgebra bt = make_bt(), b = make_b();
  return {bt, b, product(b, b), product(bt, b), product(b, bt), product(bt, bt)};
}

}  // namespace oracle
