#pragma once

// Brute-force reference computations for the tests. Everything here works on
// plain sorted integer sets over a generous finite range and shares no code
// with the bit-window implementation it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

/// Membership of a numerical semigroup generated by `gens`, as a set of
/// elements below `limit` (elements >= limit are taken on trust as members).
struct Semigroup {
  int limit = 0;
  std::set<int> elements;
  int frobenius = -1;

  bool has(int z) const { return z >= 0 && (z >= limit || elements.count(z) > 0); }

  std::vector<int> gaps() const {
    std::vector<int> g;
    for (int z = 0; z <= frobenius; ++z)
      if (!has(z)) g.push_back(z);
    return g;
  }
};

inline Semigroup semigroup(const std::vector<int>& gens, int limit = 0) {
  int lo = *std::min_element(gens.begin(), gens.end());
  int hi = *std::max_element(gens.begin(), gens.end());
  if (limit == 0) limit = 2 * lo * hi + 2 * hi + 8;
  Semigroup s;
  s.limit = limit;
  s.elements.insert(0);
  // additive closure by repeated sums
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        if (x + g < limit && s.elements.insert(x + g).second) next.push_back(x + g);
      }
    }
    frontier = std::move(next);
  }
  for (int z = limit - 1; z >= 0; --z) {
    if (!s.elements.count(z)) {
      s.frobenius = z;
      break;
    }
  }
  return s;
}

/// Every gap set of a numerical semigroup of genus g: subsets of [1, 2g-1]
/// of size g whose complement is additively closed.
inline std::set<std::vector<int>> gap_sets_of_genus(int g) {
  std::set<std::vector<int>> out;
  if (g == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  const int n = 2 * g - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != g) continue;
    auto is_gap = [&](int z) { return z >= 1 && z <= n && ((mask >> (z - 1)) & 1u); };
    bool closed = true;
    for (int x = 1; x <= n && closed; ++x) {
      if (is_gap(x)) continue;
      for (int y = x; x + y <= n; ++y) {
        if (!is_gap(y) && is_gap(x + y)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> gaps;
    for (int z = 1; z <= n; ++z)
      if (is_gap(z)) gaps.push_back(z);
    out.insert(gaps);
  }
  return out;
}

/// A relative ideal as an explicit member set inside [lo, hi); every
/// integer >= hi is a member, nothing below lo is.
struct Ideal {
  int lo = 0;
  int hi = 0;
  std::set<int> members;

  bool has(int z) const { return z >= hi || (z >= lo && members.count(z) > 0); }
  int min() const { return members.empty() ? hi : *members.begin(); }
};

inline Ideal from_predicate(int lo, int hi, const std::function<bool(int)>& pred) {
  Ideal e{lo, hi, {}};
  for (int z = lo; z < hi; ++z)
    if (pred(z)) e.members.insert(z);
  return e;
}

inline Ideal shift_of(const Semigroup& h, int v, int lo, int hi) {
  return from_predicate(lo, hi, [&](int z) { return h.has(z - v); });
}

inline Ideal canonical(const Semigroup& h, int lo, int hi) {
  return from_predicate(lo, hi, [&](int z) { return z >= 0 && !h.has(h.frobenius - z); });
}

inline Ideal generated(const Semigroup& h, const std::vector<int>& gens, int lo, int hi) {
  return from_predicate(lo, hi, [&](int z) {
    return std::any_of(gens.begin(), gens.end(), [&](int g) { return h.has(z - g); });
  });
}

/// Pairwise sums, by enumeration.
inline Ideal product(const Ideal& e, const Ideal& f) {
  const int lo = e.lo + f.lo;
  const int hi = std::min(e.hi + f.min(), f.hi + e.min());
  return from_predicate(lo, hi, [&](int z) {
    for (int x = e.lo; x <= z - f.lo; ++x)
      if (e.has(x) && f.has(z - x)) return true;
    return false;
  });
}

/// {z : z + F ⊆ E}, testing every member of F below its tail plus a margin.
inline Ideal colon(const Ideal& e, const Ideal& f, int lo, int hi) {
  return from_predicate(lo, hi, [&](int z) {
    for (int y = f.lo; y < f.hi + (e.hi - e.lo) + 2; ++y)
      if (f.has(y) && !e.has(z + y)) return false;
    return true;
  });
}

/// |E \ F| over [lo, hi) where both are cofinite inside the range.
inline int length(const Ideal& e, const Ideal& f, int lo, int hi) {
  int n = 0;
  for (int z = lo; z < hi; ++z)
    if (e.has(z) && !f.has(z)) ++n;
  return n;
}

}  // namespace oracle
