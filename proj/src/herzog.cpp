#include "canondeg/herzog.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "canondeg/error.hpp"
#include "canondeg/numerical_semigroup.hpp"

namespace canondeg {

namespace {

struct Relation {
  int multiple = 0;  // least n >= 1 with n*p in <q, r>
  int q_exp = 0;
  int r_exp = 0;
};

// n*p = u*q + v*r with u, v > 0 and (u, v) unique at the least n.
Relation least_relation(int p, int q, int r) {
  const long long bound = static_cast<long long>(q) * r;
  for (long long n = 1; n <= bound; ++n) {
    const long long target = n * p;
    std::vector<std::pair<int, int>> reps;
    for (long long u = 0; u * q <= target; ++u) {
      const long long rest = target - u * q;
      if (rest % r == 0) reps.emplace_back(static_cast<int>(u), static_cast<int>(rest / r));
    }
    if (reps.empty()) continue;
    if (reps.size() != 1 || reps[0].first == 0 || reps[0].second == 0)
      throw SemigroupError(ErrorKind::GorensteinCase,
                           std::to_string(n) + "*" + std::to_string(p) + " has no unique all-positive representation");
    return {static_cast<int>(n), reps[0].first, reps[0].second};
  }
  throw SemigroupError(ErrorKind::InternalMismatch, "no relation found for " + std::to_string(p));
}

using Rows = std::array<std::array<int, 3>, 2>;

// Exponents per variable (X, Y, Z) for each row; relabeling the generators
// permutes columns and, for odd permutations, swaps the rows.
Rows by_variable(const HerzogMatrix& m) { return {{{m.a1, m.b1, m.c1}, {m.a2, m.b2, m.c2}}}; }

bool has_row_shape(const HerzogMatrix& m, int lead, auto&& other_ok) {
  const Rows rows = by_variable(m);
  for (int r = 0; r < 2; ++r) {
    for (int v = 0; v < 3; ++v) {
      const auto& row = rows[r];
      if (row[v] != lead || row[(v + 1) % 3] != 1 || row[(v + 2) % 3] != 1) continue;
      if (other_ok(rows[1 - r][v])) return true;
    }
  }
  return false;
}

}  // namespace

HerzogMatrix herzog_matrix(int a, int b, int c) {
  const std::array<int, 3> raw{a, b, c};
  const NumericalSemigroup h = NumericalSemigroup::from_generators(raw);
  std::vector<int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  if (h.generators() != sorted)
    throw SemigroupError(ErrorKind::NotThreeGenerated, h.to_string() + " is not minimally generated by three elements");
  if (h.profile().is_symmetric)
    throw SemigroupError(ErrorKind::GorensteinCase, h.to_string() + " is symmetric (Gorenstein): no Herzog matrix");

  const Relation ra = least_relation(a, b, c);  // x^(a1+a2) = y^b2 z^c1
  const Relation rb = least_relation(b, a, c);  // y^(b1+b2) = x^a1 z^c2
  const Relation rc = least_relation(c, a, b);  // z^(c1+c2) = x^a2 y^b1

  HerzogMatrix m;
  m.order = raw;
  m.b2 = ra.q_exp;
  m.c1 = ra.r_exp;
  m.a1 = rb.q_exp;
  m.c2 = rb.r_exp;
  m.a2 = rc.q_exp;
  m.b1 = rc.r_exp;
  if (m.a1 + m.a2 != ra.multiple || m.b1 + m.b2 != rb.multiple || m.c1 + m.c2 != rc.multiple)
    throw SemigroupError(ErrorKind::InternalMismatch, h.to_string() + ": relation exponents are not consistent");
  return m;
}

int cdeg_closed_form(const HerzogMatrix& m) {
  const long long sign = static_cast<long long>(m.order[1]) * m.b2 - static_cast<long long>(m.order[0]) * m.a1;
  if (sign > 0) return m.a1 * m.b1 * m.c1;
  if (sign < 0) return m.a2 * m.b2 * m.c2;
  throw SemigroupError(ErrorKind::DegenerateSign, "b*b2 == a*a1");
}

int bideg_closed_form(const HerzogMatrix& m) {
  return std::min(m.a1, m.a2) * std::min(m.b1, m.b2) * std::min(m.c1, m.c2);
}

AglPattern agl_from_matrix(const HerzogMatrix& m) {
  AglPattern p;
  p.is_agl = has_row_shape(m, 1, [](int) { return true; });
  p.is_2agl = has_row_shape(m, 2, [](int other) { return other >= 2; });
  return p;
}

ThreeAglProbe three_agl_patterns(const HerzogMatrix& m) {
  ThreeAglProbe p;
  p.cube_top = has_row_shape(m, 3, [](int other) { return other >= 3; });
  p.square_top_unit = has_row_shape(m, 2, [](int other) { return other == 1; });
  return p;
}

}  // namespace canondeg
