#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canondeg/degrees.hpp"
#include "canondeg/numerical_semigroup.hpp"

namespace canondeg {

enum class PredicateKind { ViolationsOnly, All, NAgl, Goto, FarFlung };

struct Predicate {
  PredicateKind kind = PredicateKind::ViolationsOnly;
  /// level for NAgl
  int n = 0;
};

/// Accepts "violations-only", "all", "goto", "far-flung", "n-agl:N" and
/// "n-agl(N)". Throws PreconditionUnmet.
Predicate parse_predicate(const std::string& text);
std::string to_string(const Predicate& p);

struct SearchSpec {
  int max_genus = 0;
  std::optional<int> type_min;
  std::optional<int> type_max;
  Predicate predicate;
  /// 0 lets the runtime decide.
  int threads = 0;
};

struct SearchResult {
  /// Sorted by genus, then generator list.
  std::vector<DegreeReport> rows;
  std::uint64_t visited = 0;
  /// Semigroups inside the type filter with bideg > cdeg.
  std::uint64_t violations = 0;
};

/// Every numerical semigroup of genus exactly g, ordered by generator list.
/// Single-threaded tree walk.
std::vector<NumericalSemigroup> semigroups_of_genus(int g);

/// Per-genus counts 0..max_genus from the semigroup tree.
std::vector<std::uint64_t> count_by_genus(int max_genus);

/// Reference walk: one thread, depth first.
SearchResult search_serial(const SearchSpec& spec);

/// OpenMP walk over independent subtrees. Same result as search_serial for
/// every thread count.
SearchResult search_parallel(const SearchSpec& spec);

}  // namespace canondeg
